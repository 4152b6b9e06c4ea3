#include "bg/lab.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>

#include "bg/atlas.hpp"
#include "bg/canon.hpp"
#include "bg/conditions.hpp"
#include "bg/io.hpp"
#include "bg/parallel.hpp"
#include "bg/twins.hpp"

namespace bg {

using nlohmann::json;

const char* to_string(ItemStatus s) {
  switch (s) {
    case ItemStatus::ProvedYes: return "proved-yes";
    case ItemStatus::ProvedNo: return "proved-no";
    default: return "unknown";
  }
}

json LabReport::to_json(bool include_timing) const {
  json j;
  j["schema_version"] = 1;
  j["claim"] = claim;
  j["params"] = params;
  j["counts"] = counts;
  j["exceptional"] = exceptional;
  json items_json = json::array();
  for (const LabItem& item : items) {
    json ij;
    ij["id"] = item.id;
    if (item.status) ij["status"] = to_string(*item.status);
    ij["detail"] = item.detail;
    items_json.push_back(std::move(ij));
  }
  j["items"] = std::move(items_json);
  j["ok"] = ok;
  if (include_timing) j["timing_ms"] = wall_ms;
  return j;
}

namespace {

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
};

json json_vertices(VertexSet s) {
  json arr = json::array();
  for (int v : s) arr.push_back(v);
  return arr;
}

json json_biclique(const Biclique& b) {
  return json{{"left", json_vertices(b.left)}, {"right", json_vertices(b.right)}};
}

// Hypothesis of the degree-bound claim: the biclique contains a K_{1,3}
// (one side has >= 3 vertices) or equals a C_4 (both sides have exactly 2).
bool large_biclique(const Biclique& b) {
  int a = b.left.count(), c = b.right.count();
  return std::max(a, c) >= 3 || (a == 2 && c == 2);
}

}  // namespace

LabReport verify_lemma1(int n, int jobs) {
  if (n != 6 && n != 7) throw std::invalid_argument("the base-case check supports n = 6 or 7");
  Stopwatch watch;
  LabReport report;
  report.claim = "lemma1";
  report.params = json{{"n", n}};
  const std::vector<Graph>& hosts = AtlasCache::twin_free(n);

  struct Violation {
    std::string g6;
    Biclique biclique;
    int degree;
  };
  std::vector<std::vector<Violation>> found(hosts.size());
  std::vector<std::int64_t> checked(hosts.size(), 0);
  parallel_for(hosts.size(), jobs, [&](size_t i) {
    const Graph& h = hosts[i];
    LabeledKB kb = biclique_graph(h);
    for (size_t bi = 0; bi < kb.bicliques.size(); ++bi) {
      if (!large_biclique(kb.bicliques[bi])) continue;
      ++checked[i];
      int deg = kb.graph.degree(static_cast<int>(bi));
      if (deg < 3) found[i].push_back({to_graph6(h), kb.bicliques[bi], deg});
    }
  });

  std::int64_t total_checked = 0, violations = 0;
  for (size_t i = 0; i < hosts.size(); ++i) {
    total_checked += checked[i];
    for (const Violation& v : found[i]) {
      ++violations;
      if (report.exceptional.empty() || report.exceptional.back() != v.g6)
        report.exceptional.push_back(v.g6);
      LabItem item;
      item.id = v.g6;
      item.detail = json{{"biclique", json_biclique(v.biclique)}, {"kb_degree", v.degree}};
      report.items.push_back(std::move(item));
    }
  }
  report.counts["graphs_scanned"] = static_cast<std::int64_t>(hosts.size());
  report.counts["bicliques_checked"] = total_checked;
  report.counts["low_degree_bicliques"] = violations;
  report.counts["exceptional_graphs"] = static_cast<std::int64_t>(report.exceptional.size());
  report.ok = n == 7 ? violations == 0 : report.exceptional.size() == 3;
  report.wall_ms = watch.ms();
  return report;
}

LabReport verify_observation1(int k_min, int k_max, int jobs) {
  if (k_min < 7) throw std::invalid_argument("the removal claim applies to k >= 7 only");
  if (k_max > 12) throw std::invalid_argument("k capped at 12");
  if (k_min > k_max) throw std::invalid_argument("empty k range");
  Stopwatch watch;
  LabReport report;
  report.claim = "observation1";
  report.params = json{{"k_min", k_min}, {"k_max", k_max}};

  std::int64_t removals = 0, failures = 0;
  for (int k = k_min; k <= k_max; ++k) {
    Graph kb = biclique_graph(Graph::cycle(k)).graph;
    std::vector<char> fails(static_cast<size_t>(k), 0);
    parallel_for(static_cast<size_t>(k), jobs, [&](size_t q) {
      Graph rest = remove_vertex(kb, static_cast<int>(q)).graph;
      fails[q] = check_p3_condition(rest).pass ? 0 : 1;
    });
    LabItem item;
    item.id = "k=" + std::to_string(k);
    std::int64_t k_failures = 0;
    for (char f : fails) k_failures += f;
    removals += k;
    failures += k_failures;
    bool all_fail = k_failures == k;
    item.detail = json{{"kb_g6", to_graph6(kb)}, {"removals", k}, {"p3_failures", k_failures},
                       {"all_removals_fail", all_fail}};
    if (!all_fail) report.ok = false;
    report.items.push_back(std::move(item));
  }
  report.counts["removals_checked"] = removals;
  report.counts["p3_failures"] = failures;
  report.wall_ms = watch.ms();
  return report;
}

const KbIndex& KbIndex::up_to(int max_n) {
  static std::mutex mutex;
  static std::map<int, KbIndex> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(max_n);
  if (it != cache.end()) return it->second;
  if (max_n < 2 || max_n > 9) throw std::invalid_argument("preimage search cap out of range 2..9");
  KbIndex index;
  for (int n = 2; n <= max_n; ++n) {
    for (const Graph& host : AtlasCache::twin_free(n)) {
      Entry e;
      e.host = host;
      std::vector<Biclique> bs = enumerate_bicliques(host);
      e.biclique_count = static_cast<int>(bs.size());
      try {
        LabeledKB kb = biclique_graph(host);
        e.kb = kb.graph;
        e.kb_ok = true;
        e.kb_degrees = e.kb.degree_sequence();
      } catch (const std::invalid_argument&) {
        e.kb_ok = false;  // family larger than the vertex cap; can never match
      }
      index.entries_.push_back(std::move(e));
    }
  }
  return cache.emplace(max_n, std::move(index)).first->second;
}

std::optional<Graph> find_preimage(const Graph& g, int max_n) {
  if (!g.is_connected()) return std::nullopt;
  if (g.n() < 1) return std::nullopt;
  std::vector<int> want_deg = g.degree_sequence();
  for (const KbIndex::Entry& e : KbIndex::up_to(max_n).entries()) {
    if (!e.kb_ok || e.biclique_count != g.n() || e.kb_degrees != want_deg) continue;
    if (are_isomorphic(e.kb, g)) return e.host;
  }
  return std::nullopt;
}

namespace {

struct DistinctKb {
  Graph kb;
  std::string host_g6;  // first host in sweep order producing this class
};

// Distinct biclique graphs KB(H) over the twin-free atlas, H with 2..max_n
// vertices, first representative kept.
std::vector<DistinctKb> distinct_biclique_graphs(int max_n) {
  std::vector<DistinctKb> out;
  std::map<std::pair<int, std::vector<int>>, std::vector<size_t>> buckets;
  for (int n = 2; n <= max_n; ++n) {
    for (const Graph& host : AtlasCache::twin_free(n)) {
      Graph kb = biclique_graph(host).graph;
      auto key = std::make_pair(kb.n(), kb.degree_sequence());
      bool seen = false;
      for (size_t idx : buckets[key])
        if (are_isomorphic(out[idx].kb, kb)) {
          seen = true;
          break;
        }
      if (!seen) {
        buckets[key].push_back(out.size());
        out.push_back({std::move(kb), to_graph6(host)});
      }
    }
  }
  return out;
}

bool is_cycle_kb_shape(const Graph& g) {
  int k = g.n();
  if (k < 7) return false;
  return are_isomorphic(g, Graph::circulant(k, {1, 2}));
}

// Re-verifies a preimage certificate independently of find_preimage.
void check_preimage_certificate(const Graph& claimed_host, const Graph& target) {
  if (!are_isomorphic(biclique_graph(claimed_host).graph, target))
    throw std::logic_error("preimage certificate failed re-verification");
}

// Re-verifies a violating triple: must be an induced P3 with no containment.
void check_p3_certificate(const Graph& g, const InducedP3& p3) {
  if (p3_contained(g, p3).has_value())
    throw std::logic_error("induced-P3 certificate failed re-verification");
}

}  // namespace

LabReport test_conjecture1(int max_n, int jobs) {
  Stopwatch watch;
  LabReport report;
  report.claim = "conjecture1";
  report.params = json{{"max_n", max_n}, {"preimage_cap", max_n},
                       {"coverage", "biclique graphs arising from twin-free hosts with at most max_n vertices"}};
  std::vector<DistinctKb> family = distinct_biclique_graphs(max_n);

  std::int64_t excluded = 0;
  std::vector<const DistinctKb*> subjects;
  for (const DistinctKb& d : family) {
    if (is_cycle_kb_shape(d.kb)) {
      ++excluded;
      continue;
    }
    subjects.push_back(&d);
  }

  std::vector<LabItem> items(subjects.size());
  parallel_for(subjects.size(), jobs, [&](size_t i) {
    const Graph& g = subjects[i]->kb;
    LabItem item;
    item.id = to_graph6(g);
    item.detail["first_host"] = subjects[i]->host_g6;
    json per_q = json::array();
    bool yes = false;
    bool all_p3_fail = g.n() > 0;
    for (int q = 0; q < g.n() && !yes; ++q) {
      Graph rest = remove_vertex(g, q).graph;
      json entry{{"q", q}};
      if (!rest.is_connected()) {
        entry["status"] = "disconnected";
        all_p3_fail = false;
      } else if (std::optional<Graph> pre = find_preimage(rest, max_n)) {
        check_preimage_certificate(*pre, rest);
        entry["status"] = "preimage-found";
        entry["preimage_g6"] = to_graph6(*pre);
        yes = true;
        all_p3_fail = false;
      } else {
        P3Report p3 = check_p3_condition(rest);
        if (!p3.pass) {
          check_p3_certificate(rest, *p3.witness);
          entry["status"] = "p3-condition-fails";
          entry["witness"] = json{{"x", p3.witness->x}, {"y", p3.witness->y}, {"z", p3.witness->z}};
        } else {
          entry["status"] = "unknown";
          all_p3_fail = false;
        }
      }
      per_q.push_back(std::move(entry));
    }
    item.detail["removals"] = std::move(per_q);
    item.status = yes ? ItemStatus::ProvedYes : (all_p3_fail ? ItemStatus::ProvedNo : ItemStatus::Unknown);
    items[i] = std::move(item);
  });

  std::int64_t yes = 0, no = 0, unknown = 0;
  for (LabItem& item : items) {
    switch (*item.status) {
      case ItemStatus::ProvedYes: ++yes; break;
      case ItemStatus::ProvedNo: ++no; report.ok = false; break;
      default: ++unknown; break;
    }
    report.items.push_back(std::move(item));
  }
  report.counts["distinct_biclique_graphs"] = static_cast<std::int64_t>(family.size());
  report.counts["excluded_cycle_family"] = excluded;
  report.counts["proved_yes"] = yes;
  report.counts["proved_no"] = no;
  report.counts["unknown"] = unknown;
  report.wall_ms = watch.ms();
  return report;
}

namespace {

// Tw(H) must be an induced C_k plus at most one pendant per cycle vertex.
bool cycle_with_pendants_shape(const Graph& t, int k) {
  VertexSet pendants, core;
  for (int v = 0; v < t.n(); ++v) (t.degree(v) == 1 ? pendants : core).add(v);
  if (core.count() != k) return false;
  Graph cycle_part = induced_subgraph(t, core).graph;
  if (!cycle_part.is_connected()) return false;
  for (int v = 0; v < cycle_part.n(); ++v)
    if (cycle_part.degree(v) != 2) return false;
  for (int p : pendants) {
    int nb = t.neighbors(p).lowest();
    if (!core.contains(nb)) return false;
  }
  for (int c : core)
    if ((t.neighbors(c) & pendants).count() > 1) return false;
  return true;
}

Graph cycle_plus_pendants(int k, const std::vector<int>& pendant_counts) {
  Graph g = Graph::cycle(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < pendant_counts[static_cast<size_t>(i)]; ++j)
      g = g.add_vertex(VertexSet::single(i));
  return g;
}

Graph add_false_twin(const Graph& g, int v) { return g.add_vertex(g.neighbors(v)); }

}  // namespace

LabReport test_conjecture2(int k_max, int max_n, int jobs) {
  if (k_max < 7) throw std::invalid_argument("the cycle family starts at k = 7");
  Stopwatch watch;
  LabReport report;
  report.claim = "conjecture2";
  report.params = json{{"k_max", k_max}, {"max_n", max_n}};

  // Sweep all connected hosts (twins allowed) whose biclique graph matches a
  // cycle family member and test the reduced-shape characterization.
  std::vector<const Graph*> hosts;
  for (int n = 2; n <= max_n; ++n)
    for (const Graph& h : AtlasCache::connected(n)) hosts.push_back(&h);

  std::vector<char> matched(hosts.size(), 0), consistent(hosts.size(), 0);
  std::vector<std::string> host_g6(hosts.size());
  std::vector<int> matched_k(hosts.size(), 0);
  parallel_for(hosts.size(), jobs, [&](size_t i) {
    const Graph& h = *hosts[i];
    Graph kb = biclique_graph(h).graph;
    int k = kb.n();
    if (k < 7 || k > k_max || !are_isomorphic(kb, Graph::circulant(k, {1, 2}))) return;
    matched[i] = 1;
    matched_k[i] = k;
    host_g6[i] = to_graph6(h);
    consistent[i] = cycle_with_pendants_shape(twin_reduce(h).graph, k) ? 1 : 0;
  });

  std::int64_t matches = 0, counterexamples = 0;
  for (size_t i = 0; i < hosts.size(); ++i) {
    if (!matched[i]) continue;
    ++matches;
    LabItem item;
    item.id = host_g6[i];
    item.detail = json{{"k", matched_k[i]}, {"direction", "only-if"},
                       {"consistent", static_cast<bool>(consistent[i])}};
    if (!consistent[i]) {
      ++counterexamples;
      report.ok = false;
      report.exceptional.push_back(host_g6[i]);
    }
    report.items.push_back(std::move(item));
  }

  // Positive family: cycles with pendants (and one false twin added) must
  // reproduce the cycle biclique graph and pass the shape test.
  std::int64_t family_checked = 0, family_consistent = 0;
  for (int k = 7; k <= std::min(k_max, 9); ++k) {
    std::vector<std::vector<int>> patterns;
    patterns.push_back(std::vector<int>(static_cast<size_t>(k), 0));
    patterns.push_back(std::vector<int>(static_cast<size_t>(k), 1));
    std::vector<int> one(static_cast<size_t>(k), 0);
    one[0] = 1;
    patterns.push_back(one);
    std::vector<int> alternating(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; i += 2) alternating[static_cast<size_t>(i)] = 1;
    patterns.push_back(alternating);
    for (size_t pi = 0; pi < patterns.size(); ++pi) {
      for (bool with_twin : {false, true}) {
        Graph h = cycle_plus_pendants(k, patterns[pi]);
        if (with_twin) h = add_false_twin(h, 0);
        ++family_checked;
        Graph kb = biclique_graph(h).graph;
        bool ok = kb.n() == k && are_isomorphic(kb, Graph::circulant(k, {1, 2})) &&
                  cycle_with_pendants_shape(twin_reduce(h).graph, k);
        if (ok) ++family_consistent;
        LabItem item;
        item.id = to_graph6(h);
        item.detail = json{{"k", k}, {"direction", "if"}, {"pattern", static_cast<int>(pi)},
                           {"false_twin_added", with_twin}, {"consistent", ok}};
        if (!ok) report.ok = false;
        report.items.push_back(std::move(item));
      }
    }
  }

  report.counts["hosts_scanned"] = static_cast<std::int64_t>(hosts.size());
  report.counts["cycle_kb_matches"] = matches;
  report.counts["shape_counterexamples"] = counterexamples;
  report.counts["positive_family_checked"] = family_checked;
  report.counts["positive_family_consistent"] = family_consistent;
  report.wall_ms = watch.ms();
  return report;
}

LabReport test_conjecture3(int max_n, int jobs) {
  Stopwatch watch;
  LabReport report;
  report.claim = "conjecture3";
  report.params = json{{"max_n", max_n}, {"preimage_cap", max_n}};
  std::vector<DistinctKb> family = distinct_biclique_graphs(max_n);

  struct Subject {
    const DistinctKb* d;
    int q;
  };
  std::vector<Subject> subjects;
  for (const DistinctKb& d : family) {
    TwinPartition classes = false_twin_classes(d.kb);
    for (const VertexSet& cls : classes.classes)
      if (cls.count() > 1)
        for (int q : cls) subjects.push_back({&d, q});
  }

  std::vector<LabItem> items(subjects.size());
  parallel_for(subjects.size(), jobs, [&](size_t i) {
    const Graph& g = subjects[i].d->kb;
    int q = subjects[i].q;
    LabItem item;
    item.id = to_graph6(g) + " q=" + std::to_string(q);
    item.detail = json{{"g6", to_graph6(g)}, {"q", q}};
    Graph rest = remove_vertex(g, q).graph;
    if (std::optional<Graph> pre = find_preimage(rest, max_n)) {
      check_preimage_certificate(*pre, rest);
      item.status = ItemStatus::ProvedYes;
      item.detail["preimage_g6"] = to_graph6(*pre);
    } else {
      P3Report p3 = check_p3_condition(rest);
      if (!p3.pass) {
        check_p3_certificate(rest, *p3.witness);
        item.status = ItemStatus::ProvedNo;
        item.detail["witness"] = json{{"x", p3.witness->x}, {"y", p3.witness->y}, {"z", p3.witness->z}};
      } else {
        item.status = ItemStatus::Unknown;
      }
    }
    items[i] = std::move(item);
  });

  std::int64_t yes = 0, no = 0, unknown = 0;
  for (LabItem& item : items) {
    switch (*item.status) {
      case ItemStatus::ProvedYes: ++yes; break;
      case ItemStatus::ProvedNo: ++no; report.ok = false; break;
      default: ++unknown; break;
    }
    report.items.push_back(std::move(item));
  }
  report.counts["distinct_biclique_graphs"] = static_cast<std::int64_t>(family.size());
  report.counts["twin_vertex_removals"] = static_cast<std::int64_t>(subjects.size());
  report.counts["proved_yes"] = yes;
  report.counts["proved_no"] = no;
  report.counts["unknown"] = unknown;
  report.wall_ms = watch.ms();
  return report;
}

}  // namespace bg
