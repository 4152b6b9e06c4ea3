#include "bg/removal.hpp"

#include <algorithm>

#include "bg/atlas.hpp"
#include "bg/canon.hpp"
#include "bg/lab.hpp"
#include "bg/twins.hpp"

namespace bg {

Degree2Plan classify_degree2(const Graph& h, const LabeledKB& kb, int q) {
  if (!h.is_connected()) throw std::invalid_argument("host must be connected");
  if (!is_twin_free(h)) throw std::invalid_argument("host must be twin-free");
  if (kb.host_n != h.n()) throw std::invalid_argument("biclique graph does not belong to this host");
  if (q < 0 || q >= kb.graph.n()) throw std::out_of_range("biclique-graph vertex out of range");
  if (kb.graph.degree(q) != 2) throw std::invalid_argument("vertex does not have degree 2");

  const Biclique& b = kb.bicliques[static_cast<size_t>(q)];
  int left_size = b.left.count(), right_size = b.right.count();

  if (left_size == 1 && right_size == 1) {
    Degree2Plan plan;
    plan.family = 1;
    plan.v = b.left.lowest();
    plan.w = b.right.lowest();
    if (h.closed_neighborhood(plan.v) != h.closed_neighborhood(plan.w))
      throw NoFamilyMatch("edge biclique without equal closed neighborhoods");
    VertexSet common = h.neighbors(plan.v) & h.neighbors(plan.w);
    if (common.count() != 1) throw NoFamilyMatch("edge endpoints must have exactly one common neighbor");
    plan.x = common.lowest();
    plan.independent_set = h.neighbors(plan.x) - b.vertices();
    if (!h.is_independent_set(plan.independent_set))
      throw NoFamilyMatch("neighborhood of the shared vertex is not independent");
    return plan;
  }

  if (std::min(left_size, right_size) == 1 && std::max(left_size, right_size) == 2) {
    Degree2Plan plan;
    plan.family = 2;
    plan.b = (left_size == 1 ? b.left : b.right).lowest();
    VertexSet pair = left_size == 1 ? b.right : b.left;
    int p0 = pair.lowest();
    int p1 = (pair - VertexSet::single(p0)).lowest();
    for (auto [a, c] : {std::pair{p0, p1}, std::pair{p1, p0}}) {
      if (h.neighbors(a) == VertexSet::single(plan.b) &&
          h.neighbors(plan.b) == VertexSet::of({a, c})) {
        plan.a = a;
        plan.c = c;
        return plan;
      }
    }
    throw NoFamilyMatch("no pendant-path orientation fits the K_{1,2} biclique");
  }

  throw NoFamilyMatch("biclique is larger than K_{1,2}");
}

namespace {

void validate_plan(const Graph& h, const Degree2Plan& plan) {
  auto in_range = [&](int v) { return v >= 0 && v < h.n(); };
  if (plan.family == 1) {
    if (!in_range(plan.v) || !in_range(plan.w) || !in_range(plan.x))
      throw std::invalid_argument("plan is stale: vertex out of range");
    VertexSet bvw = VertexSet::of({plan.v, plan.w, plan.x});
    if (h.closed_neighborhood(plan.v) != bvw || h.closed_neighborhood(plan.w) != bvw)
      throw std::invalid_argument("plan is stale: closed neighborhoods changed");
    if (plan.independent_set != h.neighbors(plan.x) - VertexSet::of({plan.v, plan.w}) ||
        !h.is_independent_set(plan.independent_set))
      throw std::invalid_argument("plan is stale: independent set changed");
  } else if (plan.family == 2) {
    if (!in_range(plan.a) || !in_range(plan.b) || !in_range(plan.c))
      throw std::invalid_argument("plan is stale: vertex out of range");
    if (h.neighbors(plan.a) != VertexSet::single(plan.b) ||
        h.neighbors(plan.b) != VertexSet::of({plan.a, plan.c}))
      throw std::invalid_argument("plan is stale: pendant-path structure changed");
  } else {
    throw std::invalid_argument("plan has no family");
  }
}

}  // namespace

HPrimeResult construct_h_prime(const Graph& h, const Degree2Plan& plan) {
  validate_plan(h, plan);
  HPrimeResult r;
  if (plan.family == 2) {
    SubgraphResult sub = remove_vertex(h, plan.a);
    r.graph = sub.graph;
    r.old_to_new = sub.old_to_new;
    return r;
  }
  SubgraphResult base = induced_subgraph(h, h.vertices() - VertexSet::of({plan.v, plan.w}));
  VertexSet copy_neighbors;
  for (int u : plan.independent_set) copy_neighbors.add(base.old_to_new[static_cast<size_t>(u)]);
  Graph g = base.graph.add_vertex(copy_neighbors);
  r.copy_of_x = g.n() - 1;
  g = g.add_vertex(VertexSet::single(base.old_to_new[static_cast<size_t>(plan.x)]));
  r.pendant_on_x = g.n() - 1;
  g = g.add_vertex(VertexSet::single(r.copy_of_x));
  r.pendant_on_copy = g.n() - 1;
  if (!g.is_connected()) throw std::logic_error("rewritten host lost connectivity");
  r.graph = std::move(g);
  r.old_to_new = base.old_to_new;
  return r;
}

RemovalResult remove_degree2(const Graph& host, int q) {
  if (!host.is_connected()) throw std::invalid_argument("host must be connected");
  RemovalResult result;
  result.reduced_host = twin_reduce(host).graph;
  result.kb = biclique_graph(result.reduced_host);
  if (q < 0 || q >= result.kb.graph.n()) throw std::out_of_range("biclique-graph vertex out of range");
  if (result.kb.graph.degree(q) != 2) throw std::invalid_argument("vertex does not have degree 2");
  Graph target = remove_vertex(result.kb.graph, q).graph;

  bool small = result.reduced_host.n() <= 6;
  try {
    Degree2Plan plan = classify_degree2(result.reduced_host, result.kb, q);
    HPrimeResult built = construct_h_prime(result.reduced_host, plan);
    if (are_isomorphic(biclique_graph(built.graph).graph, target)) {
      result.h_prime = built.graph;
      result.plan = plan;
      result.verified = true;
      return result;
    }
    if (!small) throw std::logic_error("degree-2 removal failed verification on a large host");
  } catch (const NoFamilyMatch&) {
    if (!small) throw std::logic_error("no degree-2 family matched a host with >= 7 vertices");
  }

  // Small reduced host: search the twin-free catalogue (<= 7 vertices) for
  // any host of the target.
  if (std::optional<Graph> pre = find_preimage(target, 7)) {
    result.h_prime = *pre;
    result.plan.reset();
    result.verified = true;
    return result;
  }
  throw std::logic_error("no small host found for the reduced biclique graph");
}

AnalysisReport analyze_not_biclique(const Graph& g, int max_preimage_n) {
  if (g.n() < 1) throw std::invalid_argument("analysis needs a nonempty graph");
  AnalysisReport report;
  Graph current = g;
  for (;;) {
    ChainEntry entry;
    entry.graph = current;

    P3Report p3 = check_p3_condition(current);
    if (!p3.pass) {
      if (p3_contained(current, *p3.witness).has_value())
        throw std::logic_error("violating triple failed re-verification");
      entry.status = ChainEntry::Status::NotBiclique;
      entry.p3_witness = p3.witness;
      report.chain.push_back(std::move(entry));
      report.verdict = AnalysisReport::Verdict::NotBiclique;
      return report;
    }

    if (current.is_connected() && current.n() >= 1) {
      if (std::optional<Graph> pre = find_preimage(current, max_preimage_n)) {
        if (!are_isomorphic(biclique_graph(*pre).graph, current))
          throw std::logic_error("preimage certificate failed re-verification");
        entry.status = ChainEntry::Status::IsBiclique;
        entry.preimage = pre;
        report.chain.push_back(std::move(entry));
        report.verdict = report.chain.size() == 1 ? AnalysisReport::Verdict::IsBiclique
                                                  : AnalysisReport::Verdict::Inconclusive;
        return report;
      }
    }

    int strip = -1;
    for (int v = 0; v < current.n() && strip == -1; ++v)
      if (current.degree(v) == 2) strip = v;
    if (strip == -1) {
      report.chain.push_back(std::move(entry));
      report.verdict = AnalysisReport::Verdict::Inconclusive;
      return report;
    }
    entry.removed_vertex = strip;
    report.chain.push_back(std::move(entry));
    ++report.removals;
    current = remove_vertex(current, strip).graph;
  }
}

}  // namespace bg
