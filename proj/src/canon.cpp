#include "bg/canon.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bg/io.hpp"

namespace bg {

namespace {

// Column value of vertex v placed at position k: bits adjacent(order[i], v)
// for i = 0..k-1, bit for i=0 most significant. Tuple order over columns
// equals lexicographic order of the graph6 bit stream.
std::uint64_t column_value(const Graph& g, const std::vector<int>& order, int k, int v) {
  std::uint64_t val = 0;
  VertexSet nb = g.neighbors(v);
  for (int i = 0; i < k; ++i) val = (val << 1) | (nb.contains(order[static_cast<size_t>(i)]) ? 1 : 0);
  return val;
}

struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<std::uint64_t> best_cols;
  std::vector<int> best_order;
  std::vector<std::uint64_t> cols;
  std::vector<int> order;
  bool have_best = false;

  explicit CanonSearch(const Graph& graph)
      : g(graph),
        n(graph.n()),
        best_cols(static_cast<size_t>(graph.n())),
        best_order(static_cast<size_t>(graph.n())),
        cols(static_cast<size_t>(graph.n())),
        order(static_cast<size_t>(graph.n())) {}

  void run() {
    if (n == 0) { have_best = true; return; }
    dfs(0, VertexSet());
  }

  void dfs(int k, VertexSet placed) {
    // Relation of cols[0..k) to the incumbent, recomputed here because the
    // incumbent may have improved inside a sibling subtree.
    int rel = 0;  // -1 strictly below the incumbent, 0 equal so far
    if (have_best) {
      for (int i = 0; i < k; ++i) {
        std::uint64_t c = cols[static_cast<size_t>(i)], bc = best_cols[static_cast<size_t>(i)];
        if (c != bc) {
          rel = c < bc ? -1 : 1;
          break;
        }
      }
      if (rel > 0) return;
    }
    if (k == n) {
      if (!have_best || rel < 0) {
        best_cols = cols;
        best_order = order;
        have_best = true;
      }
      return;
    }
    std::uint64_t min_val = ~std::uint64_t(0);
    int cand[kMaxVertices];
    int ncand = 0;
    for (int v : g.vertices() - placed) {
      std::uint64_t val = column_value(g, order, k, v);
      if (val < min_val) {
        min_val = val;
        ncand = 0;
      }
      if (val == min_val) cand[ncand++] = v;
    }
    // Only minimal next columns can reach the subtree minimum.
    if (have_best && rel == 0 && min_val > best_cols[static_cast<size_t>(k)]) return;

    // Interchangeable candidates (twins) lead to identical strings; keep one.
    std::uint64_t seen_open[kMaxVertices];
    std::uint64_t seen_closed[kMaxVertices];
    int nseen = 0;
    for (int ci = 0; ci < ncand; ++ci) {
      int v = cand[ci];
      std::uint64_t open = g.neighbors(v).bits();
      std::uint64_t closed = open | (std::uint64_t(1) << v);
      bool dup = false;
      for (int si = 0; si < nseen && !dup; ++si)
        dup = seen_open[si] == open || seen_closed[si] == closed;
      if (dup) continue;
      seen_open[nseen] = open;
      seen_closed[nseen] = closed;
      ++nseen;

      cols[static_cast<size_t>(k)] = min_val;
      order[static_cast<size_t>(k)] = v;
      dfs(k + 1, placed | VertexSet::single(v));
    }
  }
};

Graph apply_order(const Graph& g, const std::vector<int>& order) {
  int n = g.n();
  std::vector<int> pos(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
  std::vector<VertexSet> adj(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    VertexSet re;
    for (int v : g.neighbors(order[static_cast<size_t>(i)])) re.add(pos[static_cast<size_t>(v)]);
    adj[static_cast<size_t>(i)] = re;
  }
  return Graph::from_adjacency(std::move(adj));
}

}  // namespace

CanonResult canonicalize(const Graph& g, int cap) {
  if (g.n() > cap)
    throw std::invalid_argument("canonicalization cap exceeded: n=" + std::to_string(g.n()) +
                                " cap=" + std::to_string(cap));
  CanonSearch search(g);
  search.run();
  CanonResult r;
  r.order = search.best_order;
  r.graph = apply_order(g, r.order);
  r.form.key = to_graph6(r.graph);
  return r;
}

CanonicalForm canonical_form(const Graph& g, int cap) { return canonicalize(g, cap).form; }

CanonicalForm canonical_form_exhaustive(const Graph& g) {
  if (g.n() > 9) throw std::invalid_argument("exhaustive canonicalization is limited to n <= 9");
  int n = g.n();
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  bool have = false;
  std::vector<std::uint64_t> best, cur(static_cast<size_t>(n));
  std::vector<int> best_perm = perm;
  do {
    for (int k = 0; k < n; ++k) cur[static_cast<size_t>(k)] = column_value(g, perm, k, perm[static_cast<size_t>(k)]);
    if (!have || cur < best) {
      best = cur;
      best_perm = perm;
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  CanonicalForm f;
  f.key = n == 0 ? to_graph6(g) : to_graph6(apply_order(g, best_perm));
  return f;
}

namespace {

// Joint color refinement: classes by (color, sorted neighbor colors),
// recomputed until stable, with the class ids assigned consistently across
// both graphs. Returns false when the class histograms diverge.
bool joint_refine(const Graph& a, const Graph& b, std::vector<int>& ca, std::vector<int>& cb) {
  int na = a.n();
  ca.assign(static_cast<size_t>(na), 0);
  cb.assign(static_cast<size_t>(b.n()), 0);
  // Seed with (degree, triangle count) — cheap invariants that split most classes early.
  auto seed = [](const Graph& g, int v) {
    int tri = 0;
    for (int u : g.neighbors(v)) tri += (g.neighbors(u) & g.neighbors(v)).count();
    return std::pair<int, int>(g.degree(v), tri);
  };
  {
    std::map<std::pair<int, int>, int> ids;
    for (int v = 0; v < na; ++v) ids.emplace(seed(a, v), 0);
    for (int v = 0; v < b.n(); ++v) ids.emplace(seed(b, v), 0);
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (int v = 0; v < na; ++v) ca[static_cast<size_t>(v)] = ids[seed(a, v)];
    for (int v = 0; v < b.n(); ++v) cb[static_cast<size_t>(v)] = ids[seed(b, v)];
  }
  for (;;) {
    using Sig = std::pair<int, std::vector<int>>;
    auto signature = [](const Graph& g, const std::vector<int>& col, int v) {
      std::vector<int> nb;
      for (int u : g.neighbors(v)) nb.push_back(col[static_cast<size_t>(u)]);
      std::sort(nb.begin(), nb.end());
      return Sig(col[static_cast<size_t>(v)], std::move(nb));
    };
    std::map<Sig, int> ids;
    for (int v = 0; v < na; ++v) ids.emplace(signature(a, ca, v), 0);
    for (int v = 0; v < b.n(); ++v) ids.emplace(signature(b, cb, v), 0);
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    std::vector<int> ca2(static_cast<size_t>(na)), cb2(static_cast<size_t>(b.n()));
    for (int v = 0; v < na; ++v) ca2[static_cast<size_t>(v)] = ids[signature(a, ca, v)];
    for (int v = 0; v < b.n(); ++v) cb2[static_cast<size_t>(v)] = ids[signature(b, cb, v)];
    bool stable = ca2 == ca && cb2 == cb;
    ca = std::move(ca2);
    cb = std::move(cb2);
    if (stable) break;
  }
  std::vector<int> ha = ca, hb = cb;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  return ha == hb;
}

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  const std::vector<int>& ca;
  const std::vector<int>& cb;
  std::vector<int> map_ab;   // a-vertex -> b-vertex or -1
  VertexSet used_b;
  std::vector<int> vorder;   // a-vertices, most-constrained first

  IsoSearch(const Graph& ga, const Graph& gb, const std::vector<int>& colsa, const std::vector<int>& colsb)
      : a(ga), b(gb), ca(colsa), cb(colsb), map_ab(static_cast<size_t>(ga.n()), -1) {
    // Static order: rare color class first, then high degree; refined greedily
    // so each vertex has as many already-placed neighbors as possible.
    int n = a.n();
    std::vector<int> class_size(ca.size() + cb.size(), 0);
    for (int c : ca) ++class_size[static_cast<size_t>(c)];
    std::vector<int> rest(static_cast<size_t>(n));
    std::iota(rest.begin(), rest.end(), 0);
    VertexSet placed;
    while (!rest.empty()) {
      auto score = [&](int v) {
        int anchored = (a.neighbors(v) & placed).count();
        return std::tuple<int, int, int>(-anchored, class_size[static_cast<size_t>(ca[static_cast<size_t>(v)])],
                                         -a.degree(v));
      };
      auto it = std::min_element(rest.begin(), rest.end(),
                                 [&](int u, int v) { return score(u) < score(v); });
      vorder.push_back(*it);
      placed.add(*it);
      rest.erase(it);
    }
  }

  bool dfs(size_t depth) {
    if (depth == vorder.size()) return true;
    int u = vorder[depth];
    for (int w = 0; w < b.n(); ++w) {
      if (used_b.contains(w) || cb[static_cast<size_t>(w)] != ca[static_cast<size_t>(u)]) continue;
      bool ok = true;
      for (size_t d = 0; d < depth && ok; ++d) {
        int u2 = vorder[d];
        ok = a.adjacent(u, u2) == b.adjacent(w, map_ab[static_cast<size_t>(u2)]);
      }
      if (!ok) continue;
      map_ab[static_cast<size_t>(u)] = w;
      used_b.add(w);
      if (dfs(depth + 1)) return true;
      used_b.remove(w);
      map_ab[static_cast<size_t>(u)] = -1;
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b, std::vector<int>* witness) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  if (a.n() == 0) {
    if (witness) witness->clear();
    return true;
  }
  std::vector<int> ca, cb;
  if (!joint_refine(a, b, ca, cb)) return false;
  IsoSearch search(a, b, ca, cb);
  if (!search.dfs(0)) return false;
  for (int u = 0; u < a.n(); ++u)
    for (int v = u + 1; v < a.n(); ++v)
      if (a.adjacent(u, v) !=
          b.adjacent(search.map_ab[static_cast<size_t>(u)], search.map_ab[static_cast<size_t>(v)]))
        throw std::logic_error("isomorphism witness failed edge verification");
  if (witness) *witness = search.map_ab;
  return true;
}

}  // namespace bg
