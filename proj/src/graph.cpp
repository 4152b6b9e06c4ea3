#include "bg/graph.hpp"

#include <algorithm>
#include <string>

namespace bg {

int Graph::check_order(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  if (n > kMaxVertices)
    throw std::invalid_argument("vertex count " + std::to_string(n) + " exceeds cap " +
                                std::to_string(kMaxVertices));
  return n;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range 0.." + std::to_string(n_ - 1));
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.adj_[static_cast<size_t>(u)].add(v);
    g.adj_[static_cast<size_t>(v)].add(u);
  }
  return g;
}

Graph Graph::from_adjacency(std::vector<VertexSet> adj) {
  Graph g;
  g.n_ = check_order(static_cast<int>(adj.size()));
  g.adj_ = std::move(adj);
  g.validate();
  return g;
}

Graph Graph::path(int k) {
  if (k < 1) throw std::invalid_argument("path needs at least one vertex");
  Graph g(k);
  for (int i = 0; i + 1 < k; ++i) {
    g.adj_[static_cast<size_t>(i)].add(i + 1);
    g.adj_[static_cast<size_t>(i + 1)].add(i);
  }
  return g;
}

Graph Graph::cycle(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least three vertices");
  Graph g = path(k);
  g.adj_[0].add(k - 1);
  g.adj_[static_cast<size_t>(k - 1)].add(0);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.adj_[static_cast<size_t>(v)] = VertexSet::first_n(n) - VertexSet::single(v);
  return g;
}

Graph Graph::complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("both parts must be nonempty");
  Graph g(check_order(a + b));
  VertexSet left = VertexSet::first_n(a);
  VertexSet right = VertexSet::first_n(a + b) - left;
  for (int v : left) g.adj_[static_cast<size_t>(v)] = right;
  for (int v : right) g.adj_[static_cast<size_t>(v)] = left;
  return g;
}

Graph Graph::star(int leaves) { return complete_bipartite(1, leaves); }

Graph Graph::circulant(int k, const std::vector<int>& distances) {
  if (k < 3) throw std::invalid_argument("circulant needs at least three vertices");
  Graph g(k);
  for (int d : distances) {
    if (d < 1 || d > k / 2) throw std::invalid_argument("circulant distance out of range 1..k/2");
    for (int i = 0; i < k; ++i) {
      int j = (i + d) % k;
      g.adj_[static_cast<size_t>(i)].add(j);
      g.adj_[static_cast<size_t>(j)].add(i);
    }
  }
  return g;
}

long Graph::edge_count() const {
  long twice = 0;
  for (const VertexSet& s : adj_) twice += s.count();
  return twice / 2;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> deg(static_cast<size_t>(n_));
  for (int v = 0; v < n_; ++v) deg[static_cast<size_t>(v)] = degree(v);
  std::sort(deg.begin(), deg.end());
  return deg;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<size_t>(u)] - VertexSet::first_n(u + 1)) out.emplace_back(u, v);
  return out;
}

bool Graph::is_independent_set(VertexSet s) const {
  if (!s.is_subset_of(vertices())) throw std::out_of_range("set member out of range");
  for (int v : s)
    if (neighbors(v).intersects(s)) return false;
  return true;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  VertexSet reached = VertexSet::single(0);
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= neighbors(v);
    frontier = next - reached;
    reached |= next;
  }
  return reached == vertices();
}

void Graph::validate() const {
  for (int v = 0; v < n_; ++v) {
    VertexSet nb = adj_[static_cast<size_t>(v)];
    if (nb.contains(v)) throw std::logic_error("self-loop at vertex " + std::to_string(v));
    if (!nb.is_subset_of(vertices())) throw std::logic_error("neighbor index out of range");
    for (int u : nb)
      if (!adjacent(u, v)) throw std::logic_error("asymmetric adjacency");
  }
}

Graph Graph::add_vertex(VertexSet attach) const {
  if (!attach.is_subset_of(vertices())) throw std::out_of_range("attachment set out of range");
  Graph g(n_ + 1);
  g.adj_ = adj_;
  g.adj_.push_back(attach);
  for (int v : attach) g.adj_[static_cast<size_t>(v)].add(n_);
  return g;
}

SubgraphResult induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) throw std::out_of_range("set member out of range");
  SubgraphResult r;
  r.old_to_new.assign(static_cast<size_t>(g.n()), -1);
  r.new_to_old = s.to_vector();
  for (int i = 0; i < static_cast<int>(r.new_to_old.size()); ++i)
    r.old_to_new[static_cast<size_t>(r.new_to_old[static_cast<size_t>(i)])] = i;
  Graph sub(s.count());
  std::vector<VertexSet> adj(static_cast<size_t>(s.count()));
  for (int i = 0; i < static_cast<int>(r.new_to_old.size()); ++i) {
    VertexSet kept = g.neighbors(r.new_to_old[static_cast<size_t>(i)]) & s;
    VertexSet relabeled;
    for (int v : kept) relabeled.add(r.old_to_new[static_cast<size_t>(v)]);
    adj[static_cast<size_t>(i)] = relabeled;
  }
  r.graph = Graph::from_adjacency(std::move(adj));
  return r;
}

SubgraphResult remove_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) throw std::out_of_range("vertex out of range");
  return induced_subgraph(g, g.vertices() - VertexSet::single(v));
}

}  // namespace bg
