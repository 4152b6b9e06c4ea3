#pragma once

#include <random>

#include "bg/graph.hpp"

namespace bgtest {

inline bg::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) edges.emplace_back(u, v);
  return bg::Graph::from_edge_list(n, edges);
}

inline bg::Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
  for (;;) {
    bg::Graph g = random_graph(rng, n, p);
    if (g.is_connected()) return g;
  }
}

inline bg::Graph permuted(std::mt19937_64& rng, const bg::Graph& g) {
  std::vector<int> perm(static_cast<size_t>(g.n()));
  for (int i = 0; i < g.n(); ++i) perm[static_cast<size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    edges.emplace_back(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
  return bg::Graph::from_edge_list(g.n(), edges);
}

// Small named graphs used across suites.
inline bg::Graph diamond() {
  return bg::Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
}

inline bg::Graph paw() { return bg::Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

inline bg::Graph bull() {
  return bg::Graph::from_edge_list(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
}

inline bg::Graph gem() {
  return bg::Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
}

// Five vertices: 0 and 1 universal, 2..4 independent of each other.
inline bg::Graph crown5() {
  return bg::Graph::from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

}  // namespace bgtest
