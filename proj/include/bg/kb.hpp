#pragma once

#include <vector>

#include "bg/bicliques.hpp"
#include "bg/graph.hpp"

namespace bg {

/// Biclique graph of a host together with the vertex -> biclique
/// correspondence. KB-vertex i is bicliques[i]; i ~ j iff the two bicliques
/// share a host vertex.
struct LabeledKB {
  Graph graph;
  std::vector<Biclique> bicliques;
  int host_n = 0;
};

/// Requires a connected host with n >= 2.
LabeledKB biclique_graph(const Graph& host);

/// Number of other bicliques of `host` that intersect b. Throws when b is
/// not a biclique of the host.
int kb_degree(const Graph& host, const Biclique& b);

}  // namespace bg
