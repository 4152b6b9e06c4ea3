#pragma once

#include <vector>

#include "bg/graph.hpp"

namespace bg {

/// Maximal induced complete bipartite subgraph, both parts nonempty
/// (minimum K_{1,1}). Normalized so the part holding the smallest vertex
/// index is `left`.
struct Biclique {
  VertexSet left;
  VertexSet right;

  VertexSet vertices() const { return left | right; }

  Biclique normalized() const {
    Biclique b = *this;
    if (!b.left.contains((b.left | b.right).lowest())) std::swap(b.left, b.right);
    return b;
  }

  friend bool operator==(const Biclique& a, const Biclique& b) {
    return a.left == b.left && a.right == b.right;
  }
  friend bool operator<(const Biclique& a, const Biclique& b) {
    return a.left != b.left ? a.left < b.left : a.right < b.right;
  }
};

/// All bicliques of g, normalized and sorted. Branch-and-extend from every
/// edge seed with memoized states; a final maximality check guards each
/// reported biclique. Throws for n < 2.
std::vector<Biclique> enumerate_bicliques(const Graph& g);

/// True iff cand's parts are nonempty, disjoint, independent, completely
/// joined, and not extendable by any outside vertex.
bool is_biclique(const Graph& g, const Biclique& cand);

/// Independent oracle: scans all vertex subsets (n <= 20), keeps those that
/// induce a complete bipartite graph with both parts nonempty, then filters
/// non-maximal sets by pairwise containment.
std::vector<Biclique> brute_force_bicliques(const Graph& g);

}  // namespace bg
