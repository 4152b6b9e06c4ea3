#pragma once

#include <vector>

#include "bg/graph.hpp"

namespace bg {

/// Partition of V(G) into maximal classes of equal open neighborhoods.
/// Vertices in one class are pairwise nonadjacent false twins; singleton
/// classes cover everything else.
struct TwinPartition {
  std::vector<VertexSet> classes;   // ordered by smallest member
  std::vector<int> representatives; // smallest index of each class

  bool all_singletons() const {
    for (const VertexSet& c : classes)
      if (c.count() > 1) return false;
    return true;
  }
};

TwinPartition false_twin_classes(const Graph& g);

bool is_twin_free(const Graph& g);

struct TwinReduction {
  Graph graph;                  // one representative kept per class
  std::vector<int> old_to_new;  // every old vertex -> new index of its class representative
  std::vector<int> new_to_old;  // new index -> the representative it came from
};

/// Deletes all non-representative members of every class in one pass. The
/// result is checked to be twin-free; a std::logic_error diagnostic is raised
/// otherwise instead of re-applying the pass.
TwinReduction twin_reduce(const Graph& g);

}  // namespace bg
