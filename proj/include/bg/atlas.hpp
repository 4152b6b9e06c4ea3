#pragma once

#include <cstdint>
#include <vector>

#include "bg/graph.hpp"

namespace bg {

/// Default cap for exhaustive generation.
inline constexpr int kDefaultGenCap = 8;

/// All connected graphs on n vertices, one per isomorphism class, each in
/// canonical labeling, ordered by canonical key. Built by canonical
/// augmentation: every canonical (n-1)-vertex graph is extended by one new
/// vertex with every nonempty neighborhood, then deduplicated.
std::vector<Graph> generate_connected_graphs(int n, int jobs = 1);

/// The twin-free subset of the stream above (no pair with N(u) = N(v)).
std::vector<Graph> generate_twin_free_connected(int n, int jobs = 1);

/// Independent oracle for generation counts: enumerates all 2^(n(n-1)/2)
/// labeled graphs, keeps the connected ones (optionally also twin-free), and
/// deduplicates by canonical form. n <= 7.
std::uint64_t count_connected_labeled_dedup(int n, bool twin_free, int jobs = 1);

/// Memoized per-order atlases shared by sweeps; thread-safe, built on demand.
class AtlasCache {
 public:
  static const std::vector<Graph>& connected(int n);
  static const std::vector<Graph>& twin_free(int n);
};

}  // namespace bg
