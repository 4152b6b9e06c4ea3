#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bg/graph.hpp"

namespace bg {

/// Default size cap for the generic canonicalization path.
inline constexpr int kDefaultCanonCap = 16;

/// Relabeling-invariant identifier of an isomorphism class: the graph6
/// record of the labeling whose upper-triangle bit string (column-major,
/// the graph6 bit order) is lexicographically smallest. Two graphs have
/// equal keys iff they are isomorphic.
struct CanonicalForm {
  std::string key;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) { return a.key < b.key; }
};

struct CanonResult {
  CanonicalForm form;
  Graph graph;              // g relabeled into the canonical order
  std::vector<int> order;   // order[position] = original vertex
};

/// Backtracking over vertex orderings, keeping only orderings that can still
/// reach the minimal bit string (per-level minimal-column selection, incumbent
/// pruning, and collapsing of interchangeable twin candidates).
CanonResult canonicalize(const Graph& g, int cap = kDefaultCanonCap);
CanonicalForm canonical_form(const Graph& g, int cap = kDefaultCanonCap);

/// Reference path: tries all n! orderings. n <= 9.
CanonicalForm canonical_form_exhaustive(const Graph& g);

/// Edge-preserving bijection test. When `witness` is non-null and the graphs
/// are isomorphic, *witness maps vertices of a onto vertices of b; the map is
/// re-verified edge by edge before returning.
bool are_isomorphic(const Graph& a, const Graph& b, std::vector<int>* witness = nullptr);

}  // namespace bg
