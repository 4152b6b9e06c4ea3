#pragma once

#include <optional>
#include <vector>

#include "bg/graph.hpp"

namespace bg {

/// Induced path on three vertices: x ~ y ~ z, x and z nonadjacent, x < z.
struct InducedP3 {
  int x, y, z;
  friend bool operator==(const InducedP3&, const InducedP3&) = default;
};

/// Every induced P3, each unordered path listed once.
std::vector<InducedP3> induced_p3s(const Graph& g);

/// How one induced P3 sits inside a diamond or gem.
struct P3Containment {
  enum class Kind { Diamond, Gem };
  Kind kind;
  int w1 = -1;  // diamond: the apex; gem: first extra vertex
  int w2 = -1;  // gem only: second extra vertex
};

/// Searches for a diamond (one vertex adjacent to x, y, z) or a gem (a pair
/// completing a 5-set that induces a gem covering {x,y,z}). The returned
/// witness is re-verified structurally. Throws when the triple is not an
/// induced P3 of g.
std::optional<P3Containment> p3_contained(const Graph& g, const InducedP3& p3);

/// Outcome of the necessary condition for membership in the biclique-graph
/// class: every induced P3 must lie inside an induced diamond or gem.
/// A failure is a sound certificate that g is not a biclique graph.
struct P3Report {
  bool pass = true;
  std::optional<InducedP3> witness;  // a violating triple when pass == false
  // with trace: one containment per induced P3, in induced_p3s order
  std::vector<std::pair<InducedP3, P3Containment>> containments;
};

P3Report check_p3_condition(const Graph& g, bool trace = false);

/// 4-set inducing exactly five edges (K4 minus one edge).
bool is_diamond_set(const Graph& g, VertexSet four);
/// 5-set inducing seven edges: an induced P4 plus a universal vertex.
bool is_gem_set(const Graph& g, VertexSet five);

}  // namespace bg
