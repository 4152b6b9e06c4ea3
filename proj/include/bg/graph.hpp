#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bg {

/// Hard cap on vertex counts: a vertex set must fit one machine word.
inline constexpr int kMaxVertices = 64;

/// Set of vertex indices 0..63 packed into one 64-bit word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t(1) << v); }

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  /// {0, 1, ..., n-1}
  static constexpr VertexSet first_n(int n) {
    return n >= 64 ? VertexSet(~std::uint64_t(0)) : VertexSet((std::uint64_t(1) << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int count() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }

  void add(int v) { bits_ |= std::uint64_t(1) << v; }
  void remove(int v) { bits_ &= ~(std::uint64_t(1) << v); }

  /// Smallest member, or -1 when empty.
  int lowest() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }
  /// Numeric order on the underlying word; used only as a deterministic tie-break.
  friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.bits_ < b.bits_; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint64_t m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  /// Iterates members in increasing order.
  class iterator {
   public:
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
   private:
    std::uint64_t rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

/// Finite simple undirected graph on vertices 0..n-1, stored as per-vertex
/// neighbor masks. Values are immutable after construction; operations that
/// change a graph return a new value (plus a relabeling map when vertices
/// are renumbered).
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n) : n_(check_order(n)), adj_(static_cast<size_t>(n)) {}

  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);
  /// Adopts an adjacency table after validating symmetry / loop / range invariants.
  static Graph from_adjacency(std::vector<VertexSet> adj);

  static Graph path(int k);
  static Graph cycle(int k);
  static Graph complete(int n);
  static Graph complete_bipartite(int a, int b);
  static Graph star(int leaves);  // K_{1,s}, center = vertex 0
  /// i ~ j iff the circular distance |i-j| mod k lies in `distances`.
  static Graph circulant(int k, const std::vector<int>& distances);

  int n() const { return n_; }
  long edge_count() const;
  VertexSet vertices() const { return VertexSet::first_n(n_); }

  bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u)].contains(v); }
  VertexSet neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  VertexSet closed_neighborhood(int v) const { return adj_[static_cast<size_t>(v)] | VertexSet::single(v); }
  int degree(int v) const { return adj_[static_cast<size_t>(v)].count(); }
  std::vector<int> degree_sequence() const;  // sorted ascending

  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  bool is_independent_set(VertexSet s) const;
  bool is_connected() const;

  /// Re-checks the representation invariants; throws std::logic_error on violation.
  void validate() const;

  /// Graph plus one new vertex (index n) adjacent to `attach`.
  Graph add_vertex(VertexSet attach) const;

  /// Labeled equality (same n, same adjacency).
  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  static int check_order(int n);
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexSet> adj_;

  friend struct GraphBuilder;
};

/// Result of an operation that renumbers vertices.
struct SubgraphResult {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for vertices outside the kept set
  std::vector<int> new_to_old;
};

/// Subgraph induced by s, relabeled 0..|s|-1 in ascending original order.
SubgraphResult induced_subgraph(const Graph& g, VertexSet s);
SubgraphResult remove_vertex(const Graph& g, int v);

}  // namespace bg
