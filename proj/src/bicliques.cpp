#include "bg/bicliques.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace bg {

namespace {

struct PairHash {
  size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
    return std::hash<std::uint64_t>()(p.first * 0x9e3779b97f4a7c15ull ^ p.second);
  }
};

using StateKey = std::pair<std::uint64_t, std::uint64_t>;

StateKey state_key(VertexSet x, VertexSet y) {
  Biclique b{x, y};
  b = b.normalized();
  return {b.left.bits(), b.right.bits()};
}

// Vertices that may join side `x` of the state (x, y): outside the state,
// nonadjacent to all of x, adjacent to all of y.
VertexSet addable(const Graph& g, VertexSet x, VertexSet y) {
  VertexSet can(~std::uint64_t(0));
  for (int v : y) can &= g.neighbors(v);
  for (int v : x) can = can - g.neighbors(v);
  return (can & g.vertices()) - (x | y);
}

}  // namespace

bool is_biclique(const Graph& g, const Biclique& cand) {
  VertexSet all = g.vertices();
  if (!cand.left.is_subset_of(all) || !cand.right.is_subset_of(all))
    throw std::out_of_range("biclique member out of range");
  if (cand.left.empty() || cand.right.empty()) return false;
  if (cand.left.intersects(cand.right)) return false;
  if (!g.is_independent_set(cand.left) || !g.is_independent_set(cand.right)) return false;
  for (int u : cand.left)
    if (!cand.right.is_subset_of(g.neighbors(u))) return false;
  return addable(g, cand.left, cand.right).empty() && addable(g, cand.right, cand.left).empty();
}

std::vector<Biclique> enumerate_bicliques(const Graph& g) {
  if (g.n() < 2) throw std::invalid_argument("biclique enumeration needs n >= 2");
  std::unordered_set<StateKey, PairHash> visited;
  std::unordered_set<StateKey, PairHash> found;
  std::vector<std::pair<VertexSet, VertexSet>> stack;

  for (auto [u, v] : g.edges()) {
    StateKey k = state_key(VertexSet::single(u), VertexSet::single(v));
    if (visited.insert(k).second) stack.emplace_back(VertexSet::single(u), VertexSet::single(v));
  }
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    VertexSet grow_x = addable(g, x, y);
    VertexSet grow_y = addable(g, y, x);
    if (grow_x.empty() && grow_y.empty()) {
      found.insert(state_key(x, y));
      continue;
    }
    for (int w : grow_x) {
      StateKey k = state_key(x | VertexSet::single(w), y);
      if (visited.insert(k).second) stack.emplace_back(x | VertexSet::single(w), y);
    }
    for (int w : grow_y) {
      StateKey k = state_key(x, y | VertexSet::single(w));
      if (visited.insert(k).second) stack.emplace_back(x, y | VertexSet::single(w));
    }
  }

  std::vector<Biclique> out;
  out.reserve(found.size());
  for (const StateKey& k : found) {
    Biclique b{VertexSet(k.first), VertexSet(k.second)};
    if (!is_biclique(g, b)) throw std::logic_error("non-maximal state escaped biclique enumeration");
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Biclique> brute_force_bicliques(const Graph& g) {
  if (g.n() < 2) throw std::invalid_argument("biclique enumeration needs n >= 2");
  if (g.n() > 20) throw std::invalid_argument("subset-scan oracle is limited to n <= 20");
  std::vector<Biclique> passing;
  std::uint64_t limit = std::uint64_t(1) << g.n();
  for (std::uint64_t bits = 3; bits < limit; ++bits) {
    VertexSet s(bits);
    if (s.count() < 2) continue;
    int v = s.lowest();
    VertexSet y = g.neighbors(v) & s;
    if (y.empty()) continue;  // v isolated inside s
    VertexSet x = s - y;
    bool ok = true;
    for (int u : x)
      if ((g.neighbors(u) & s) != y) { ok = false; break; }
    if (ok)
      for (int u : y)
        if ((g.neighbors(u) & s) != x) { ok = false; break; }
    if (ok) passing.push_back(Biclique{x, y}.normalized());
  }
  std::vector<Biclique> out;
  for (const Biclique& b : passing) {
    bool maximal = true;
    for (const Biclique& other : passing)
      if (b.vertices() != other.vertices() && b.vertices().is_subset_of(other.vertices())) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bg
