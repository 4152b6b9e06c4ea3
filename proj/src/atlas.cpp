#include "bg/atlas.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "bg/canon.hpp"
#include "bg/parallel.hpp"
#include "bg/twins.hpp"

namespace bg {

namespace {

void check_gen_order(int n) {
  if (n < 1) throw std::invalid_argument("generation needs n >= 1");
  if (n > 10) throw std::invalid_argument("generation capped well below n=" + std::to_string(n));
}

// One generation level: all canonical connected n-vertex graphs from the
// canonical connected (n-1)-vertex level. Every connected graph has a
// non-cut vertex, so extending every parent by every nonempty neighborhood
// reaches every class.
std::vector<Graph> extend_level(const std::vector<Graph>& parents, int n, int jobs) {
  std::uint64_t nmasks = (std::uint64_t(1) << (n - 1)) - 1;  // nonempty attachment sets
  std::vector<std::vector<std::pair<std::string, Graph>>> found(parents.size());
  parallel_for(parents.size(), jobs, [&](size_t pi) {
    for (std::uint64_t m = 1; m <= nmasks; ++m) {
      Graph candidate = parents[pi].add_vertex(VertexSet(m));
      CanonResult canon = canonicalize(candidate, kMaxVertices);
      found[pi].emplace_back(std::move(canon.form.key), std::move(canon.graph));
    }
  });
  std::vector<std::pair<std::string, Graph>> all;
  for (auto& part : found)
    for (auto& kg : part) all.push_back(std::move(kg));
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> level;
  for (size_t i = 0; i < all.size(); ++i)
    if (i == 0 || all[i].first != all[i - 1].first) level.push_back(std::move(all[i].second));
  return level;
}

}  // namespace

std::vector<Graph> generate_connected_graphs(int n, int jobs) {
  check_gen_order(n);
  std::vector<Graph> level = {Graph(1)};
  for (int k = 2; k <= n; ++k) level = extend_level(level, k, jobs);
  return level;
}

std::vector<Graph> generate_twin_free_connected(int n, int jobs) {
  std::vector<Graph> out;
  for (const Graph& g : generate_connected_graphs(n, jobs))
    if (is_twin_free(g)) out.push_back(g);
  return out;
}

namespace {

// Upper-triangle bit index in graph6 column order: (i, j), i < j.
inline int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<VertexSet> adj(static_cast<size_t>(n));
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((mask >> pair_bit(i, j)) & 1) {
        adj[static_cast<size_t>(i)].add(j);
        adj[static_cast<size_t>(j)].add(i);
      }
  return Graph::from_adjacency(std::move(adj));
}

std::uint64_t mask_from_graph(const Graph& g) {
  std::uint64_t mask = 0;
  for (int j = 1; j < g.n(); ++j)
    for (int i = 0; i < j; ++i)
      if (g.adjacent(i, j)) mask |= std::uint64_t(1) << pair_bit(i, j);
  return mask;
}

}  // namespace

std::uint64_t count_connected_labeled_dedup(int n, bool twin_free, int jobs) {
  if (n < 1 || n > 7) throw std::invalid_argument("labeled enumeration oracle is limited to 1 <= n <= 7");
  if (n == 1) return 1;
  int bits = n * (n - 1) / 2;
  std::uint64_t total = std::uint64_t(1) << bits;
  int workers = std::max(1, jobs);
  std::vector<std::vector<bool>> seen(static_cast<size_t>(workers),
                                      std::vector<bool>(static_cast<size_t>(total), false));
  std::uint64_t chunk = (total + static_cast<std::uint64_t>(workers) - 1) / static_cast<std::uint64_t>(workers);
  parallel_for(static_cast<size_t>(workers), workers, [&](size_t t) {
    std::uint64_t lo = static_cast<std::uint64_t>(t) * chunk;
    std::uint64_t hi = std::min(total, lo + chunk);
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      Graph g = graph_from_mask(n, mask);
      if (!g.is_connected()) continue;
      if (twin_free && !is_twin_free(g)) continue;
      seen[t][static_cast<size_t>(mask_from_graph(canonicalize(g, kMaxVertices).graph))] = true;
    }
  });
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool any = false;
    for (int t = 0; t < workers && !any; ++t) any = seen[static_cast<size_t>(t)][static_cast<size_t>(mask)];
    count += any ? 1 : 0;
  }
  return count;
}

namespace {

std::mutex cache_mutex;
std::map<int, std::vector<Graph>> connected_cache;
std::map<int, std::vector<Graph>> twin_free_cache;

// Extends from the highest cached level so repeated queries share work.
const std::vector<Graph>& connected_locked(int n) {
  check_gen_order(n);
  auto it = connected_cache.find(n);
  if (it != connected_cache.end()) return it->second;
  int base = 0;
  for (auto& [k, graphs] : connected_cache)
    if (k < n) base = std::max(base, k);
  std::vector<Graph> level = base == 0 ? std::vector<Graph>{Graph(1)} : connected_cache[base];
  for (int k = std::max(base, 1) + 1; k <= n; ++k) {
    level = extend_level(level, k, default_jobs());
    connected_cache[k] = level;
  }
  if (n == 1) connected_cache[1] = {Graph(1)};
  return connected_cache[n];
}

}  // namespace

const std::vector<Graph>& AtlasCache::connected(int n) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  return connected_locked(n);
}

const std::vector<Graph>& AtlasCache::twin_free(int n) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = twin_free_cache.find(n);
  if (it == twin_free_cache.end()) {
    std::vector<Graph> filtered;
    for (const Graph& g : connected_locked(n))
      if (is_twin_free(g)) filtered.push_back(g);
    it = twin_free_cache.emplace(n, std::move(filtered)).first;
  }
  return it->second;
}

}  // namespace bg
