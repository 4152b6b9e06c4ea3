#include "bg/twins.hpp"

#include <algorithm>
#include <map>

namespace bg {

TwinPartition false_twin_classes(const Graph& g) {
  std::map<std::uint64_t, VertexSet> by_neighborhood;
  for (int v = 0; v < g.n(); ++v) by_neighborhood[g.neighbors(v).bits()].add(v);
  TwinPartition p;
  for (auto& [nb, members] : by_neighborhood) p.classes.push_back(members);
  std::sort(p.classes.begin(), p.classes.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.lowest() < b.lowest(); });
  for (const VertexSet& c : p.classes) p.representatives.push_back(c.lowest());
  return p;
}

bool is_twin_free(const Graph& g) {
  TwinPartition p = false_twin_classes(g);
  return static_cast<int>(p.classes.size()) == g.n();
}

TwinReduction twin_reduce(const Graph& g) {
  TwinPartition p = false_twin_classes(g);
  VertexSet kept;
  for (int r : p.representatives) kept.add(r);
  SubgraphResult sub = induced_subgraph(g, kept);
  TwinReduction r;
  r.graph = sub.graph;
  r.new_to_old = sub.new_to_old;
  r.old_to_new.assign(static_cast<size_t>(g.n()), -1);
  for (size_t ci = 0; ci < p.classes.size(); ++ci) {
    int rep_new = sub.old_to_new[static_cast<size_t>(p.representatives[ci])];
    for (int v : p.classes[ci]) r.old_to_new[static_cast<size_t>(v)] = rep_new;
  }
  if (!is_twin_free(r.graph))
    throw std::logic_error("twin reduction left false twins after one pass");
  return r;
}

}  // namespace bg
