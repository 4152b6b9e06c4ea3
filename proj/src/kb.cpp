#include "bg/kb.hpp"

#include <algorithm>
#include <stdexcept>

namespace bg {

LabeledKB biclique_graph(const Graph& host) {
  if (!host.is_connected()) throw std::invalid_argument("biclique graph requires a connected host");
  LabeledKB kb;
  kb.host_n = host.n();
  kb.bicliques = enumerate_bicliques(host);
  int m = static_cast<int>(kb.bicliques.size());
  if (m > kMaxVertices) throw std::invalid_argument("biclique family exceeds the vertex cap");
  std::vector<VertexSet> adj(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (kb.bicliques[static_cast<size_t>(i)].vertices().intersects(
              kb.bicliques[static_cast<size_t>(j)].vertices())) {
        adj[static_cast<size_t>(i)].add(j);
        adj[static_cast<size_t>(j)].add(i);
      }
  kb.graph = Graph::from_adjacency(std::move(adj));
  return kb;
}

int kb_degree(const Graph& host, const Biclique& b) {
  Biclique want = b.normalized();
  std::vector<Biclique> all = enumerate_bicliques(host);
  if (std::find(all.begin(), all.end(), want) == all.end())
    throw std::invalid_argument("not a biclique of the host graph");
  int deg = 0;
  for (const Biclique& other : all)
    if (!(other == want) && other.vertices().intersects(want.vertices())) ++deg;
  return deg;
}

}  // namespace bg
