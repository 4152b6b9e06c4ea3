#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "bg/conditions.hpp"
#include "bg/graph.hpp"
#include "bg/kb.hpp"

namespace bg {

/// Classification of a degree-2 vertex of the biclique graph of a connected
/// twin-free host, naming the host vertices that drive the rewrite.
///
/// family 1: B = {v} u {w} with N[v] = N[w] = {v,w,x}; independent_set is
///           N(x) - {v,w} and must be independent.
/// family 2: B = {b} u {a,c} with N(a) = {b} and N(b) = {a,c}.
struct Degree2Plan {
  int family = 0;
  int v = -1, w = -1, x = -1;
  VertexSet independent_set;
  int a = -1, b = -1, c = -1;
};

/// Raised when neither family matches; legitimate only for hosts with at
/// most six vertices, where the exhaustive fallback takes over.
struct NoFamilyMatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Requires: h connected and twin-free, kb built from h, kb-degree of q
/// exactly 2. Throws NoFamilyMatch when the plan invariants cannot be
/// satisfied.
Degree2Plan classify_degree2(const Graph& h, const LabeledKB& kb, int q);

struct HPrimeResult {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for removed host vertices
  // family 1 only: indices of the added vertices in the new graph
  int copy_of_x = -1, pendant_on_x = -1, pendant_on_copy = -1;
};

/// family 1: drop v and w, add a copy y of x (same open neighborhood), then
/// a pendant on x and a pendant on y. family 2: drop a. The plan is
/// re-validated against h first.
HPrimeResult construct_h_prime(const Graph& h, const Degree2Plan& plan);

struct RemovalResult {
  Graph h_prime;
  std::optional<Degree2Plan> plan;  // empty when the exhaustive fallback produced h_prime
  bool verified = false;            // KB(h_prime) isomorphic to KB(host) - {q}; always true on return
  Graph reduced_host;               // the twin-reduced host the plan refers to
  LabeledKB kb;                     // biclique graph of reduced_host
};

/// Removes the degree-2 biclique-graph vertex q constructively. The host is
/// twin-reduced first; q indexes the biclique graph of the reduced host.
/// Verification failure for a reduced host with >= 7 vertices is an internal
/// error (std::logic_error); smaller hosts fall back to exhaustive preimage
/// search over connected twin-free graphs with at most 7 vertices.
RemovalResult remove_degree2(const Graph& host, int q);

/// One element of the iterative stripping chain.
struct ChainEntry {
  Graph graph;
  int removed_vertex = -1;  // vertex stripped from this graph, -1 on the last entry
  enum class Status { NotBiclique, IsBiclique, Unknown } status = Status::Unknown;
  std::optional<InducedP3> p3_witness;  // certifies NotBiclique
  std::optional<Graph> preimage;        // certifies IsBiclique
};

struct AnalysisReport {
  enum class Verdict { NotBiclique, IsBiclique, Inconclusive } verdict = Verdict::Inconclusive;
  std::vector<ChainEntry> chain;
  int removals = 0;
};

/// Strips degree-2 vertices greedily (smallest index first, single chain).
/// After each step: an induced-P3 violation certifies that the current graph
/// and, through the degree-2 removal result, every earlier chain element is
/// not a biclique graph; a preimage certifies the current element only, so
/// the overall verdict stays inconclusive unless it appears at the head.
AnalysisReport analyze_not_biclique(const Graph& g, int max_preimage_n = 8);

}  // namespace bg
