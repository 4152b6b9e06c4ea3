#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bg/graph.hpp"
#include "bg/kb.hpp"

namespace bg {

enum class ItemStatus { ProvedYes, ProvedNo, Unknown };
const char* to_string(ItemStatus s);

/// One scanned subject. `status` is set only for membership claims: a
/// proved-yes always carries a re-verified preimage certificate, a proved-no
/// a re-verified violating induced P3; purely informational entries leave it
/// empty.
struct LabItem {
  std::string id;  // usually the graph6 form of the subject
  std::optional<ItemStatus> status;
  nlohmann::json detail;
};

/// Result of one verification or conjecture run. Serialization is
/// deterministic for fixed parameters apart from the timing field.
struct LabReport {
  std::string claim;
  nlohmann::json params;
  std::map<std::string, std::int64_t> counts;
  std::vector<std::string> exceptional;  // graph6 records
  std::vector<LabItem> items;
  bool ok = true;  // no violations, no sound counterexamples
  double wall_ms = 0.0;

  nlohmann::json to_json(bool include_timing = true) const;
};

/// Degree bound for large bicliques of twin-free hosts (claim "lemma1"):
/// over all connected twin-free graphs on n vertices, every biclique B with
/// K_{1,3} <= B or B = C_4 must have at least three intersecting bicliques.
/// n=7 must show zero violations; n=6 lists the exceptional graphs.
LabReport verify_lemma1(int n, int jobs = 1);

/// Claim "observation1": for each k in [k_min, k_max] (7..12), removing any
/// vertex of KB(C_k) leaves a graph that fails the induced-P3 condition.
LabReport verify_observation1(int k_min, int k_max, int jobs = 1);

/// First (smallest order, then generation order) connected twin-free host H
/// with KB(H) isomorphic to g. Finding one certifies that g is a biclique
/// graph; absence is inconclusive. Disconnected g has no connected-host
/// preimage and yields nullopt directly.
std::optional<Graph> find_preimage(const Graph& g, int max_n = 8);

/// Evidence harnesses; none of these can prove a conjecture, only report
/// certified statuses (a sound counterexample flips ok to false).
LabReport test_conjecture1(int max_n, int jobs = 1);
LabReport test_conjecture2(int k_max, int max_n, int jobs = 1);
LabReport test_conjecture3(int max_n, int jobs = 1);

/// Hosts with precomputed biclique graphs, in preimage search order.
class KbIndex {
 public:
  struct Entry {
    Graph host;
    int biclique_count = 0;
    Graph kb;  // empty when the family exceeded the vertex cap
    bool kb_ok = false;
    std::vector<int> kb_degrees;  // sorted
  };
  static const KbIndex& up_to(int max_n);
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

}  // namespace bg
