#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "mosso/types.hpp"

namespace mosso {

class SummaryState;

// Uncompressed companion graph, kept exactly. Verification only: the
// summarizers never read it.
class ExactGraph {
public:
  void apply(const StreamEvent& e);

  bool has_edge(NodeId u, NodeId v) const;
  const std::unordered_set<NodeId>& adjacency(NodeId u) const;
  std::size_t degree(NodeId u) const;
  std::size_t edge_count() const { return edges_; }
  std::size_t node_count() const { return adj_.size(); }
  bool node_seen(NodeId u) const { return u < seen_.size() && seen_[u]; }

  // All edges, canonical (u < v), unsorted.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

private:
  void ensure(NodeId u);

  std::vector<std::unordered_set<NodeId>> adj_;
  std::vector<bool> seen_;
  std::size_t edges_ = 0;
};

// Exact optimal phi for the given grouping, by direct counting over the exact
// graph. membership[u] is u's group for every seen node; kNoSupernode marks
// unseen slots. Independent of the incremental encoding machinery.
std::int64_t brute_force_phi(const ExactGraph& g, const std::vector<std::uint32_t>& membership);

struct EquivalenceReport {
  bool ok = true;
  std::string diff;  // first mismatch: pair, expected, actual
};

// Compares the recovered graph of `state` against `exact`, and state.phi()
// against the brute-force optimum for state's own partition.
EquivalenceReport check_equivalence(const ExactGraph& exact, const SummaryState& state);

}  // namespace mosso
