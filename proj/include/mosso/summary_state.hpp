#pragma once

#include <cstdint>
#include <iosfwd>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mosso/indexed_set.hpp"
#include "mosso/types.hpp"

namespace mosso {

// Summary graph G* = (S, P) plus corrections C = (C+, C-), with per-pair edge
// counts and per-node degrees. The current graph is exactly recoverable at
// all times; every pair with at least one edge is kept optimally encoded.
//
// Single writer. Queries concurrent with mutation are undefined.
class SummaryState {
public:
  // Registers u as a fresh singleton supernode if unseen. Idempotent.
  void ensure_node(NodeId u);

  bool node_seen(NodeId u) const { return u < nodes_.size() && nodes_[u].sn != kNoSupernode; }
  std::size_t seen_node_count() const { return seen_nodes_; }
  NodeId node_slots() const { return static_cast<NodeId>(nodes_.size()); }

  // Applies one sound insertion/deletion: degrees, the pair count of
  // (S_u, S_v), and that pair's encoding. Unsound events are rejected.
  void apply_edge_change(const StreamEvent& e);

  // phi(after hypothetically moving y into dest) - phi(now). Read only.
  std::int64_t delta_phi(NodeId y, MoveTarget dest) const;
  // Same, with y's neighbor counts per supernode precomputed by the caller.
  std::int64_t delta_phi_bucketed(NodeId y, MoveTarget dest,
                                  const std::vector<std::pair<SupernodeId, std::uint32_t>>& buckets) const;

  // Moves y into dest (or a fresh singleton), re-optimizes all affected pair
  // encodings, deletes the source supernode if emptied. Returns the
  // destination supernode id.
  SupernodeId move_node(NodeId y, MoveTarget dest);

  // v in N(u) on the representation: C- then C+/superedge. Expected O(1).
  bool adjacent(NodeId u, NodeId v) const;

  // Exact N(u) of the recovered graph; |result| = degree(u). O(deg) expected.
  std::vector<NodeId> neighborhood(NodeId u) const;
  void neighborhood_into(NodeId u, std::vector<NodeId>& out) const;

  // Full recovered edge set, canonical (u < v). Verification only.
  std::vector<std::pair<NodeId, NodeId>> reconstruct() const;

  std::uint32_t degree(NodeId u) const;
  SupernodeId supernode_of(NodeId u) const;

  bool supernode_live(SupernodeId a) const;
  std::uint64_t supernode_size(SupernodeId a) const;
  const std::vector<NodeId>& members(SupernodeId a) const;
  const IndexedSet<SupernodeId>& superedge_neighbors(SupernodeId a) const;
  const std::unordered_map<SupernodeId, std::uint32_t>& pair_counts(SupernodeId a) const;
  std::uint32_t pair_count(SupernodeId a, SupernodeId b) const;
  // |E_A|: number of edges with at least one endpoint in A.
  std::uint64_t adjacent_edge_count(SupernodeId a) const;
  const IndexedSet<SupernodeId>& live_supernodes() const { return live_; }
  SupernodeId supernode_slots() const { return static_cast<SupernodeId>(sns_.size()); }

  const IndexedSet<NodeId>& cplus(NodeId u) const;
  const std::unordered_set<NodeId>& cminus(NodeId u) const;

  std::int64_t phi() const {
    return static_cast<std::int64_t>(p_count_ + cplus_count_ + cminus_count_);
  }
  std::uint64_t superedge_count() const { return p_count_; }
  std::uint64_t cplus_count() const { return cplus_count_; }
  std::uint64_t cminus_count() const { return cminus_count_; }
  std::uint64_t nonzero_pair_count() const { return nonzero_pairs_; }
  std::uint64_t edge_count() const { return edges_; }

  // Stored representation entries: nodes + P + C+ + C- + nonzero pair counts.
  std::uint64_t entry_count() const {
    return seen_nodes_ + p_count_ + cplus_count_ + cminus_count_ + nonzero_pairs_;
  }

  void save_snapshot(std::ostream& out) const;
  static SummaryState load_snapshot(std::istream& in);

  bool operator==(const SummaryState& o) const;

  // Recomputes everything from scratch and throws ErrorKind::integrity on any
  // violated invariant. Test helper; O(|V|^2)-ish on dense summaries.
  void validate() const;

private:
  struct NodeRec {
    SupernodeId sn = kNoSupernode;
    std::uint32_t member_pos = 0;
    std::uint32_t degree = 0;
    IndexedSet<NodeId> cplus;
    std::unordered_set<NodeId> cminus;
  };

  struct Supernode {
    std::vector<NodeId> members;
    IndexedSet<SupernodeId> sneigh;                       // superedge neighbors, self included
    std::unordered_map<SupernodeId, std::uint32_t> ecnt;  // nonzero |E_AB|, self keyed at own id
    std::uint64_t degree_sum = 0;                         // sum of member degrees
  };

  const NodeRec& node_checked(NodeId u, const char* op) const;

  SupernodeId alloc_supernode();
  void free_supernode(SupernodeId a);
  bool is_superedge(SupernodeId a, SupernodeId b) const;

  void add_cplus(NodeId a, NodeId b);
  void erase_cplus(NodeId a, NodeId b);
  void add_cminus(NodeId a, NodeId b);
  void erase_cminus(NodeId a, NodeId b);
  void add_superedge(SupernodeId a, SupernodeId b);
  void erase_superedge(SupernodeId a, SupernodeId b);
  // Adds d (may be negative) to |E_AB|, maintaining the nonzero-pair counter.
  void bump_pair(SupernodeId a, SupernodeId b, std::int64_t d);

  std::int64_t pair_potential(SupernodeId a, SupernodeId b) const;

  // membership[w] buckets of y's neighbors; counts only.
  void bucket_neighbors(NodeId y, std::vector<std::pair<SupernodeId, std::uint32_t>>& out) const;

  // Rewrites the stored entries of pair (a,b) from branch `was_se` to the
  // branch optimal for the pair's current counts/sizes. `known_edge` /
  // `known_nonedge` let callers exclude the event edge itself.
  void flip_to_superedge(SupernodeId a, SupernodeId b, NodeId skip_u, NodeId skip_v);
  void flip_to_cplus(SupernodeId a, SupernodeId b, NodeId skip_u, NodeId skip_v);

  // move_node phases.
  void detach_node(NodeId y, const std::vector<std::pair<SupernodeId, std::vector<NodeId>>>& buckets);
  void attach_node(NodeId y, SupernodeId d,
                   const std::vector<std::pair<SupernodeId, std::vector<NodeId>>>& buckets);

  std::vector<NodeRec> nodes_;
  std::vector<Supernode> sns_;
  std::vector<SupernodeId> free_slots_;
  IndexedSet<SupernodeId> live_;

  std::size_t seen_nodes_ = 0;
  std::uint64_t p_count_ = 0;
  std::uint64_t cplus_count_ = 0;
  std::uint64_t cminus_count_ = 0;
  std::uint64_t nonzero_pairs_ = 0;
  std::uint64_t edges_ = 0;
};

}  // namespace mosso
