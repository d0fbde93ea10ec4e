#pragma once

#include <cstdint>
#include <string>

#include "mosso/types.hpp"

namespace mosso {

// Per-supernode-pair encoding choice: either all edges go to C+ (cost
// |E_AB|), or a superedge plus the missing pairs in C- (cost 1+|T_AB|-|E_AB|).
struct EncodingDecision {
  bool use_superedge = false;
  std::int64_t cost = 0;
};

// |T_AB|: potential edges between two distinct supernodes of the given sizes,
// or within one supernode for a self pair.
inline std::int64_t potential_edges(std::uint64_t size_a, std::uint64_t size_b, bool self_pair) {
  if (self_pair) return static_cast<std::int64_t>(size_a * (size_a - 1) / 2);
  return static_cast<std::int64_t>(size_a * size_b);
}

// Superedge wins strictly above the midpoint; ties stay in C+.
inline bool superedge_wins(std::int64_t edge_count, std::int64_t potential) {
  return edge_count > 0 && 2 * edge_count > potential + 1;
}

// Cost contributed by a pair with the given edge count under the optimal rule.
inline std::int64_t pair_cost(std::int64_t edge_count, std::int64_t potential) {
  if (edge_count == 0) return 0;
  if (superedge_wins(edge_count, potential)) return 1 + potential - edge_count;
  return edge_count;
}

inline EncodingDecision encode_pair(std::uint64_t size_a, std::uint64_t size_b,
                                    std::uint64_t edge_count, bool self_pair) {
  if (size_a == 0 || (!self_pair && size_b == 0))
    throw Error(ErrorKind::contract, "encode_pair: empty supernode");
  std::int64_t t = potential_edges(size_a, size_b, self_pair);
  std::int64_t e = static_cast<std::int64_t>(edge_count);
  if (e < 1 || e > t)
    throw Error(ErrorKind::contract, "encode_pair: edge count " + std::to_string(e) +
                                         " outside [1, " + std::to_string(t) + "]");
  EncodingDecision d;
  d.use_superedge = superedge_wins(e, t);
  d.cost = pair_cost(e, t);
  return d;
}

}  // namespace mosso
