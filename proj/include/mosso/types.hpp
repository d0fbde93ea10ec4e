#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace mosso {

using NodeId = std::uint32_t;
using SupernodeId = std::uint32_t;

inline constexpr SupernodeId kNoSupernode = std::numeric_limits<SupernodeId>::max();
inline constexpr std::int64_t kNoTimestamp = std::numeric_limits<std::int64_t>::min();

enum class ErrorKind {
  soundness,   // unsound stream event (duplicate insert, delete of absent edge)
  lookup,      // query on an unseen node / dead supernode
  integrity,   // internal representation inconsistency
  no_neighbors,
  contract,    // precondition violation
  parse,       // malformed file, message carries position
  config,
  io,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

enum class EventKind : std::uint8_t { insert, erase };

// One stream change {u,v}+ or {u,v}-. Endpoints are kept canonical (u < v).
struct StreamEvent {
  EventKind kind = EventKind::insert;
  NodeId u = 0;
  NodeId v = 0;
  std::int64_t timestamp = kNoTimestamp;

  static StreamEvent insertion(NodeId a, NodeId b, std::int64_t ts = kNoTimestamp) {
    return make(EventKind::insert, a, b, ts);
  }
  static StreamEvent deletion(NodeId a, NodeId b, std::int64_t ts = kNoTimestamp) {
    return make(EventKind::erase, a, b, ts);
  }

  bool operator==(const StreamEvent& o) const {
    return kind == o.kind && u == o.u && v == o.v;
  }

private:
  static StreamEvent make(EventKind k, NodeId a, NodeId b, std::int64_t ts) {
    if (a == b) throw Error(ErrorKind::contract, "self-loop event {" + std::to_string(a) + "}");
    StreamEvent e;
    e.kind = k;
    e.u = a < b ? a : b;
    e.v = a < b ? b : a;
    e.timestamp = ts;
    return e;
  }
};

// Move destination: an existing supernode or a fresh singleton.
struct MoveTarget {
  SupernodeId id = kNoSupernode;
  bool fresh = false;

  static MoveTarget to(SupernodeId sid) { return MoveTarget{sid, false}; }
  static MoveTarget new_singleton() { return MoveTarget{kNoSupernode, true}; }
};

// Seedable RNG with stable bounded/unit draws. Identical seed gives an
// identical draw sequence regardless of the standard library's distribution
// implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n), n > 0. Lemire reduction.
  std::uint64_t bounded(std::uint64_t n) {
    __uint128_t m = static_cast<__uint128_t>(next()) * n;
    std::uint64_t lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      std::uint64_t t = (0 - n) % n;
      while (lo < t) {
        m = static_cast<__uint128_t>(next()) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 eng_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace mosso
