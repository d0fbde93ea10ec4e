#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "mosso/types.hpp"

namespace mosso {

// Set with O(1) insert/erase/contains and O(1) uniform sampling.
// Erase swaps the victim with the last slot, so iteration order depends on
// the operation history (deterministic for a fixed history).
template <class T>
class IndexedSet {
public:
  bool insert(T x) {
    auto [it, fresh] = pos_.try_emplace(x, static_cast<std::uint32_t>(items_.size()));
    if (!fresh) return false;
    items_.push_back(x);
    return true;
  }

  bool erase(T x) {
    auto it = pos_.find(x);
    if (it == pos_.end()) return false;
    std::uint32_t i = it->second;
    T last = items_.back();
    items_[i] = last;
    pos_[last] = i;
    items_.pop_back();
    pos_.erase(it);
    return true;
  }

  bool contains(T x) const { return pos_.find(x) != pos_.end(); }

  T sample(Rng& rng) const { return items_[rng.bounded(items_.size())]; }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<T>& items() const { return items_; }

  void clear() {
    items_.clear();
    pos_.clear();
  }

private:
  std::vector<T> items_;
  std::unordered_map<T, std::uint32_t> pos_;
};

}  // namespace mosso
