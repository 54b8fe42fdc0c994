#pragma once

#include <cstdint>
#include <limits>

#include <absl/container/flat_hash_set.h>
#include <absl/numeric/int128.h>

#include "nrgen/graph.hpp"

namespace nrgen::detail {

// Dedup set for canonical pairs. Keys are min * n + max, which fit in 64 bits
// while n < 2^32; larger vertex counts use a 128-bit key.
template <class Key>
class EdgeKeySet {
 public:
  explicit EdgeKeySet(std::uint64_t n) : n_(n) {}

  void reserve(std::size_t count) { set_.reserve(count); }

  // True when the pair was not present before.
  bool insert(const Edge& e) { return set_.insert(key(e)).second; }

  void prefetch(const Edge& e) const { set_.prefetch(key(e)); }

 private:
  Key key(const Edge& e) const { return Key(e.u) * n_ + Key(e.v); }

  Key n_;
  absl::flat_hash_set<Key> set_;
};

inline constexpr std::uint64_t kNarrowKeyLimit = std::uint64_t{1} << 32;

// Invokes f with an EdgeKeySet of the right width for n.
template <class F>
decltype(auto) with_edge_set(std::uint64_t n, F&& f) {
  if (n < kNarrowKeyLimit) {
    EdgeKeySet<std::uint64_t> set(n);
    return f(set);
  }
  EdgeKeySet<absl::uint128> set(n);
  return f(set);
}

}  // namespace nrgen::detail
