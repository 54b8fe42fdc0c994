#pragma once

#include <array>
#include <cstdint>

namespace nrgen {

// Fixed identifiers for logical streams derived from one master seed.
enum class StreamId : std::uint64_t {
  budget = 1,
  endpoints = 2,
  generate = 0x10,
  validate = 0x11,
  bench = 0x12,
  weights = 0x13,
};

std::uint64_t splitmix64(std::uint64_t& state) noexcept;

__extension__ using uint128 = unsigned __int128;

/// Seedable xoshiro256** stream (period 2^256 - 1).
///
/// State is expanded from the seed with splitmix64, so any seed (including 0)
/// produces a valid nonzero state. Identical (seed, stream) pairs reproduce
/// identical sequences. A stream is single-owner; give each thread its own.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0) noexcept;
  RandomStream(std::uint64_t seed, StreamId stream) noexcept
      : RandomStream(seed, static_cast<std::uint64_t>(stream)) {}

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // UniformRandomBitGenerator interface, for use with <random> and <algorithm>.
  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~std::uint64_t{0}; }
  result_type operator()() noexcept { return next_u64(); }

  /// Child stream keyed on one draw from this stream plus `stream`.
  /// Consumes exactly one draw from the parent.
  RandomStream fork(std::uint64_t stream) noexcept;
  RandomStream fork(StreamId stream) noexcept { return fork(static_cast<std::uint64_t>(stream)); }

  bool operator==(const RandomStream&) const = default;

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t seed_;
  std::array<std::uint64_t, 4> s_{};
};

/// 53-bit uniform in [0, 1).
inline double uniform_real(RandomStream& rng) noexcept {
  return static_cast<double>(rng.next_u64() >> 11) * 0x1.0p-53;
}

/// Unbiased integer in [0, n) by multiply-and-reject. Throws DomainError if n == 0.
std::uint64_t uniform_index(RandomStream& rng, std::uint64_t n);

/// Unchecked variant for hot loops; requires n >= 1.
inline std::uint64_t uniform_index_unchecked(RandomStream& rng, std::uint64_t n) noexcept {
  uint128 m = static_cast<uint128>(rng.next_u64()) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      m = static_cast<uint128>(rng.next_u64()) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

// Below this mean Knuth's product method is used, above it PTRS.
inline constexpr double kPoissonRegimeSwitch = 10.0;

/// Exact Poisson(mean) variate for any finite mean >= 0.
/// Knuth multiplication for mean < 10, Hormann's transformed rejection (PTRS)
/// otherwise, with O(1) expected cost independent of the mean.
std::uint64_t poisson(RandomStream& rng, double mean);

// Exposed for regime-boundary tests.
std::uint64_t poisson_knuth(RandomStream& rng, double mean);
std::uint64_t poisson_ptrs(RandomStream& rng, double mean);

// 64-bit seed from OS entropy.
std::uint64_t entropy_seed();

}  // namespace nrgen
