#include "nrgen/random.hpp"

#include <cmath>
#include <random>

#include "nrgen/error.hpp"

namespace nrgen {

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream) noexcept : seed_(seed) {
  std::uint64_t sm = seed;
  // Mix the stream id through its own splitmix step so that neighbouring
  // (seed, stream) pairs do not produce overlapping splitmix sequences.
  std::uint64_t ss = stream ^ 0x6A09E667F3BCC909ull;
  sm ^= splitmix64(ss);
  for (auto& word : s_) word = splitmix64(sm);
}

RandomStream RandomStream::fork(std::uint64_t stream) noexcept {
  return RandomStream(next_u64(), stream);
}

std::uint64_t uniform_index(RandomStream& rng, std::uint64_t n) {
  if (n == 0) throw DomainError("uniform_index: n must be >= 1");
  return uniform_index_unchecked(rng, n);
}

std::uint64_t poisson_knuth(RandomStream& rng, double mean) {
  const double limit = std::exp(-mean);
  std::uint64_t k = 0;
  double prod = uniform_real(rng);
  while (prod > limit) {
    ++k;
    prod *= uniform_real(rng);
  }
  return k;
}

// W. Hormann, "The transformed rejection method for generating Poisson
// random variables", Insurance: Mathematics and Economics 12 (1993).
std::uint64_t poisson_ptrs(RandomStream& rng, double mean) {
  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double invalpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);

  for (;;) {
    const double u = uniform_real(rng) - 0.5;
    const double v = uniform_real(rng);
    const double us = 0.5 - std::abs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    // v == 0 gives log(v) = -inf, which always accepts; that matches the
    // continuous acceptance region.
    if (std::log(v) + std::log(invalpha) - std::log(a / (us * us) + b) <=
        -mean + k * loglam - std::lgamma(k + 1.0)) {
      return static_cast<std::uint64_t>(k);
    }
  }
}

std::uint64_t poisson(RandomStream& rng, double mean) {
  if (!std::isfinite(mean) || mean < 0.0) throw DomainError("poisson: mean must be finite and >= 0");
  if (mean == 0.0) return 0;
  return mean < kPoissonRegimeSwitch ? poisson_knuth(rng, mean) : poisson_ptrs(rng, mean);
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ static_cast<std::uint64_t>(rd());
}

}  // namespace nrgen
