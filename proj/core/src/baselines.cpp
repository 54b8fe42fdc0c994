#include "nrgen/baselines.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace nrgen {

SimpleGraph generate_nr_oracle(const WeightSequence& w, RandomStream& rng) {
  const std::uint64_t n = w.size();
  const double total = w.total_mass();
  SimpleGraph g;
  g.n = n;
  for (std::uint64_t i = 0; i < n; ++i) {
    const double xi = w[i];
    for (std::uint64_t j = i + 1; j < n; ++j) {
      const double p = -std::expm1(-xi * w[j] / total);
      if (uniform_real(rng) < p) g.edges.push_back(Edge{i, j});
    }
  }
  return g;
}

ChungLuSkipSampler::ChungLuSkipSampler(const WeightSequence& w)
    : order_(w.size()), sorted_(w.size()), total_mass_(w.total_mass()) {
  std::iota(order_.begin(), order_.end(), std::uint64_t{0});
  const auto values = w.values();
  std::sort(order_.begin(), order_.end(), [&](std::uint64_t a, std::uint64_t b) {
    return values[a] > values[b] || (values[a] == values[b] && a < b);
  });
  for (std::size_t k = 0; k < order_.size(); ++k) sorted_[k] = values[order_[k]];
}

// Miller & Hagberg, "Efficient generation of networks with given expected
// degrees" (WAW 2011). Row u scans partners v > u in sorted order; since the
// weights decrease, the current p bounds every later probability in the row
// and a geometric skip under p followed by thinning with q/p is exact.
SimpleGraph ChungLuSkipSampler::sample(RandomStream& rng) const {
  const std::uint64_t n = vertex_count();
  SimpleGraph g;
  g.n = n;
  if (n < 2) return g;
  g.edges.reserve(static_cast<std::size_t>(total_mass_ / 2.0 * 1.05) + 16);

  for (std::uint64_t u = 0; u + 1 < n; ++u) {
    const double wu = sorted_[u];
    std::uint64_t v = u + 1;
    double p = std::min(wu * sorted_[v] / total_mass_, 1.0);
    while (v < n && p > 0.0) {
      assert(p <= 1.0);
      if (p != 1.0) {
        // r in (0, 1]
        const double r = 1.0 - uniform_real(rng);
        const double skip = std::floor(std::log(r) / std::log1p(-p));
        if (skip >= static_cast<double>(n - v)) break;
        v += static_cast<std::uint64_t>(skip);
      }
      const double q = std::min(wu * sorted_[v] / total_mass_, 1.0);
      assert(q <= p);
      if (uniform_real(rng) < q / p) g.edges.push_back(canonical(order_[u], order_[v]));
      p = q;
      ++v;
    }
  }
  return g;
}

SimpleGraph generate_chung_lu_skip(const WeightSequence& w, RandomStream& rng) {
  return ChungLuSkipSampler(w).sample(rng);
}

}  // namespace nrgen
