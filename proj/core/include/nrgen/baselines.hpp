#pragma once

#include <cstdint>
#include <vector>

#include "nrgen/graph.hpp"
#include "nrgen/random.hpp"
#include "nrgen/weights.hpp"

namespace nrgen {

/// Exact Norros-Reittu simple graph by one Bernoulli(1 - exp(-x_i x_j / L_n))
/// draw per pair i < j. O(n^2); meant as a distributional reference for small n.
SimpleGraph generate_nr_oracle(const WeightSequence& w, RandomStream& rng);

/// Chung-Lu graph, P({i,j}) = min(x_i x_j / L_n, 1), by the Miller-Hagberg
/// edge-skipping scan over vertices sorted by decreasing weight.
///
/// The constructor does the sort (Theta(n log n)); sample() does the
/// O(n + m) expected-time scan, so the two phases can be timed separately.
class ChungLuSkipSampler {
 public:
  explicit ChungLuSkipSampler(const WeightSequence& w);

  SimpleGraph sample(RandomStream& rng) const;

  std::uint64_t vertex_count() const noexcept { return order_.size(); }

 private:
  std::vector<std::uint64_t> order_;  // original index of the k-th heaviest vertex
  std::vector<double> sorted_;        // weights in decreasing order
  double total_mass_;
};

SimpleGraph generate_chung_lu_skip(const WeightSequence& w, RandomStream& rng);

}  // namespace nrgen
