#include "nrgen/alias.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>

#include "nrgen/error.hpp"

namespace nrgen {
namespace {

constexpr double kFullTolerance = 4.0 * std::numeric_limits<double>::epsilon();

bool is_full(double q) noexcept { return std::abs(q - 1.0) <= kFullTolerance; }

}  // namespace

AliasTable AliasTable::build(const WeightSequence& w, AliasBuildStats* stats) {
  return build(w.values(), stats);
}

AliasTable AliasTable::build(std::span<const double> weights, AliasBuildStats* stats) {
  const std::size_t n = weights.size();
  if (n == 0) throw EmptyInputError("alias table over empty weights");
  const double total = compensated_sum(weights);
  if (!(total > 0.0)) throw DegeneracyError("alias table over zero total mass");

  AliasTable t;
  t.buckets_.reserve(n);

  const double scale = static_cast<double>(n) / total;  // 1 / mu
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  AliasBuildStats local;

  for (std::size_t k = 0; k < n; ++k) {
    const double q = weights[k] * scale;
    if (is_full(q)) {
      t.buckets_.push_back({1.0, k});
      continue;
    }
    t.buckets_.push_back({q, k});
    (q < 1.0 ? small : large).push_back(k);
    ++local.pushes;
  }
  // Stack tops hold the lowest indices.
  std::reverse(small.begin(), small.end());
  std::reverse(large.begin(), large.end());

  while (!small.empty() && !large.empty()) {
    const std::uint64_t s = small.back();
    small.pop_back();
    const std::uint64_t l = large.back();
    large.pop_back();
    local.pops += 2;
    ++local.pairings;

    // Bucket s is final from here on.
    Bucket& bs = t.buckets_[s];
    bs.alias = l;
    double& ql = t.buckets_[l].cutoff;
    ql -= 1.0 - bs.cutoff;
    bs.cutoff = std::clamp(bs.cutoff, 0.0, 1.0);
    if (is_full(ql)) {
      ql = 1.0;
    } else if (ql < 1.0) {
      small.push_back(l);
      ++local.pushes;
    } else {
      large.push_back(l);
      ++local.pushes;
    }
  }

  // Whatever remains differs from 1 only by accumulated rounding.
  for (const auto* rest : {&small, &large}) {
    for (const std::uint64_t k : *rest) {
      t.buckets_[k] = {1.0, k};
      ++local.pops;
    }
  }

  if (stats != nullptr) *stats = local;
  return t;
}

std::vector<double> AliasTable::implied_probabilities() const {
  const std::size_t n = size();
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> p(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] += buckets_[i].cutoff * inv_n;
    p[buckets_[i].alias] += (1.0 - buckets_[i].cutoff) * inv_n;
  }
  return p;
}

void AliasTable::dump_tsv(std::ostream& os) const {
  os << "index\tcutoff\talias\n";
  os << std::setprecision(17);
  for (std::size_t i = 0; i < size(); ++i) {
    os << i << '\t' << buckets_[i].cutoff << '\t' << buckets_[i].alias << '\n';
  }
}

}  // namespace nrgen
