#pragma once

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nrgen {

enum class WeightFormat { text, binary };

WeightFormat parse_weight_format(std::string_view tag);

// Neumaier-compensated sum.
double compensated_sum(std::span<const double> values) noexcept;

/// Immutable weight sequence x with its cached total mass L_n = sum(x).
///
/// Every weight is finite and nonnegative and at least one is positive.
/// Zero weights are allowed: such vertices are never selected as endpoints.
class WeightSequence {
 public:
  /// Validates and takes ownership of `values`.
  /// Throws EmptyInputError, DomainError (negative or non-finite) or
  /// DegeneracyError (all zero).
  static WeightSequence from_values(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }
  double total_mass() const noexcept { return total_mass_; }

 private:
  WeightSequence(std::vector<double> values, double total_mass)
      : values_(std::move(values)), total_mass_(total_mass) {}

  std::vector<double> values_;
  double total_mass_;
};

/// Text format: one decimal weight per line, `#` comment lines and blank
/// lines ignored. Binary format: "RGWT", u64 LE count, count f64 LE values.
WeightSequence load_weights(std::istream& source, WeightFormat format);
WeightSequence load_weights_file(const std::string& path, WeightFormat format);

void write_weights(std::ostream& sink, const WeightSequence& w, WeightFormat format);

struct RegularityReport {
  double total_mass = 0.0;
  double max_weight = 0.0;
  double hub_ratio = 0.0;  // max_weight / sqrt(total_mass)
  double sum_squares = 0.0;
  double mean_degree_target = 0.0;
};

// Advisory only; the hub-control and non-degeneracy conditions are asymptotic
// and cannot be decided from a single finite sequence.
RegularityReport regularity_report(const WeightSequence& w);

}  // namespace nrgen
