#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace nrgen::stats {

// Welford accumulator.
class RunningMoments {
 public:
  void add(double x) noexcept {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }

  std::uint64_t count() const noexcept { return count_; }
  double mean() const noexcept { return mean_; }
  // Unbiased sample variance; 0 for fewer than two samples.
  double variance() const noexcept {
    return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
  }
  double std_error() const noexcept {
    return count_ > 0 ? std::sqrt(variance() / static_cast<double>(count_)) : 0.0;
  }

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double critical = 0.0;  // upper quantile at the requested significance
  double p_value = 1.0;
  bool passed = true;
};

double chi_square_critical(int dof, double significance);
double chi_square_p_value(double statistic, int dof);

/// Goodness of fit of observed counts against bin probabilities.
/// Adjacent bins are pooled, in order, until each pooled bin expects at least
/// `min_expected` counts. `probabilities` should cover all outcomes.
ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               std::span<const double> probabilities, double significance,
                               double min_expected = 5.0);

/// Two-sample homogeneity test on paired histograms (possibly unequal totals).
/// Bins empty in both samples are dropped.
ChiSquareResult chi_square_two_sample(std::span<const std::uint64_t> a,
                                      std::span<const std::uint64_t> b, double significance);

// z with P(Z > z) = tail for a standard normal Z.
double normal_upper_quantile(double tail);

/// Two-sided z threshold for a family of `family` simultaneous tests whose
/// single-test threshold is `sigma_mult` (Bonferroni). family = 1 returns
/// sigma_mult.
double bonferroni_z(double sigma_mult, std::size_t family);

// Kolmogorov-Smirnov statistic of samples against Uniform[0, 1). Sorts in place.
double ks_statistic_uniform(std::vector<double>& samples);

// Asymptotic critical value of D for sample size n.
double ks_critical(std::size_t n, double significance);

// Poisson pmf for k = 0..max_k, plus the upper tail P(K > max_k) as a last entry.
std::vector<double> poisson_pmf_with_tail(double mean, std::uint64_t max_k);

}  // namespace nrgen::stats
