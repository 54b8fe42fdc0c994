#include "nrgen/stats.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>

#include "nrgen/error.hpp"

namespace nrgen::stats {

double chi_square_critical(int dof, double significance) {
  if (dof < 1) throw DomainError("chi-square needs at least one degree of freedom");
  const boost::math::chi_squared dist(dof);
  return boost::math::quantile(boost::math::complement(dist, significance));
}

double chi_square_p_value(double statistic, int dof) {
  if (dof < 1) return 1.0;
  if (std::isinf(statistic)) return 0.0;
  const boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, std::max(statistic, 0.0)));
}

ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               std::span<const double> probabilities, double significance,
                               double min_expected) {
  if (observed.size() != probabilities.size()) {
    throw DomainError("chi_square_gof: observed and probability bins differ in length");
  }
  const double total = static_cast<double>(
      std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));

  std::vector<double> obs_pooled;
  std::vector<double> exp_pooled;
  double o = 0.0, e = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    o += static_cast<double>(observed[i]);
    e += probabilities[i] * total;
    if (e >= min_expected) {
      obs_pooled.push_back(o);
      exp_pooled.push_back(e);
      o = e = 0.0;
    }
  }
  if (o > 0.0 || e > 0.0) {
    if (exp_pooled.empty()) {
      obs_pooled.push_back(o);
      exp_pooled.push_back(e);
    } else {
      obs_pooled.back() += o;
      exp_pooled.back() += e;
    }
  }

  ChiSquareResult r;
  for (std::size_t i = 0; i < obs_pooled.size(); ++i) {
    if (exp_pooled[i] > 0.0) {
      const double d = obs_pooled[i] - exp_pooled[i];
      r.statistic += d * d / exp_pooled[i];
    } else if (obs_pooled[i] > 0.0) {
      // Counts in a bin of probability zero are an outright failure.
      r.statistic = std::numeric_limits<double>::infinity();
    }
  }
  r.dof = static_cast<int>(obs_pooled.size()) - 1;
  if (r.dof < 1) {
    r.critical = 0.0;
    r.p_value = 1.0;
    r.passed = std::isfinite(r.statistic);
    return r;
  }
  r.critical = chi_square_critical(r.dof, significance);
  r.p_value = chi_square_p_value(r.statistic, r.dof);
  r.passed = r.statistic <= r.critical;
  return r;
}

ChiSquareResult chi_square_two_sample(std::span<const std::uint64_t> a,
                                      std::span<const std::uint64_t> b, double significance) {
  if (a.size() != b.size()) throw DomainError("chi_square_two_sample: bin counts differ");
  const double na = static_cast<double>(std::accumulate(a.begin(), a.end(), std::uint64_t{0}));
  const double nb = static_cast<double>(std::accumulate(b.begin(), b.end(), std::uint64_t{0}));
  ChiSquareResult r;
  if (na == 0.0 || nb == 0.0) throw DomainError("chi_square_two_sample: empty sample");
  const double ka = std::sqrt(nb / na);
  const double kb = std::sqrt(na / nb);
  int bins = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ai = static_cast<double>(a[i]);
    const double bi = static_cast<double>(b[i]);
    if (ai + bi == 0.0) continue;
    ++bins;
    const double d = ka * ai - kb * bi;
    r.statistic += d * d / (ai + bi);
  }
  r.dof = bins - 1;
  if (r.dof < 1) return r;
  r.critical = chi_square_critical(r.dof, significance);
  r.p_value = chi_square_p_value(r.statistic, r.dof);
  r.passed = r.statistic <= r.critical;
  return r;
}

double normal_upper_quantile(double tail) {
  const boost::math::normal dist;
  return boost::math::quantile(boost::math::complement(dist, tail));
}

double bonferroni_z(double sigma_mult, std::size_t family) {
  if (family <= 1) return sigma_mult;
  const boost::math::normal dist;
  const double two_sided = 2.0 * boost::math::cdf(boost::math::complement(dist, sigma_mult));
  return normal_upper_quantile(two_sided / (2.0 * static_cast<double>(family)));
}

double ks_statistic_uniform(std::vector<double>& samples) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double x = samples[i];
    d = std::max(d, std::max(static_cast<double>(i + 1) / n - x, x - static_cast<double>(i) / n));
  }
  return d;
}

double ks_critical(std::size_t n, double significance) {
  // Leading term of the Kolmogorov tail, 2 exp(-2 t^2); exact enough for small
  // significance levels.
  const double t = std::sqrt(-0.5 * std::log(significance / 2.0));
  return t / std::sqrt(static_cast<double>(n));
}

std::vector<double> poisson_pmf_with_tail(double mean, std::uint64_t max_k) {
  std::vector<double> pmf(max_k + 2, 0.0);
  double acc = 0.0;
  for (std::uint64_t k = 0; k <= max_k; ++k) {
    const double kd = static_cast<double>(k);
    pmf[k] = mean == 0.0 ? (k == 0 ? 1.0 : 0.0)
                         : std::exp(kd * std::log(mean) - mean - std::lgamma(kd + 1.0));
    acc += pmf[k];
  }
  pmf[max_k + 1] = std::max(0.0, 1.0 - acc);
  return pmf;
}

}  // namespace nrgen::stats
