#include "nrgen/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "nrgen/baselines.hpp"
#include "nrgen/error.hpp"

namespace nrgen {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// z-score that treats a zero standard error as exact agreement or certain failure.
double z_score(double observed, double expected, double se) {
  const double diff = std::abs(observed - expected);
  if (se > 0.0) return diff / se;
  return diff == 0.0 ? 0.0 : kInf;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

Draw to_draw(GenOutcome<SimpleGraph>&& o) {
  return Draw{o.graph.n, false, o.event_budget, std::move(o.graph.edges)};
}

std::uint64_t histogram_bins_for(double budget_mean) {
  if (budget_mean > 100.0) return 0;
  return static_cast<std::uint64_t>(std::ceil(budget_mean + 10.0 * std::sqrt(budget_mean) + 10.0)) + 1;
}

}  // namespace

Model parse_model(std::string_view tag) {
  if (tag == "nr") return Model::nr;
  if (tag == "nr-multi") return Model::nr_multi;
  if (tag == "er") return Model::er;
  if (tag == "nr-oracle") return Model::nr_oracle;
  if (tag == "cl-skip") return Model::cl_skip;
  throw DomainError("unknown model '" + std::string(tag) + "'");
}

std::string_view to_string(Model m) {
  switch (m) {
    case Model::nr: return "nr";
    case Model::nr_multi: return "nr-multi";
    case Model::er: return "er";
    case Model::nr_oracle: return "nr-oracle";
    case Model::cl_skip: return "cl-skip";
  }
  return "nr";
}

void ValidationConfig::check() const {
  if (runs < 1) throw DomainError("validation runs must be >= 1");
  if (!(significance > 0.0 && significance < 1.0)) throw DomainError("significance must lie in (0, 1)");
  if (!(sigma_mult > 0.0)) throw DomainError("sigma multiplier must be positive");
}

DrawSource make_source(const WeightSequence& w, Model model, GenOptions options) {
  switch (model) {
    case Model::nr: {
      auto sampler = std::make_shared<const NrEventSampler>(w, options);
      return [sampler](RandomStream& rng) { return to_draw(sampler->sample_simple(rng)); };
    }
    case Model::nr_multi: {
      auto sampler = std::make_shared<const NrEventSampler>(w, options);
      return [sampler](RandomStream& rng) {
        auto o = sampler->sample_multigraph(rng);
        return Draw{o.graph.n, true, o.event_budget, std::move(o.graph.events)};
      };
    }
    case Model::nr_oracle: {
      auto weights = std::make_shared<const WeightSequence>(w);
      return [weights](RandomStream& rng) {
        SimpleGraph g = generate_nr_oracle(*weights, rng);
        return Draw{g.n, false, std::nullopt, std::move(g.edges)};
      };
    }
    case Model::cl_skip: {
      auto sampler = std::make_shared<const ChungLuSkipSampler>(w);
      return [sampler](RandomStream& rng) {
        SimpleGraph g = sampler->sample(rng);
        return Draw{g.n, false, std::nullopt, std::move(g.edges)};
      };
    }
    case Model::er:
      break;
  }
  throw DomainError("make_source: use make_er_source for the er model");
}

DrawSource make_er_source(std::uint64_t n, double p, GenOptions options) {
  er_horizon(n, p);  // validates the arguments up front
  return [n, p, options](RandomStream& rng) { return to_draw(generate_er(n, p, rng, options)); };
}

WeightSequence er_equivalent_weights(std::uint64_t n, double p) {
  const double horizon = er_horizon(n, p);
  if (!(horizon > 0.0)) throw DegeneracyError("G(n, 0) has no equivalent weight sequence");
  return WeightSequence::from_values(std::vector<double>(n, 2.0 * horizon / static_cast<double>(n)));
}

RunAggregate collect(const DrawSource& source, std::uint64_t runs, RandomStream& rng,
                     std::uint64_t budget_histogram_bins) {
  RunAggregate agg;
  std::vector<std::uint64_t> deg;
  std::vector<char> present;
  for (std::uint64_t r = 0; r < runs; ++r) {
    Draw d = source(rng);
    if (r == 0) {
      agg.n = d.n;
      agg.multigraph = d.multigraph;
      agg.has_budget = d.event_budget.has_value();
      agg.degree.resize(d.n);
      deg.resize(d.n);
      if (agg.has_budget && budget_histogram_bins > 0) {
        agg.budget_histogram.assign(budget_histogram_bins, 0);
      }
      if (!d.multigraph && d.n <= kMaxMarginalVertices) {
        agg.pair_presence.assign(d.n * d.n, 0);
        present.resize(d.n * d.n);
      }
    }
    ++agg.runs;

    std::fill(deg.begin(), deg.end(), 0);
    for (const Edge& e : d.edges) {
      ++deg[e.u];
      ++deg[e.v];
    }
    for (std::size_t i = 0; i < deg.size(); ++i) agg.degree[i].add(static_cast<double>(deg[i]));
    agg.edge_count.add(static_cast<double>(d.edges.size()));

    if (agg.has_budget) {
      const std::uint64_t k = d.event_budget.value_or(0);
      agg.budget.add(static_cast<double>(k));
      if (!agg.budget_histogram.empty()) {
        ++agg.budget_histogram[std::min<std::uint64_t>(k, agg.budget_histogram.size() - 1)];
      }
      if (!d.multigraph) agg.excess.add(static_cast<double>(k) - static_cast<double>(d.edges.size()));
    }

    if (!d.multigraph) {
      SimpleGraph view{d.n, std::move(d.edges)};
      if (!is_simple(view)) ++agg.non_simple_runs;
      if (!agg.pair_presence.empty()) {
        std::fill(present.begin(), present.end(), 0);
        for (const Edge& e : view.edges) {
          if (e.u >= e.v || e.v >= d.n) continue;
          const std::size_t idx = e.u * d.n + e.v;
          if (!present[idx]) {
            present[idx] = 1;
            ++agg.pair_presence[idx];
          }
        }
      }
    }
  }
  return agg;
}

double expected_budget(const WeightSequence& w) { return w.total_mass() / 2.0; }

double edge_probability(const WeightSequence& w, std::size_t i, std::size_t j) {
  return -std::expm1(-w[i] * w[j] / w.total_mass());
}

std::vector<double> expected_multigraph_degrees(const WeightSequence& w) {
  return {w.values().begin(), w.values().end()};
}

// O(n^2): the exact finite-n Poisson-binomial means.
std::vector<double> expected_simple_degrees(const WeightSequence& w) {
  const std::size_t n = w.size();
  std::vector<double> e(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double p = edge_probability(w, i, j);
      e[i] += p;
      e[j] += p;
    }
  }
  return e;
}

double expected_simple_edges(const WeightSequence& w) {
  const auto deg = expected_simple_degrees(w);
  return compensated_sum(deg) / 2.0;
}

double excess_bound(const WeightSequence& w) {
  const double total = w.total_mass();
  const double s2 = regularity_report(w).sum_squares;
  return s2 / (2.0 * total) + s2 * s2 / (4.0 * total * total);
}

std::vector<CheckResult> check_budget(const WeightSequence& w, const RunAggregate& agg,
                                      const ValidationConfig& cfg) {
  std::vector<CheckResult> out;
  if (!agg.has_budget) return out;
  const double expected = expected_budget(w);
  const double se = std::sqrt(expected / static_cast<double>(agg.runs));
  CheckResult mean{"budget_mean", z_score(agg.budget.mean(), expected, se), cfg.sigma_mult, false,
                   "mean K " + fmt(agg.budget.mean()) + " vs L_n/2 = " + fmt(expected)};
  mean.passed = mean.statistic <= mean.threshold;
  out.push_back(mean);

  if (!agg.budget_histogram.empty()) {
    const auto probs = stats::poisson_pmf_with_tail(expected, agg.budget_histogram.size() - 2);
    const auto chi = stats::chi_square_gof(agg.budget_histogram, probs, cfg.significance);
    out.push_back(CheckResult{"budget_chi2", chi.statistic, chi.critical, chi.passed,
                              "dof " + std::to_string(chi.dof) + ", p " + fmt(chi.p_value)});
  }
  return out;
}

std::vector<CheckResult> check_degrees(const WeightSequence& w, const RunAggregate& agg,
                                       const ValidationConfig& cfg, DegreeMode mode) {
  const std::size_t n = w.size();
  if (agg.degree.size() != n) throw DomainError("check_degrees: vertex count mismatch");
  std::vector<double> expected;
  std::vector<double> variance(n, 0.0);
  const double total = w.total_mass();
  if (mode == DegreeMode::multigraph) {
    expected = expected_multigraph_degrees(w);
    // Poisson(x_i - x_i^2/L) + 2 Poisson(x_i^2 / 2L)
    for (std::size_t i = 0; i < n; ++i) variance[i] = w[i] + w[i] * w[i] / total;
  } else {
    expected.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double p = edge_probability(w, i, j);
        expected[i] += p;
        expected[j] += p;
        variance[i] += p * (1.0 - p);
        variance[j] += p * (1.0 - p);
      }
    }
  }

  const double runs = static_cast<double>(agg.runs);
  double worst = 0.0;
  std::size_t worst_i = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double z = z_score(agg.degree[i].mean(), expected[i], std::sqrt(variance[i] / runs));
    if (z > worst || i == 0) {
      worst = z;
      worst_i = i;
    }
  }
  const double threshold = stats::bonferroni_z(cfg.sigma_mult, n);
  CheckResult r{mode == DegreeMode::multigraph ? "degree_means_multigraph" : "degree_means_simple",
                worst, threshold, worst <= threshold,
                "worst vertex " + std::to_string(worst_i) + ": mean " +
                    fmt(agg.degree[worst_i].mean()) + " vs " + fmt(expected[worst_i])};
  return {r};
}

std::vector<CheckResult> check_edge_count(const WeightSequence& w, const RunAggregate& agg,
                                          const ValidationConfig& cfg) {
  double mean = 0.0, var = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      const double p = edge_probability(w, i, j);
      mean += p;
      var += p * (1.0 - p);
    }
  }
  const double se = std::sqrt(var / static_cast<double>(agg.runs));
  CheckResult r{"edge_count_mean", z_score(agg.edge_count.mean(), mean, se), cfg.sigma_mult, false,
                "mean m " + fmt(agg.edge_count.mean()) + " vs " + fmt(mean)};
  r.passed = r.statistic <= r.threshold;
  return {r};
}

std::vector<CheckResult> check_excess(const WeightSequence& w, const RunAggregate& agg,
                                      const ValidationConfig& cfg) {
  if (!agg.has_budget || agg.multigraph) return {};
  const double bound = excess_bound(w);
  const double threshold = bound + cfg.sigma_mult * agg.excess.std_error();
  CheckResult r{"excess_bound", agg.excess.mean(), threshold, agg.excess.mean() <= threshold,
                "bound " + fmt(bound) + ", mean excess / mean K " +
                    fmt(agg.budget.mean() > 0 ? agg.excess.mean() / agg.budget.mean() : 0.0)};
  return {r};
}

std::vector<CheckResult> check_marginals(const WeightSequence& w, const RunAggregate& agg,
                                         const ValidationConfig& cfg) {
  const std::size_t n = w.size();
  if (n > kMaxMarginalVertices) {
    throw DomainError("per-pair marginals need n <= " + std::to_string(kMaxMarginalVertices) +
                      "; use the degree and edge-count checks for larger graphs");
  }
  if (agg.pair_presence.size() != n * n) throw DomainError("check_marginals: no pair counts collected");
  const double runs = static_cast<double>(agg.runs);
  double worst = 0.0;
  std::size_t wi = 0, wj = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double p = edge_probability(w, i, j);
      const double freq = static_cast<double>(agg.pair_presence[i * n + j]) / runs;
      const double z = z_score(freq, p, std::sqrt(p * (1.0 - p) / runs));
      if (z > worst) {
        worst = z;
        wi = i;
        wj = j;
      }
    }
  }
  const std::size_t pairs = n * (n - 1) / 2;
  const double threshold = stats::bonferroni_z(cfg.sigma_mult, pairs);
  CheckResult r{"edge_marginals", worst, threshold, worst <= threshold,
                std::to_string(pairs) + " pairs, worst {" + std::to_string(wi) + "," +
                    std::to_string(wj) + "}"};
  return {r};
}

CheckResult check_simplicity(const RunAggregate& agg) {
  const auto bad = static_cast<double>(agg.non_simple_runs);
  return CheckResult{"graph_simplicity", bad, 0.0, agg.non_simple_runs == 0,
                     std::to_string(agg.non_simple_runs) + " of " + std::to_string(agg.runs) +
                         " runs with loops, repeats or non-canonical pairs"};
}

std::vector<CheckResult> validate_budget(const WeightSequence& w, const ValidationConfig& cfg,
                                         RandomStream& rng, const DrawSource& source) {
  cfg.check();
  const auto agg = collect(source, cfg.runs, rng, histogram_bins_for(expected_budget(w)));
  return check_budget(w, agg, cfg);
}

std::vector<CheckResult> validate_degrees(const WeightSequence& w, const ValidationConfig& cfg,
                                          RandomStream& rng, const DrawSource& source,
                                          DegreeMode mode) {
  cfg.check();
  return check_degrees(w, collect(source, cfg.runs, rng), cfg, mode);
}

std::vector<CheckResult> validate_excess(const WeightSequence& w, const ValidationConfig& cfg,
                                         RandomStream& rng, const DrawSource& source) {
  cfg.check();
  return check_excess(w, collect(source, cfg.runs, rng), cfg);
}

std::vector<CheckResult> validate_marginals(const WeightSequence& w, const ValidationConfig& cfg,
                                            RandomStream& rng, const DrawSource& source) {
  cfg.check();
  if (w.size() > kMaxMarginalVertices) {
    throw DomainError("per-pair marginals need n <= " + std::to_string(kMaxMarginalVertices) +
                      "; use the degree and edge-count checks for larger graphs");
  }
  return check_marginals(w, collect(source, cfg.runs, rng), cfg);
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

ValidationReport validate_model(const WeightSequence& w, Model model, const DrawSource& source,
                                const ValidationConfig& cfg, RandomStream& rng) {
  cfg.check();
  if (model == Model::cl_skip) {
    throw DomainError("validate: cl-skip targets the Chung-Lu law, which has no exact closed forms here");
  }
  const bool multigraph = model == Model::nr_multi;
  const bool event_driven = model != Model::nr_oracle;
  const std::uint64_t bins = event_driven ? histogram_bins_for(expected_budget(w)) : 0;
  const RunAggregate agg = collect(source, cfg.runs, rng, bins);

  ValidationReport rep;
  rep.model = std::string(to_string(model));
  rep.runs = agg.runs;
  rep.degree_mean_per_vertex.reserve(agg.degree.size());
  for (const auto& d : agg.degree) rep.degree_mean_per_vertex.push_back(d.mean());
  rep.excess_bound = excess_bound(w);

  auto append = [&rep](std::vector<CheckResult> more) {
    rep.checks.insert(rep.checks.end(), more.begin(), more.end());
  };

  if (event_driven) {
    rep.budget_mean = agg.budget.mean();
    rep.budget_expected = expected_budget(w);
    append(check_budget(w, agg, cfg));
  }
  if (multigraph) {
    rep.degree_expected_per_vertex = expected_multigraph_degrees(w);
    append(check_degrees(w, agg, cfg, DegreeMode::multigraph));
    return rep;
  }

  rep.checks.push_back(check_simplicity(agg));
  rep.degree_expected_per_vertex = expected_simple_degrees(w);
  double rel = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0.0) rel = std::max(rel, std::abs(rep.degree_expected_per_vertex[i] - w[i]) / w[i]);
  }
  rep.degree_weight_rel_error = rel;
  append(check_degrees(w, agg, cfg, DegreeMode::simple));
  append(check_edge_count(w, agg, cfg));
  if (event_driven) {
    rep.excess_mean = agg.excess.mean();
    if (agg.budget.mean() > 0.0) rep.excess_ratio = agg.excess.mean() / agg.budget.mean();
    append(check_excess(w, agg, cfg));
  }
  if (w.size() <= kMaxMarginalVertices) {
    auto marg = check_marginals(w, agg, cfg);
    rep.marginal_max_z = marg.front().statistic;
    append(std::move(marg));
  }
  return rep;
}

std::string to_json(const ValidationReport& report, std::uint64_t seed) {
  using nlohmann::json;
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"statistic", c.statistic},
                      {"threshold", c.threshold},
                      {"verdict", c.passed ? "pass" : "fail"},
                      {"detail", c.detail}});
  }
  json j = {{"model", report.model},
            {"seed", seed},
            {"runs", report.runs},
            {"passed", report.passed()},
            {"budget_mean", report.budget_mean},
            {"budget_expected", report.budget_expected},
            {"excess_mean", report.excess_mean},
            {"excess_bound", report.excess_bound},
            {"degree_mean_per_vertex", report.degree_mean_per_vertex},
            {"degree_expected_per_vertex", report.degree_expected_per_vertex},
            {"checks", checks}};
  if (report.degree_weight_rel_error) j["degree_weight_rel_error"] = *report.degree_weight_rel_error;
  if (report.excess_ratio) j["excess_ratio"] = *report.excess_ratio;
  if (report.marginal_max_z) j["marginal_max_z"] = *report.marginal_max_z;
  return j.dump(2) + "\n";
}

}  // namespace nrgen
