#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nrgen/generators.hpp"
#include "nrgen/graph.hpp"
#include "nrgen/random.hpp"
#include "nrgen/stats.hpp"
#include "nrgen/weights.hpp"

namespace nrgen {

enum class Model { nr, nr_multi, er, nr_oracle, cl_skip };

Model parse_model(std::string_view tag);
std::string_view to_string(Model m);

enum class DegreeMode { multigraph, simple };

struct ValidationConfig {
  std::uint64_t runs = 10'000;
  double significance = 1e-4;
  double sigma_mult = 4.0;

  // Throws DomainError when a field is out of range.
  void check() const;
};

struct CheckResult {
  std::string name;
  double statistic = 0.0;
  double threshold = 0.0;
  bool passed = false;
  std::string detail;
};

// One generator output, reduced to what the checks need.
struct Draw {
  std::uint64_t n = 0;
  bool multigraph = false;
  std::optional<std::uint64_t> event_budget;  // absent for pairwise samplers
  std::vector<Edge> edges;                    // events when multigraph
};

using DrawSource = std::function<Draw(RandomStream&)>;

// Source over a prepared sampler for nr, nr-multi, nr-oracle or cl-skip.
DrawSource make_source(const WeightSequence& w, Model model, GenOptions options = {});
DrawSource make_er_source(std::uint64_t n, double p, GenOptions options = {});

/// Weights under which the Norros-Reittu closed forms reproduce G(n, p):
/// x_i = 2T/n with T = -log(1-p) n^2 / 2. Requires 0 < p < 1.
WeightSequence er_equivalent_weights(std::uint64_t n, double p);

/// Statistics accumulated over repeated draws. Pair presence is tracked only
/// when n <= kMaxMarginalVertices.
struct RunAggregate {
  std::uint64_t n = 0;
  std::uint64_t runs = 0;
  bool multigraph = false;
  bool has_budget = false;
  stats::RunningMoments budget;
  std::vector<std::uint64_t> budget_histogram;  // last bin collects the tail
  std::vector<stats::RunningMoments> degree;
  stats::RunningMoments edge_count;
  stats::RunningMoments excess;
  std::vector<std::uint64_t> pair_presence;  // row-major n x n, i < j used
  std::uint64_t non_simple_runs = 0;
};

inline constexpr std::uint64_t kMaxMarginalVertices = 64;

RunAggregate collect(const DrawSource& source, std::uint64_t runs, RandomStream& rng,
                     std::uint64_t budget_histogram_bins = 0);

// Closed-form references, all computed from the weights alone.
double expected_budget(const WeightSequence& w);
std::vector<double> expected_multigraph_degrees(const WeightSequence& w);
std::vector<double> expected_simple_degrees(const WeightSequence& w);
double expected_simple_edges(const WeightSequence& w);
double excess_bound(const WeightSequence& w);
double edge_probability(const WeightSequence& w, std::size_t i, std::size_t j);

// Checks over a finished aggregate.
std::vector<CheckResult> check_budget(const WeightSequence& w, const RunAggregate& agg,
                                      const ValidationConfig& cfg);
std::vector<CheckResult> check_degrees(const WeightSequence& w, const RunAggregate& agg,
                                       const ValidationConfig& cfg, DegreeMode mode);
std::vector<CheckResult> check_edge_count(const WeightSequence& w, const RunAggregate& agg,
                                          const ValidationConfig& cfg);
std::vector<CheckResult> check_excess(const WeightSequence& w, const RunAggregate& agg,
                                      const ValidationConfig& cfg);
std::vector<CheckResult> check_marginals(const WeightSequence& w, const RunAggregate& agg,
                                         const ValidationConfig& cfg);
CheckResult check_simplicity(const RunAggregate& agg);

/// Each runs `cfg.runs` fresh draws from `source` and applies one family of checks.
std::vector<CheckResult> validate_budget(const WeightSequence& w, const ValidationConfig& cfg,
                                         RandomStream& rng, const DrawSource& source);
std::vector<CheckResult> validate_degrees(const WeightSequence& w, const ValidationConfig& cfg,
                                          RandomStream& rng, const DrawSource& source,
                                          DegreeMode mode);
std::vector<CheckResult> validate_excess(const WeightSequence& w, const ValidationConfig& cfg,
                                         RandomStream& rng, const DrawSource& source);
// Throws DomainError when n > kMaxMarginalVertices; use the aggregate checks instead.
std::vector<CheckResult> validate_marginals(const WeightSequence& w, const ValidationConfig& cfg,
                                            RandomStream& rng, const DrawSource& source);

struct ValidationReport {
  std::string model;
  std::uint64_t runs = 0;
  double budget_mean = 0.0;
  double budget_expected = 0.0;
  std::vector<double> degree_mean_per_vertex;
  std::vector<double> degree_expected_per_vertex;
  // Simple mode: max_i |E[D_i] - x_i| / x_i over positive weights.
  std::optional<double> degree_weight_rel_error;
  double excess_mean = 0.0;
  double excess_bound = 0.0;
  std::optional<double> excess_ratio;  // mean excess / mean budget
  std::optional<double> marginal_max_z;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Full suite for one model from a single pass of `cfg.runs` draws.
/// For Model::er the weights must be er_equivalent_weights(n, p).
ValidationReport validate_model(const WeightSequence& w, Model model, const DrawSource& source,
                                const ValidationConfig& cfg, RandomStream& rng);

std::string to_json(const ValidationReport& report, std::uint64_t seed);

}  // namespace nrgen
