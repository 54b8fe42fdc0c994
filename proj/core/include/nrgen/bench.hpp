#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nrgen/random.hpp"
#include "nrgen/weights.hpp"

namespace nrgen::bench {

enum class WeightLaw { uniform, two_block, pareto };
enum class BenchModel { nr_event, cl_skip, nr_oracle };

WeightLaw parse_weight_law(std::string_view tag);
std::string_view to_string(WeightLaw law);
BenchModel parse_bench_model(std::string_view tag);
std::string_view to_string(BenchModel model);

struct WeightLawOptions {
  // Pareto weights are capped at sqrt(L_n) / ln(n) unless this is set.
  bool pareto_untruncated = false;
  double pareto_shape = 2.5;
};

/// n weights with total mass mean_degree * n.
/// uniform: constant; two-block: each vertex independently light (1) or
/// heavy (4) with probability 1/2, rescaled; pareto: Pareto(shape) draws,
/// rescaled and capped by water-filling.
WeightSequence make_weights(std::uint64_t n, double mean_degree, WeightLaw law, RandomStream& rng,
                            const WeightLawOptions& options = {});

struct SweepConfig {
  std::vector<std::uint64_t> sizes;
  double mean_degree = 10.0;
  WeightLaw law = WeightLaw::uniform;
  std::vector<BenchModel> models;
  std::uint64_t reps = 5;
  bool presize = true;
  WeightLawOptions weight_options;
  unsigned threads = 1;  // timing runs are single-threaded; anything else is refused
  // Process-wide side effects: pin the calling thread to its current CPU and
  // keep freed heap memory mapped (glibc) so warm-up pages are reused.
  bool pin_cpu = true;
  bool retain_heap = true;

  void check() const;
};

// Median over reps for one (n, model) cell. Durations in nanoseconds.
struct BenchResult {
  std::uint64_t n = 0;
  double target_mean_degree = 0.0;
  BenchModel model = BenchModel::nr_event;
  std::uint64_t reps = 0;
  double t_preprocess = 0.0;
  double t_generate = 0.0;
  double t_total = 0.0;
  double events = 0.0;  // median K; equals edges for pairwise samplers
  double edges = 0.0;
  std::string error;    // nonempty when the cell could not be run
};

// Largest n accepted for the quadratic oracle.
inline constexpr std::uint64_t kOracleMaxVertices = std::uint64_t{1} << 15;

/// Warms up once per model at its largest size, then runs the reps
/// round-robin over all (n, model) cells and reports per-cell medians.
std::vector<BenchResult> run_sweep(const SweepConfig& config, RandomStream& rng);

/// CSV, one row per result:
/// model,n,target_mean_degree,reps,t_preprocess_ns,t_generate_ns,t_total_ns,events,edges,error
std::string emit_report(const std::vector<BenchResult>& results);

/// TSV "model\tn\tmedian_total_ns\tmedian_preprocess_ns\tmedian_generate_ns" for plotting.
std::string emit_plot_data(const std::vector<BenchResult>& results);

// Ratios of a timing column between consecutive sizes of one model.
enum class Phase { preprocess, generate, total };
std::vector<double> doubling_ratios(const std::vector<BenchResult>& results, BenchModel model,
                                    Phase phase);

}  // namespace nrgen::bench
