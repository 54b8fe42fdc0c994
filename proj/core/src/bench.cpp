#include "nrgen/bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <cmath>
#include <new>
#include <sstream>

#ifdef __GLIBC__
#include <malloc.h>
#endif
#ifdef __linux__
#include <sched.h>
#endif

#include "nrgen/baselines.hpp"
#include "nrgen/error.hpp"
#include "nrgen/generators.hpp"

namespace nrgen::bench {
namespace {

using Clock = std::chrono::steady_clock;

double ns_since(Clock::time_point start, Clock::time_point stop) {
  return std::chrono::duration<double, std::nano>(stop - start).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

struct Timing {
  double preprocess = 0.0;
  double generate = 0.0;
  double total = 0.0;
  double events = 0.0;
  double edges = 0.0;
};

// Keeps the optimizer from discarding a result.
volatile std::uint64_t g_sink = 0;

Timing time_once(const WeightSequence& w, BenchModel model, bool presize, RandomStream& rng) {
  Timing t;
  const auto t0 = Clock::now();
  switch (model) {
    case BenchModel::nr_event: {
      const NrEventSampler sampler(w, GenOptions{presize, Corruption::none});
      const auto t1 = Clock::now();
      const auto out = sampler.sample_simple(rng);
      const auto t2 = Clock::now();
      t.preprocess = ns_since(t0, t1);
      t.generate = ns_since(t1, t2);
      t.total = ns_since(t0, t2);
      t.events = static_cast<double>(out.event_budget);
      t.edges = static_cast<double>(out.graph.edges.size());
      g_sink = g_sink + out.graph.edges.size();
      break;
    }
    case BenchModel::cl_skip: {
      const ChungLuSkipSampler sampler(w);
      const auto t1 = Clock::now();
      const auto g = sampler.sample(rng);
      const auto t2 = Clock::now();
      t.preprocess = ns_since(t0, t1);
      t.generate = ns_since(t1, t2);
      t.total = ns_since(t0, t2);
      t.events = t.edges = static_cast<double>(g.edges.size());
      g_sink = g_sink + g.edges.size();
      break;
    }
    case BenchModel::nr_oracle: {
      const auto g = generate_nr_oracle(w, rng);
      const auto t1 = Clock::now();
      t.generate = t.total = ns_since(t0, t1);
      t.events = t.edges = static_cast<double>(g.edges.size());
      g_sink = g_sink + g.edges.size();
      break;
    }
  }
  return t;
}

void pin_to_current_cpu() {
#ifdef __linux__
  const int cpu = sched_getcpu();
  if (cpu < 0) return;
  cpu_set_t set;
  CPU_ZERO(&set);
  CPU_SET(cpu, &set);
  sched_setaffinity(0, sizeof(set), &set);
#endif
}

// Stop glibc from handing large blocks back to the kernel on free, so a
// block faulted in once is reused instead of re-faulted on every rep.
void retain_freed_memory() {
#ifdef __GLIBC__
  mallopt(M_MMAP_MAX, 0);
  mallopt(M_TRIM_THRESHOLD, std::numeric_limits<int>::max());
#endif
}

}  // namespace

WeightLaw parse_weight_law(std::string_view tag) {
  if (tag == "uniform") return WeightLaw::uniform;
  if (tag == "two-block") return WeightLaw::two_block;
  if (tag == "pareto") return WeightLaw::pareto;
  throw DomainError("unknown weight law '" + std::string(tag) + "' (expected uniform|two-block|pareto)");
}

std::string_view to_string(WeightLaw law) {
  switch (law) {
    case WeightLaw::uniform: return "uniform";
    case WeightLaw::two_block: return "two-block";
    case WeightLaw::pareto: return "pareto";
  }
  return "uniform";
}

BenchModel parse_bench_model(std::string_view tag) {
  if (tag == "nr-event") return BenchModel::nr_event;
  if (tag == "cl-skip") return BenchModel::cl_skip;
  if (tag == "nr-oracle") return BenchModel::nr_oracle;
  throw DomainError("unknown bench model '" + std::string(tag) + "' (expected nr-event|cl-skip|nr-oracle)");
}

std::string_view to_string(BenchModel model) {
  switch (model) {
    case BenchModel::nr_event: return "nr-event";
    case BenchModel::cl_skip: return "cl-skip";
    case BenchModel::nr_oracle: return "nr-oracle";
  }
  return "nr-event";
}

WeightSequence make_weights(std::uint64_t n, double mean_degree, WeightLaw law, RandomStream& rng,
                            const WeightLawOptions& options) {
  if (n == 0) throw DomainError("make_weights: n must be >= 1");
  if (!(mean_degree > 0.0) || !std::isfinite(mean_degree)) {
    throw DomainError("make_weights: mean degree must be positive");
  }
  const double target = mean_degree * static_cast<double>(n);
  std::vector<double> x(n);
  switch (law) {
    case WeightLaw::uniform:
      std::fill(x.begin(), x.end(), mean_degree);
      return WeightSequence::from_values(std::move(x));
    case WeightLaw::two_block:
      for (auto& v : x) v = (rng.next_u64() >> 63) != 0 ? 4.0 : 1.0;
      break;
    case WeightLaw::pareto:
      for (auto& v : x) v = std::pow(1.0 - uniform_real(rng), -1.0 / options.pareto_shape);
      break;
  }

  double scale = target / compensated_sum(x);
  for (auto& v : x) v *= scale;

  if (law == WeightLaw::pareto && !options.pareto_untruncated && n > 1) {
    const double cap = std::sqrt(target) / std::log(static_cast<double>(n));
    // Water-filling: clip at the cap, spread the clipped mass over the rest.
    for (int iter = 0; iter < 64; ++iter) {
      double capped_mass = 0.0, free_mass = 0.0;
      for (auto& v : x) {
        if (v >= cap) {
          v = cap;
          capped_mass += cap;
        } else {
          free_mass += v;
        }
      }
      if (capped_mass == 0.0 || free_mass <= 0.0) break;
      scale = (target - capped_mass) / free_mass;
      if (std::abs(scale - 1.0) < 1e-12) break;
      for (auto& v : x) {
        if (v < cap) v = std::min(v * scale, cap);
      }
    }
  }
  return WeightSequence::from_values(std::move(x));
}

void SweepConfig::check() const {
  if (threads != 1) throw DomainError("bench: timing runs are single-threaded; refusing threads != 1");
  if (sizes.empty()) throw DomainError("bench: no sizes given");
  if (!std::is_sorted(sizes.begin(), sizes.end())) throw DomainError("bench: sizes must be ascending");
  if (sizes.front() == 0) throw DomainError("bench: sizes must be >= 1");
  if (!(mean_degree > 0.0)) throw DomainError("bench: mean degree must be > 0");
  if (models.empty()) throw DomainError("bench: no models given");
  if (reps < 1) throw DomainError("bench: reps must be >= 1");
}

std::vector<BenchResult> run_sweep(const SweepConfig& config, RandomStream& rng) {
  config.check();
  if (config.pin_cpu) pin_to_current_cpu();
  if (config.retain_heap) retain_freed_memory();
  RandomStream weight_rng = rng.fork(StreamId::weights);
  RandomStream gen_rng = rng.fork(StreamId::bench);

  const auto runnable = [](BenchModel m, std::uint64_t n) {
    return !(m == BenchModel::nr_oracle && n > kOracleMaxVertices);
  };

  // Fault in the peak footprint once so timed runs reuse warm pages.
  for (const BenchModel m : config.models) {
    std::uint64_t n = 0;
    for (const std::uint64_t s : config.sizes) {
      if (runnable(m, s)) n = s;
    }
    if (n == 0) continue;
    try {
      const auto w = make_weights(n, config.mean_degree, config.law, weight_rng, config.weight_options);
      time_once(w, m, config.presize, gen_rng);
    } catch (const std::bad_alloc&) {
      // Reported per cell below.
    }
  }

  struct Cell {
    BenchResult result;
    std::vector<double> pre, gen, tot, ev, ed;
  };
  std::vector<Cell> cells;
  for (const std::uint64_t n : config.sizes) {
    for (const BenchModel model : config.models) {
      Cell c;
      c.result.n = n;
      c.result.target_mean_degree = config.mean_degree;
      c.result.model = model;
      if (!runnable(model, n)) c.result.error = "oracle limited to n <= " + std::to_string(kOracleMaxVertices);
      cells.push_back(std::move(c));
    }
  }

  // Reps are the outer loop so that drift in machine load is spread evenly
  // over every cell instead of landing on one.
  for (std::uint64_t r = 0; r < config.reps; ++r) {
    for (Cell& c : cells) {
      if (!c.result.error.empty()) continue;
      try {
        const auto w = make_weights(c.result.n, config.mean_degree, config.law, weight_rng, config.weight_options);
        const Timing t = time_once(w, c.result.model, config.presize, gen_rng);
        c.pre.push_back(t.preprocess);
        c.gen.push_back(t.generate);
        c.tot.push_back(t.total);
        c.ev.push_back(t.events);
        c.ed.push_back(t.edges);
      } catch (const std::bad_alloc&) {
        c.result.error = "allocation failure";
      }
    }
  }

  std::vector<BenchResult> results;
  results.reserve(cells.size());
  for (Cell& c : cells) {
    if (c.result.error.empty()) {
      c.result.reps = config.reps;
      c.result.t_preprocess = median(c.pre);
      c.result.t_generate = median(c.gen);
      c.result.t_total = median(c.tot);
      c.result.events = median(c.ev);
      c.result.edges = median(c.ed);
    }
    results.push_back(std::move(c.result));
  }
  return results;
}

std::string emit_report(const std::vector<BenchResult>& results) {
  std::ostringstream os;
  os.precision(12);
  os << "model,n,target_mean_degree,reps,t_preprocess_ns,t_generate_ns,t_total_ns,events,edges,error\n";
  for (const auto& r : results) {
    os << to_string(r.model) << ',' << r.n << ',' << r.target_mean_degree << ',' << r.reps << ','
       << r.t_preprocess << ',' << r.t_generate << ',' << r.t_total << ',' << r.events << ','
       << r.edges << ',' << r.error << '\n';
  }
  return os.str();
}

std::string emit_plot_data(const std::vector<BenchResult>& results) {
  std::ostringstream os;
  os.precision(12);
  os << "model\tn\tmedian_total_ns\tmedian_preprocess_ns\tmedian_generate_ns\n";
  for (const BenchModel m : {BenchModel::nr_event, BenchModel::cl_skip, BenchModel::nr_oracle}) {
    for (const auto& r : results) {
      if (r.model != m || !r.error.empty()) continue;
      os << to_string(m) << '\t' << r.n << '\t' << r.t_total << '\t' << r.t_preprocess << '\t'
         << r.t_generate << '\n';
    }
  }
  return os.str();
}

std::vector<double> doubling_ratios(const std::vector<BenchResult>& results, BenchModel model,
                                    Phase phase) {
  std::vector<const BenchResult*> cells;
  for (const auto& r : results) {
    if (r.model == model && r.error.empty()) cells.push_back(&r);
  }
  std::sort(cells.begin(), cells.end(), [](auto* a, auto* b) { return a->n < b->n; });
  const auto pick = [phase](const BenchResult& r) {
    switch (phase) {
      case Phase::preprocess: return r.t_preprocess;
      case Phase::generate: return r.t_generate;
      case Phase::total: return r.t_total;
    }
    return r.t_total;
  };
  std::vector<double> ratios;
  for (std::size_t i = 1; i < cells.size(); ++i) ratios.push_back(pick(*cells[i]) / pick(*cells[i - 1]));
  return ratios;
}

}  // namespace nrgen::bench
