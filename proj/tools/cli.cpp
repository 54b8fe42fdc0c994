#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nrgen/alias.hpp"
#include "nrgen/baselines.hpp"
#include "nrgen/error.hpp"
#include "nrgen/version.hpp"

namespace nrgen::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::string version_text() {
  return std::string("nrgen ") + kVersion + " (" + kBuildType + ", " + kCompiler + ")";
}

// Opens `path` for writing, or returns nullptr for stdout.
std::unique_ptr<std::ofstream> open_sink(const std::string& path) {
  if (path.empty()) return nullptr;
  auto f = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
  if (!*f) throw IoError("cannot open '" + path + "' for writing");
  return f;
}

struct GraphArgs {
  std::string model = "nr";
  std::string weights_format = "text";
  std::string corrupt = "none";
};

void add_graph_options(CLI::App* sub, RunConfig& cfg, GraphArgs& args, bool with_hooks) {
  sub->add_option("--model", args.model, "Model to sample");
  sub->add_option("--weights", cfg.weights_path, "Weight file");
  sub->add_option("--weights-format", args.weights_format, "Weight file format: text|bin");
  sub->add_option("--n", cfg.n, "Vertex count (er only)");
  sub->add_option("--p", cfg.p, "Edge probability in [0, 1) (er only)");
  sub->add_option("--seed", cfg.seed, "Master seed (default: OS entropy)");
  if (with_hooks) {
    sub->add_option("--corrupt", args.corrupt,
                    "Negative-control fault: budget-half|keep-loops|skip-dedup");
  }
}

void resolve_graph_source(RunConfig& cfg, const GraphArgs& args) {
  cfg.weights_format = parse_weight_format(args.weights_format);
  cfg.gen.corruption = parse_corruption(args.corrupt);
  if (cfg.model == Model::er) {
    if (!cfg.weights_path.empty()) throw UsageError("--weights conflicts with --model er; use --n and --p");
    if (!cfg.n || !cfg.p) throw UsageError("--model er requires --n and --p");
  } else {
    if (cfg.n || cfg.p) throw UsageError("--n and --p apply only to --model er");
    if (cfg.weights_path.empty()) throw UsageError("--model " + std::string(to_string(cfg.model)) + " requires --weights");
  }
}

int run_generate(const RunConfig& cfg, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  // Fail fast on unwritable outputs, before any sampling.
  auto sink = open_sink(cfg.out_path);
  std::ostream& os = sink ? *sink : out;
  auto alias_sink = open_sink(cfg.dump_alias_path);

  RandomStream rng(seed, StreamId::generate);
  if (cfg.model == Model::er) {
    const auto o = generate_er(*cfg.n, *cfg.p, rng, cfg.gen);
    write_edges(os, o.graph, seed, cfg.out_format);
    err << "n=" << o.graph.n << " events=" << o.event_budget << " edges=" << o.graph.edges.size()
        << " loops_discarded=" << o.loops_discarded << " duplicates_merged=" << o.duplicates_merged << '\n';
    return kExitOk;
  }

  const WeightSequence w = load_weights_file(cfg.weights_path, cfg.weights_format);
  const RegularityReport reg = regularity_report(w);
  if (reg.hub_ratio > 1.0) {
    err << "warning: max weight / sqrt(L_n) = " << reg.hub_ratio << " > 1; edge probabilities are not uniformly small\n";
  }
  if (alias_sink) AliasTable::build(w).dump_tsv(*alias_sink);

  switch (cfg.model) {
    case Model::nr: {
      const auto o = generate_nr_simple(w, rng, cfg.gen);
      write_edges(os, o.graph, seed, cfg.out_format);
      err << "n=" << o.graph.n << " events=" << o.event_budget << " edges=" << o.graph.edges.size()
          << " loops_discarded=" << o.loops_discarded << " duplicates_merged=" << o.duplicates_merged << '\n';
      break;
    }
    case Model::nr_multi: {
      const auto o = generate_nr_multigraph(w, rng, cfg.gen);
      write_edges(os, o.graph, seed, cfg.out_format);
      err << "n=" << o.graph.n << " events=" << o.event_budget << '\n';
      break;
    }
    case Model::nr_oracle: {
      const auto g = generate_nr_oracle(w, rng);
      write_edges(os, g, seed, cfg.out_format);
      err << "n=" << g.n << " edges=" << g.edges.size() << '\n';
      break;
    }
    case Model::cl_skip: {
      const auto g = generate_chung_lu_skip(w, rng);
      write_edges(os, g, seed, cfg.out_format);
      err << "n=" << g.n << " edges=" << g.edges.size() << '\n';
      break;
    }
    case Model::er:
      break;
  }
  return kExitOk;
}

int run_validate(const RunConfig& cfg, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  auto sink = open_sink(cfg.json_path);
  RandomStream rng(seed, StreamId::validate);

  const WeightSequence w = cfg.model == Model::er
                               ? er_equivalent_weights(*cfg.n, *cfg.p)
                               : load_weights_file(cfg.weights_path, cfg.weights_format);
  const DrawSource source = cfg.model == Model::er ? make_er_source(*cfg.n, *cfg.p, cfg.gen)
                                                   : make_source(w, cfg.model, cfg.gen);
  const ValidationReport report = validate_model(w, cfg.model, source, cfg.validation, rng);

  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " statistic=" << c.statistic
        << " threshold=" << c.threshold << " (" << c.detail << ")\n";
  }
  if (sink) *sink << to_json(report, seed);
  if (!report.passed()) {
    err << "validation failed\n";
    return kExitFailure;
  }
  return kExitOk;
}

int run_bench(const RunConfig& cfg, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  auto csv = open_sink(cfg.csv_path);
  auto plot = open_sink(cfg.plot_path);
  RandomStream rng(seed, StreamId::bench);
  const auto results = bench::run_sweep(cfg.sweep, rng);
  (csv ? *csv : out) << bench::emit_report(results);
  if (plot) *plot << bench::emit_plot_data(results);
  for (const auto model : cfg.sweep.models) {
    err << bench::to_string(model) << " total-time doubling ratios:";
    for (const double r : bench::doubling_ratios(results, model, bench::Phase::total)) err << ' ' << r;
    err << '\n';
  }
  return kExitOk;
}

}  // namespace

bool corruption_hooks_enabled() noexcept {
#ifdef NRGEN_TEST_HOOKS
  return true;
#else
  return false;
#endif
}

ParseResult parse_args(const std::vector<std::string>& argv) {
  ParseResult result;
  RunConfig cfg;
  const bool hooks = corruption_hooks_enabled();

  CLI::App app{"Exact event-driven generator for Norros-Reittu expected-degree random graphs", "nrgen"};
  app.set_version_flag("--version", version_text());
  app.require_subcommand(1);

  GraphArgs gen_args;
  std::string out_format = "text";
  auto* gen = app.add_subcommand("generate", "Sample one graph and write its edge list");
  add_graph_options(gen, cfg, gen_args, hooks);
  gen->add_option("--out", cfg.out_path, "Output path (default: stdout)");
  gen->add_option("--format", out_format, "Output format: text|bin");
  gen->add_option("--dump-alias", cfg.dump_alias_path, "Write the alias table as TSV");
  gen->add_flag("--no-presize", "Do not pre-size the dedup hash set");

  GraphArgs val_args;
  auto* val = app.add_subcommand("validate", "Check a generator against closed-form statistics");
  add_graph_options(val, cfg, val_args, hooks);
  val->add_option("--runs", cfg.validation.runs, "Independent generations");
  val->add_option("--significance", cfg.validation.significance, "Chi-square significance level");
  val->add_option("--sigma-mult", cfg.validation.sigma_mult, "Standard-error multiplier");
  val->add_option("--json", cfg.json_path, "Write the JSON report here");

  std::string sizes = "1048576,2097152,4194304";
  std::string models = "nr-event,cl-skip";
  std::string law = "uniform";
  auto* bn = app.add_subcommand("bench", "Time the generators over a size sweep");
  bn->add_option("--sizes", sizes, "Comma-separated ascending vertex counts");
  bn->add_option("--mean-degree", cfg.sweep.mean_degree, "Target mean degree (> 0)");
  bn->add_option("--weights-law", law, "uniform|two-block|pareto");
  bn->add_option("--models", models, "Comma-separated: nr-event,cl-skip,nr-oracle");
  bn->add_option("--reps", cfg.sweep.reps, "Repetitions per cell (median reported)");
  bn->add_option("--seed", cfg.seed, "Master seed (default: OS entropy)");
  bn->add_option("--csv", cfg.csv_path, "CSV output path (default: stdout)");
  bn->add_option("--plot-data", cfg.plot_path, "TSV plot-data output path");
  bn->add_option("--threads", cfg.sweep.threads, "Must be 1; timing runs are single-threaded");
  bn->add_flag("--no-presize", "Do not pre-size the dedup hash set");
  bn->add_flag("--pareto-untruncated", "Do not cap Pareto weights (stress test)");

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& a : argv) raw.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    result.output = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.output = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::CallForVersion&) {
    result.output = version_text() + "\n";
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kExitUsage;
    result.error = e.what();
    return result;
  }

  try {
    if (gen->parsed()) {
      cfg.subcommand = Subcommand::generate;
      cfg.model = parse_model(gen_args.model);
      cfg.out_format = parse_edge_format(out_format);
      cfg.gen.presize = gen->count("--no-presize") == 0;
      resolve_graph_source(cfg, gen_args);
    } else if (val->parsed()) {
      cfg.subcommand = Subcommand::validate;
      cfg.model = parse_model(val_args.model);
      if (cfg.model == Model::cl_skip) throw UsageError("validate supports nr|nr-multi|er|nr-oracle");
      resolve_graph_source(cfg, val_args);
      cfg.validation.check();
    } else {
      cfg.subcommand = Subcommand::bench;
      cfg.sweep.sizes.clear();
      for (const auto& s : split_csv(sizes)) {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) throw UsageError("bad size '" + s + "'");
        cfg.sweep.sizes.push_back(v);
      }
      cfg.sweep.models.clear();
      for (const auto& m : split_csv(models)) cfg.sweep.models.push_back(bench::parse_bench_model(m));
      cfg.sweep.law = bench::parse_weight_law(law);
      cfg.sweep.presize = bn->count("--no-presize") == 0;
      cfg.sweep.weight_options.pareto_untruncated = bn->count("--pareto-untruncated") != 0;
      cfg.sweep.check();
    }
  } catch (const std::exception& e) {
    result.exit_code = kExitUsage;
    result.error = e.what();
    return result;
  }

  result.config = std::move(cfg);
  return result;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = config.seed ? *config.seed : entropy_seed();
  err << "seed=" << seed << '\n';
  try {
    switch (config.subcommand) {
      case Subcommand::generate: return run_generate(config, seed, out, err);
      case Subcommand::validate: return run_validate(config, seed, out, err);
      case Subcommand::bench: return run_bench(config, seed, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int main_entry(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  const ParseResult parsed = parse_args(args);
  if (!parsed.config) {
    if (!parsed.output.empty()) std::cout << parsed.output;
    if (!parsed.error.empty()) {
      std::cerr << "usage error: " << parsed.error << "\nRun with --help for usage.\n";
    }
    return parsed.exit_code;
  }
  return run(*parsed.config, std::cout, std::cerr);
}

}  // namespace nrgen::cli
