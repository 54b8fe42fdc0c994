#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nrgen/bench.hpp"
#include "nrgen/edge_io.hpp"
#include "nrgen/generators.hpp"
#include "nrgen/validation.hpp"
#include "nrgen/weights.hpp"

namespace nrgen::cli {

enum class Subcommand { generate, validate, bench };

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // I/O error or a failed validation check
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Subcommand subcommand = Subcommand::generate;
  Model model = Model::nr;
  std::optional<std::uint64_t> seed;  // resolved from OS entropy in run() when absent

  std::string weights_path;
  WeightFormat weights_format = WeightFormat::text;
  std::optional<std::uint64_t> n;  // er only
  std::optional<double> p;         // er only

  std::string out_path;  // empty: stdout
  EdgeFormat out_format = EdgeFormat::text;
  std::string dump_alias_path;
  GenOptions gen;

  ValidationConfig validation;
  std::string json_path;

  bench::SweepConfig sweep;
  std::string csv_path;
  std::string plot_path;
};

struct ParseResult {
  std::optional<RunConfig> config;  // set when the command should run
  int exit_code = kExitOk;          // meaningful when config is empty
  std::string output;               // help or version text
  std::string error;
};

// True when this build accepts --corrupt.
bool corruption_hooks_enabled() noexcept;

/// argv[0] is the program name. Never throws; usage problems come back as
/// exit code 2 with a message, --help and --version as exit code 0.
ParseResult parse_args(const std::vector<std::string>& argv);

/// Runs a parsed command. Echoes "seed=<u64>" to `err` before any sampling.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int main_entry(int argc, char** argv);

}  // namespace nrgen::cli
