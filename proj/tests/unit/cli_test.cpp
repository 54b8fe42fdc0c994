#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "test_util.hpp"

namespace nrgen::cli {
namespace {

namespace fs = std::filesystem;
using nrgen::testing::read_file;
using nrgen::testing::temp_dir;

ParseResult parse(std::vector<std::string> args) {
  args.insert(args.begin(), "nrgen");
  return parse_args(args);
}

struct Spawned {
  int exit_code = -1;
  std::string out;
};

// Runs a shell command, capturing stdout (stderr folded in when asked).
Spawned spawn(const std::string& cmd, bool merge_stderr = false) {
  Spawned s;
  FILE* pipe = popen((cmd + (merge_stderr ? " 2>&1" : " 2>/dev/null")).c_str(), "r");
  if (pipe == nullptr) return s;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) s.out.append(buf, got);
  const int status = pclose(pipe);
  s.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return s;
}

fs::path five_vertex_weights() {
  const auto path = temp_dir("cli") / "w.txt";
  std::ofstream(path) << "4\n1\n6\n7\n2\n";
  return path;
}

TEST(ParseArgs, GenerateNr) {
  const auto r = parse({"generate", "--model", "nr", "--weights", "w.txt", "--seed", "7", "--out", "g.txt"});
  ASSERT_TRUE(r.config.has_value()) << r.error;
  EXPECT_EQ(r.config->subcommand, Subcommand::generate);
  EXPECT_EQ(r.config->model, Model::nr);
  EXPECT_EQ(r.config->seed, 7u);
  EXPECT_EQ(r.config->weights_path, "w.txt");
  EXPECT_EQ(r.config->out_path, "g.txt");
  EXPECT_EQ(r.config->out_format, EdgeFormat::text);
  EXPECT_TRUE(r.config->gen.presize);
}

TEST(ParseArgs, GenerateEr) {
  const auto r = parse({"generate", "--model", "er", "--n", "20", "--p", "0.15789473684210525"});
  ASSERT_TRUE(r.config.has_value()) << r.error;
  EXPECT_EQ(r.config->model, Model::er);
  EXPECT_EQ(r.config->n, 20u);
  EXPECT_DOUBLE_EQ(*r.config->p, 3.0 / 19.0);
  EXPECT_FALSE(r.config->seed.has_value());
}

TEST(ParseArgs, UsageErrors) {
  EXPECT_EQ(parse({"bench", "--model", "nr"}).exit_code, kExitUsage);
  EXPECT_EQ(parse({"generate", "--model", "er", "--weights", "w.txt", "--n", "3", "--p", "0.1"}).exit_code,
            kExitUsage);
  EXPECT_EQ(parse({"generate", "--model", "er", "--n", "3"}).exit_code, kExitUsage);
  EXPECT_EQ(parse({"generate", "--model", "nr"}).exit_code, kExitUsage);
  EXPECT_EQ(parse({"generate", "--model", "nr", "--weights", "w", "--n", "3"}).exit_code, kExitUsage);
  EXPECT_EQ(parse({"generate", "--model", "ba", "--weights", "w"}).exit_code, kExitUsage);
  EXPECT_EQ(parse({"validate", "--model", "cl-skip", "--weights", "w"}).exit_code, kExitUsage);
  EXPECT_EQ(parse({"generate", "--bogus"}).exit_code, kExitUsage);
  EXPECT_EQ(parse({"bench", "--threads", "2"}).exit_code, kExitUsage);
  EXPECT_EQ(parse({"bench", "--mean-degree", "0"}).exit_code, kExitUsage);
  EXPECT_EQ(parse({}).exit_code, kExitUsage);
  const auto r = parse({"bench", "--model", "nr"});
  EXPECT_FALSE(r.config.has_value());
  EXPECT_FALSE(r.error.empty());
}

TEST(ParseArgs, BenchDefaultsAndLists) {
  const auto r = parse({"bench", "--sizes", "100,200", "--models", "nr-event,cl-skip,nr-oracle", "--reps", "3"});
  ASSERT_TRUE(r.config.has_value()) << r.error;
  EXPECT_EQ(r.config->sweep.sizes, (std::vector<std::uint64_t>{100, 200}));
  EXPECT_EQ(r.config->sweep.models.size(), 3u);
  EXPECT_EQ(r.config->sweep.reps, 3u);
  EXPECT_EQ(r.config->sweep.mean_degree, 10.0);
}

TEST(ParseArgs, HelpAndVersion) {
  const auto help = parse({"--help"});
  EXPECT_FALSE(help.config.has_value());
  EXPECT_EQ(help.exit_code, kExitOk);
  EXPECT_NE(help.output.find("generate"), std::string::npos);
  const auto version = parse({"--version"});
  EXPECT_EQ(version.exit_code, kExitOk);
  EXPECT_EQ(version.output.rfind("nrgen 0.1.0", 0), 0u);
}

TEST(ParseArgs, HookedBuildAcceptsCorrupt) {
  ASSERT_TRUE(corruption_hooks_enabled());
  const auto r = parse({"validate", "--model", "nr", "--weights", "w", "--corrupt", "budget-half"});
  ASSERT_TRUE(r.config.has_value()) << r.error;
  EXPECT_EQ(r.config->gen.corruption, Corruption::budget_half);
}

TEST(Run, SeedEchoAndStats) {
  const auto w = five_vertex_weights();
  const auto r = parse({"generate", "--model", "nr", "--weights", w.string(), "--seed", "7"});
  ASSERT_TRUE(r.config.has_value());
  std::ostringstream out, err;
  EXPECT_EQ(run(*r.config, out, err), kExitOk);
  EXPECT_EQ(err.str().rfind("seed=7\n", 0), 0u);
  EXPECT_EQ(out.str().rfind("# n=5 m=", 0), 0u);
  EXPECT_NE(out.str().find(" seed=7\n"), std::string::npos);
}

TEST(Run, UnwritableOutputFailsBeforeSampling) {
  const auto w = five_vertex_weights();
  const auto r = parse({"generate", "--model", "nr", "--weights", w.string(), "--seed", "7", "--out",
                        "/nonexistent-dir/g.txt"});
  ASSERT_TRUE(r.config.has_value());
  std::ostringstream out, err;
  EXPECT_EQ(run(*r.config, out, err), kExitFailure);
  EXPECT_EQ(err.str().find("events="), std::string::npos);
  EXPECT_NE(err.str().find("cannot open"), std::string::npos);
}

TEST(Run, MissingWeightsFileFails) {
  const auto r = parse({"generate", "--model", "nr", "--weights", "/nonexistent/w.txt", "--seed", "1"});
  ASSERT_TRUE(r.config.has_value());
  std::ostringstream out, err;
  EXPECT_EQ(run(*r.config, out, err), kExitFailure);
}

TEST(Run, ValidatePassesAndCorruptionFails) {
  const auto w = five_vertex_weights();
  const auto good = parse({"validate", "--model", "nr", "--weights", w.string(), "--seed", "3", "--runs", "5000"});
  ASSERT_TRUE(good.config.has_value());
  std::ostringstream out, err;
  EXPECT_EQ(run(*good.config, out, err), kExitOk) << out.str();
  const auto bad = parse({"validate", "--model", "nr", "--weights", w.string(), "--seed", "3", "--runs", "5000",
                          "--corrupt", "budget-half"});
  std::ostringstream out2, err2;
  EXPECT_EQ(run(*bad.config, out2, err2), kExitFailure);
  EXPECT_NE(out2.str().find("FAIL budget_mean"), std::string::npos);
}

TEST(Binary, ReleaseHelpHidesCorrupt) {
  for (const char* sub : {"generate", "validate"}) {
    const auto s = spawn(std::string(NRGEN_RELEASE_BIN) + " " + sub + " --help");
    EXPECT_EQ(s.exit_code, 0);
    EXPECT_NE(s.out.find("--seed"), std::string::npos);
    EXPECT_EQ(s.out.find("--corrupt"), std::string::npos);
    const auto hooked = spawn(std::string(NRGEN_HOOKED_BIN) + " " + sub + " --help");
    EXPECT_NE(hooked.out.find("--corrupt"), std::string::npos);
  }
  const auto w = five_vertex_weights();
  const auto s = spawn(std::string(NRGEN_RELEASE_BIN) + " validate --model nr --weights " + w.string() +
                       " --corrupt budget-half");
  EXPECT_EQ(s.exit_code, 2);
}

TEST(Binary, VersionAndUsageExitCodes) {
  const auto v = spawn(std::string(NRGEN_RELEASE_BIN) + " --version");
  EXPECT_EQ(v.exit_code, 0);
  EXPECT_EQ(v.out.rfind("nrgen 0.1.0", 0), 0u);
  EXPECT_EQ(spawn(std::string(NRGEN_RELEASE_BIN) + " bench --model nr").exit_code, 2);
  EXPECT_EQ(spawn(std::string(NRGEN_RELEASE_BIN) + " frobnicate").exit_code, 2);
}

TEST(Binary, SeedEchoedWithoutExplicitSeed) {
  const auto w = five_vertex_weights();
  const auto s = spawn(std::string(NRGEN_RELEASE_BIN) + " generate --model nr --weights " + w.string() +
                           " --out " + (temp_dir("cli") / "entropy.txt").string(),
                       true);
  EXPECT_EQ(s.exit_code, 0);
  EXPECT_EQ(s.out.rfind("seed=", 0), 0u);
}

TEST(Binary, ByteIdenticalOutputs) {
  const auto w = five_vertex_weights();
  const auto dir = temp_dir("cli");
  for (const char* fmt : {"text", "bin"}) {
    std::string files[2];
    for (int k = 0; k < 2; ++k) {
      const auto out = dir / ("det" + std::to_string(k) + "." + fmt);
      const auto s = spawn(std::string(NRGEN_RELEASE_BIN) + " generate --model nr --weights " + w.string() +
                           " --seed 7 --format " + fmt + " --out " + out.string());
      ASSERT_EQ(s.exit_code, 0);
      files[k] = read_file(out);
    }
    EXPECT_FALSE(files[0].empty());
    EXPECT_EQ(files[0], files[1]);
  }
}

TEST(Binary, DumpAlias) {
  const auto w = five_vertex_weights();
  const auto tsv = temp_dir("cli") / "alias.tsv";
  const auto s = spawn(std::string(NRGEN_RELEASE_BIN) + " generate --model nr --weights " + w.string() +
                       " --seed 1 --out /dev/null --dump-alias " + tsv.string());
  ASSERT_EQ(s.exit_code, 0);
  EXPECT_EQ(read_file(tsv).rfind("index\tcutoff\talias\n0\t1\t0\n1\t0.25\t2\n", 0), 0u);
}

}  // namespace
}  // namespace nrgen::cli
