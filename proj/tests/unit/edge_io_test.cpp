#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "nrgen/edge_io.hpp"
#include "nrgen/error.hpp"
#include "nrgen/random.hpp"

namespace nrgen {
namespace {

std::string write(const SimpleGraph& g, std::uint64_t seed, EdgeFormat fmt) {
  std::ostringstream os(std::ios::binary);
  write_edges(os, g, seed, fmt);
  return os.str();
}

EdgeFile read(const std::string& bytes, EdgeFormat fmt) {
  std::istringstream is(bytes, std::ios::binary);
  return read_edges(is, fmt);
}

TEST(EdgeText, ExactBytes) {
  const SimpleGraph g{5, {{0, 3}, {2, 4}}};
  EXPECT_EQ(write(g, 7, EdgeFormat::text), "# n=5 m=2 seed=7\n0\t3\n2\t4\n");
}

TEST(EdgeText, EmptyGraph) {
  EXPECT_EQ(write(SimpleGraph{3, {}}, 0, EdgeFormat::text), "# n=3 m=0 seed=0\n");
  const auto f = read("# n=3 m=0 seed=0\n", EdgeFormat::text);
  EXPECT_EQ(f.n, 3u);
  EXPECT_TRUE(f.edges.empty());
}

TEST(EdgeText, MaxSeedRoundTrips) {
  const std::uint64_t seed = ~std::uint64_t{0};
  const auto f = read(write(SimpleGraph{2, {{0, 1}}}, seed, EdgeFormat::text), EdgeFormat::text);
  EXPECT_EQ(f.seed, seed);
}

TEST(EdgeBinary, Layout) {
  const SimpleGraph g{5, {{0, 3}, {2, 4}}};
  const std::string bytes = write(g, 7, EdgeFormat::binary);
  ASSERT_EQ(bytes.size(), 4u + 8 + 8 + 2 * 8);
  EXPECT_EQ(bytes.substr(0, 4), "RGEL");
  EXPECT_EQ(static_cast<unsigned char>(bytes[4]), 5);
  for (int i = 5; i < 12; ++i) EXPECT_EQ(bytes[i], 0);
  EXPECT_EQ(static_cast<unsigned char>(bytes[12]), 2);
  EXPECT_EQ(static_cast<unsigned char>(bytes[20]), 0);
  EXPECT_EQ(static_cast<unsigned char>(bytes[24]), 3);
  EXPECT_EQ(static_cast<unsigned char>(bytes[28]), 2);
  EXPECT_EQ(static_cast<unsigned char>(bytes[32]), 4);
}

TEST(EdgeBinary, WideIdsUseEightBytes) {
  const std::uint64_t n = std::uint64_t{1} << 32;
  const SimpleGraph g{n, {{1, n - 1}}};
  const std::string bytes = write(g, 0, EdgeFormat::binary);
  EXPECT_EQ(bytes.size(), 4u + 8 + 8 + 16);
  const auto f = read(bytes, EdgeFormat::binary);
  EXPECT_EQ(f.edges, g.edges);
  EXPECT_EQ(f.n, n);
}

TEST(EdgeIo, RoundTripProperty) {
  RandomStream rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t n = 1 + uniform_index(rng, trial % 2 ? 1000 : (std::uint64_t{1} << 40));
    SimpleGraph g{n, {}};
    const auto m = uniform_index(rng, 50);
    for (std::uint64_t k = 0; k < m; ++k) g.edges.push_back({uniform_index(rng, n), uniform_index(rng, n)});
    const std::uint64_t seed = rng.next_u64();
    for (const auto fmt : {EdgeFormat::text, EdgeFormat::binary}) {
      const auto f = read(write(g, seed, fmt), fmt);
      ASSERT_EQ(f.n, n);
      ASSERT_EQ(f.edges, g.edges);
      if (fmt == EdgeFormat::text) ASSERT_EQ(f.seed, seed);
    }
  }
}

TEST(EdgeIo, MultigraphWritesEvents) {
  const Multigraph mg{2, {{0, 0}, {0, 1}, {0, 1}}};
  std::ostringstream os;
  write_edges(os, mg, 1, EdgeFormat::text);
  EXPECT_EQ(os.str(), "# n=2 m=3 seed=1\n0\t0\n0\t1\n0\t1\n");
}

TEST(EdgeIo, ParseErrors) {
  EXPECT_THROW(read("0\t1\n", EdgeFormat::text), ParseError);
  EXPECT_THROW(read("# n=2 m=2 seed=0\n0\t1\n", EdgeFormat::text), ParseError);
  EXPECT_THROW(read("# n=2 seed=0\n", EdgeFormat::text), ParseError);
  try {
    read("# n=4 m=2 seed=0\n0\t1\n0 2\n", EdgeFormat::text);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(read("# n=4 m=1 seed=0\n0\tx\n", EdgeFormat::text), ParseError);
  EXPECT_THROW(read("RGEX", EdgeFormat::binary), ParseError);
  EXPECT_THROW(read(std::string("RGEL\x02\0\0", 7), EdgeFormat::binary), ParseError);
  std::string truncated = write(SimpleGraph{3, {{0, 1}}}, 0, EdgeFormat::binary);
  truncated.pop_back();
  EXPECT_THROW(read(truncated, EdgeFormat::binary), ParseError);
}

TEST(EdgeIo, FormatTags) {
  EXPECT_EQ(parse_edge_format("text"), EdgeFormat::text);
  EXPECT_EQ(parse_edge_format("bin"), EdgeFormat::binary);
  EXPECT_THROW(parse_edge_format("csv"), DomainError);
}

}  // namespace
}  // namespace nrgen
