#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "nrgen/error.hpp"
#include "nrgen/weights.hpp"
#include "test_util.hpp"

namespace nrgen {
namespace {

WeightSequence from_text(const std::string& text) {
  std::istringstream in(text);
  return load_weights(in, WeightFormat::text);
}

TEST(LoadWeights, FiveVertexWeights) {
  const auto w = from_text("4\n1\n6\n7\n2\n");
  ASSERT_EQ(w.size(), 5u);
  EXPECT_EQ(std::vector<double>(w.values().begin(), w.values().end()),
            (std::vector<double>{4, 1, 6, 7, 2}));
  EXPECT_EQ(w.total_mass(), 20.0);
}

TEST(LoadWeights, Singleton) {
  const auto w = from_text("1\n");
  EXPECT_EQ(w.size(), 1u);
  EXPECT_EQ(w.total_mass(), 1.0);
}

TEST(LoadWeights, NegativeWeightReportsLine) {
  try {
    from_text("1\n-2\n");
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(LoadWeights, MalformedTokenReportsLine) {
  try {
    from_text("# header\n1.5\n\n2x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(LoadWeights, CommentsBlankLinesAndNoTrailingNewline) {
  const auto w = from_text("# weights\n  3 \n\n# more\n+1e0\r\n0.5");
  EXPECT_EQ(w.size(), 3u);
  EXPECT_DOUBLE_EQ(w.total_mass(), 4.5);
}

TEST(LoadWeights, EmptyAndAllZero) {
  EXPECT_THROW(from_text(""), EmptyInputError);
  EXPECT_THROW(from_text("# only a comment\n"), EmptyInputError);
  EXPECT_THROW(from_text("0\n0\n"), DegeneracyError);
  EXPECT_THROW(from_text("nan\n"), DomainError);
  EXPECT_THROW(from_text("inf\n"), DomainError);
}

TEST(LoadWeights, ZeroWeightsAllowed) {
  const auto w = from_text("0\n0\n5\n");
  EXPECT_EQ(w.size(), 3u);
  EXPECT_EQ(w.total_mass(), 5.0);
}

TEST(LoadWeights, BinaryRoundTripPreservesBits) {
  RandomStream rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto values = testing::random_weights(rng, 1 + uniform_index(rng, 200), 0.0, 1e6);
    values[0] = 1e-300;  // subnormal-adjacent values survive too
    const auto w = WeightSequence::from_values(values);
    std::stringstream bin;
    write_weights(bin, w, WeightFormat::binary);
    const auto back = load_weights(bin, WeightFormat::binary);
    ASSERT_TRUE(std::equal(back.values().begin(), back.values().end(), values.begin(), values.end()));

    std::stringstream text;
    write_weights(text, w, WeightFormat::text);
    const auto back_text = load_weights(text, WeightFormat::text);
    ASSERT_TRUE(std::equal(back_text.values().begin(), back_text.values().end(), values.begin(),
                           values.end()));
  }
}

TEST(LoadWeights, BinaryLayout) {
  std::stringstream bin;
  write_weights(bin, WeightSequence::from_values({1.0, 2.0}), WeightFormat::binary);
  const std::string bytes = bin.str();
  ASSERT_EQ(bytes.size(), 4u + 8u + 16u);
  EXPECT_EQ(bytes.substr(0, 4), "RGWT");
  EXPECT_EQ(static_cast<unsigned char>(bytes[4]), 2u);
  // 1.0 = 0x3FF0000000000000, little-endian
  EXPECT_EQ(static_cast<unsigned char>(bytes[12 + 7]), 0x3Fu);
  EXPECT_EQ(static_cast<unsigned char>(bytes[12 + 6]), 0xF0u);
}

TEST(LoadWeights, BinaryErrors) {
  std::istringstream empty("");
  EXPECT_THROW(load_weights(empty, WeightFormat::binary), EmptyInputError);
  std::istringstream bad_magic(std::string("XXXX\0\0\0\0\0\0\0\0", 12));
  EXPECT_THROW(load_weights(bad_magic, WeightFormat::binary), ParseError);
  std::istringstream zero_count(std::string("RGWT\0\0\0\0\0\0\0\0", 12));
  EXPECT_THROW(load_weights(zero_count, WeightFormat::binary), EmptyInputError);
  std::istringstream truncated(std::string("RGWT\x02\0\0\0\0\0\0\0\0\0\0\0\0\0\xf0\x3f", 20));
  EXPECT_THROW(load_weights(truncated, WeightFormat::binary), ParseError);
}

TEST(Regularity, FiveVertexWeights) {
  const auto r = regularity_report(WeightSequence::from_values({4, 1, 6, 7, 2}));
  EXPECT_EQ(r.total_mass, 20.0);
  EXPECT_EQ(r.max_weight, 7.0);
  EXPECT_NEAR(r.hub_ratio, 1.5652475842498528, 1e-15);
  EXPECT_EQ(r.sum_squares, 106.0);
  EXPECT_EQ(r.mean_degree_target, 4.0);
}

TEST(Regularity, UniformWeights) {
  const auto r = regularity_report(WeightSequence::from_values({1, 1, 1, 1}));
  EXPECT_EQ(r.total_mass, 4.0);
  EXPECT_EQ(r.max_weight, 1.0);
  EXPECT_EQ(r.hub_ratio, 0.5);
  EXPECT_EQ(r.sum_squares, 4.0);
  EXPECT_EQ(r.mean_degree_target, 1.0);
}

TEST(Regularity, ZeroWeightsPermitted) {
  const auto r = regularity_report(WeightSequence::from_values({0, 0, 5}));
  EXPECT_EQ(r.total_mass, 5.0);
  EXPECT_EQ(r.max_weight, 5.0);
  EXPECT_NEAR(r.hub_ratio, std::sqrt(5.0), 1e-15);
  EXPECT_EQ(r.sum_squares, 25.0);
  EXPECT_NEAR(r.mean_degree_target, 5.0 / 3.0, 1e-15);
}

// Property checks over random sequences.

TEST(WeightsProperty, TotalMassMatchesExtendedPrecisionSum) {
  RandomStream rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 5000);
    // Mix of magnitudes to stress cancellation-free but lossy summation.
    std::vector<double> v(n);
    for (auto& x : v) x = std::ldexp(uniform_real(rng), static_cast<int>(uniform_index(rng, 60)) - 30);
    v[0] += 1.0;
    std::vector<long double> sorted(v.begin(), v.end());
    std::sort(sorted.begin(), sorted.end());
    const long double ref = std::accumulate(sorted.begin(), sorted.end(), 0.0L);
    const auto w = WeightSequence::from_values(v);
    const double ulp = std::nextafter(static_cast<double>(ref), INFINITY) - static_cast<double>(ref);
    EXPECT_LE(std::abs(static_cast<long double>(w.total_mass()) - ref), 4.0L * n * ulp);
  }
}

TEST(WeightsProperty, PermutationInvariance) {
  RandomStream rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto v = testing::random_weights(rng, 2 + uniform_index(rng, 300), 0.0, 100.0);
    const auto a = regularity_report(WeightSequence::from_values(v));
    std::shuffle(v.begin(), v.end(), rng);
    const auto b = regularity_report(WeightSequence::from_values(v));
    EXPECT_NEAR(a.total_mass, b.total_mass, 1e-12 * a.total_mass);
    EXPECT_EQ(a.max_weight, b.max_weight);
    EXPECT_NEAR(a.hub_ratio, b.hub_ratio, 1e-12 * a.hub_ratio);
    EXPECT_NEAR(a.sum_squares, b.sum_squares, 1e-12 * a.sum_squares);
    EXPECT_NEAR(a.mean_degree_target, b.mean_degree_target, 1e-12 * a.mean_degree_target);
  }
}

TEST(WeightsProperty, ConcatenationAddsMass) {
  RandomStream rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing::random_weights(rng, 1 + uniform_index(rng, 300), 0.0, 50.0);
    const auto b = testing::random_weights(rng, 1 + uniform_index(rng, 300), 0.0, 50.0);
    auto ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    const double la = WeightSequence::from_values(a).total_mass();
    const double lb = WeightSequence::from_values(b).total_mass();
    const double lab = WeightSequence::from_values(ab).total_mass();
    EXPECT_NEAR(lab, la + lb, 4.0 * std::numeric_limits<double>::epsilon() * lab);
  }
}

TEST(WeightsProperty, HubRatioIdentity) {
  RandomStream rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const auto v = testing::random_weights(rng, 1 + uniform_index(rng, 100), 0.0, 1000.0);
    const auto r = regularity_report(WeightSequence::from_values(v));
    const double lhs = r.hub_ratio * r.hub_ratio * r.total_mass;
    const double rhs = r.max_weight * r.max_weight;
    EXPECT_LE(std::abs(lhs - rhs), 8.0 * std::numeric_limits<double>::epsilon() * rhs);
  }
}

}  // namespace
}  // namespace nrgen
