#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "nrgen/random.hpp"

namespace nrgen::testing {

// 4-sigma two-sided bound on a sample frequency.
inline double freq_tolerance(double p, double samples, double sigmas = 4.0) {
  return sigmas * std::sqrt(p * (1.0 - p) / samples);
}

inline std::vector<double> random_weights(RandomStream& rng, std::size_t n, double lo, double hi) {
  std::vector<double> w(n);
  for (auto& v : w) v = lo + (hi - lo) * (1.0 - uniform_real(rng));
  return w;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("nrgen_" + name);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace nrgen::testing
