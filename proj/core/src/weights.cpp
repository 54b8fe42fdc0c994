#include "nrgen/weights.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string>

#include "byte_order.hpp"
#include "nrgen/error.hpp"

namespace nrgen {
namespace {

constexpr char kWeightMagic[4] = {'R', 'G', 'W', 'T'};

void check_weight(double v, std::size_t line) {
  if (!std::isfinite(v)) throw DomainError("weight is not finite", line);
  if (v < 0.0) throw DomainError("negative weight", line);
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<double> read_text(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view tok = trim(line);
    if (tok.empty() || tok.front() == '#') continue;
    double v = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    // from_chars rejects a leading '+', which is legal in decimal text.
    if (*first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range) throw DomainError("weight out of range", lineno);
    if (ec != std::errc{} || ptr != last) {
      throw ParseError("malformed weight '" + std::string(tok) + "'", lineno);
    }
    check_weight(v, lineno);
    values.push_back(v);
  }
  if (in.bad()) throw IoError("read failure on weight stream");
  return values;
}

std::vector<double> read_binary(std::istream& in) {
  char magic[4] = {};
  if (!in.read(magic, 4)) {
    if (in.gcount() == 0) throw EmptyInputError("empty weight input");
    throw ParseError("truncated weight header", 0);
  }
  if (!std::equal(magic, magic + 4, kWeightMagic)) throw ParseError("bad magic, expected RGWT", 0);
  std::uint64_t n = 0;
  if (!detail::get_u64_le(in, n)) throw ParseError("truncated weight count", 0);
  std::vector<double> values;
  // The count is untrusted; grow as values arrive instead of reserving n.
  values.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(n, 1u << 20)));
  for (std::uint64_t i = 0; i < n; ++i) {
    double v = 0.0;
    if (!detail::get_f64_le(in, v)) {
      throw ParseError("truncated weight payload at index " + std::to_string(i), 0);
    }
    if (!std::isfinite(v)) throw DomainError("weight at index " + std::to_string(i) + " is not finite");
    if (v < 0.0) throw DomainError("negative weight at index " + std::to_string(i));
    values.push_back(v);
  }
  return values;
}

}  // namespace

WeightFormat parse_weight_format(std::string_view tag) {
  if (tag == "text") return WeightFormat::text;
  if (tag == "bin") return WeightFormat::binary;
  throw DomainError("unknown weight format '" + std::string(tag) + "' (expected text|bin)");
}

double compensated_sum(std::span<const double> values) noexcept {
  double sum = 0.0;
  double carry = 0.0;
  for (const double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

WeightSequence WeightSequence::from_values(std::vector<double> values) {
  if (values.empty()) throw EmptyInputError("weight sequence is empty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) throw DomainError("weight at index " + std::to_string(i) + " is not finite");
    if (values[i] < 0.0) throw DomainError("negative weight at index " + std::to_string(i));
  }
  const double total = compensated_sum(values);
  if (!(total > 0.0)) throw DegeneracyError("all weights are zero; endpoint distribution undefined");
  if (!std::isfinite(total)) throw DomainError("total weight mass overflows");
  return WeightSequence(std::move(values), total);
}

WeightSequence load_weights(std::istream& source, WeightFormat format) {
  std::vector<double> values =
      format == WeightFormat::text ? read_text(source) : read_binary(source);
  if (values.empty()) throw EmptyInputError("no weights in input");
  return WeightSequence::from_values(std::move(values));
}

WeightSequence load_weights_file(const std::string& path, WeightFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open weight file '" + path + "'");
  return load_weights(in, format);
}

void write_weights(std::ostream& sink, const WeightSequence& w, WeightFormat format) {
  if (format == WeightFormat::binary) {
    sink.write(kWeightMagic, 4);
    detail::put_u64_le(sink, w.size());
    for (const double v : w.values()) detail::put_f64_le(sink, v);
  } else {
    char buf[64];
    for (const double v : w.values()) {
      // Shortest round-trip representation.
      const auto res = std::to_chars(buf, buf + sizeof(buf), v);
      sink.write(buf, res.ptr - buf);
      sink.put('\n');
    }
  }
  if (!sink) throw IoError("write failure on weight stream");
}

RegularityReport regularity_report(const WeightSequence& w) {
  RegularityReport r;
  r.total_mass = w.total_mass();
  r.max_weight = *std::max_element(w.values().begin(), w.values().end());
  r.hub_ratio = r.max_weight / std::sqrt(r.total_mass);
  std::vector<double> squares(w.size());
  std::transform(w.values().begin(), w.values().end(), squares.begin(),
                 [](double v) { return v * v; });
  r.sum_squares = compensated_sum(squares);
  r.mean_degree_target = r.total_mass / static_cast<double>(w.size());
  return r;
}

}  // namespace nrgen
