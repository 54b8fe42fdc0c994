#include "nrgen/edge_io.hpp"

#include <charconv>
#include <string>

#include "byte_order.hpp"
#include "nrgen/error.hpp"

namespace nrgen {
namespace {

constexpr char kEdgeMagic[4] = {'R', 'G', 'E', 'L'};

bool wide_ids(std::uint64_t n) { return n >= (std::uint64_t{1} << 32); }

std::uint64_t parse_u64(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
    throw ParseError("malformed integer '" + std::string(tok) + "'", line);
  }
  return v;
}

// Value of "key=<u64>" inside the header line.
std::uint64_t header_field(std::string_view header, std::string_view key, std::size_t line) {
  const std::string needle = std::string(key) + "=";
  const auto pos = header.find(needle);
  if (pos == std::string_view::npos) throw ParseError("header lacks '" + needle + "'", line);
  auto rest = header.substr(pos + needle.size());
  rest = rest.substr(0, rest.find_first_of(" \t\r"));
  return parse_u64(rest, line);
}

}  // namespace

EdgeFormat parse_edge_format(std::string_view tag) {
  if (tag == "text") return EdgeFormat::text;
  if (tag == "bin") return EdgeFormat::binary;
  throw DomainError("unknown edge format '" + std::string(tag) + "' (expected text|bin)");
}

void write_edges(std::ostream& os, std::uint64_t n, std::span<const Edge> edges,
                 std::uint64_t seed, EdgeFormat format) {
  if (format == EdgeFormat::binary) {
    os.write(kEdgeMagic, 4);
    detail::put_u64_le(os, n);
    detail::put_u64_le(os, edges.size());
    const bool wide = wide_ids(n);
    for (const Edge& e : edges) {
      if (wide) {
        detail::put_u64_le(os, e.u);
        detail::put_u64_le(os, e.v);
      } else {
        detail::put_u32_le(os, static_cast<std::uint32_t>(e.u));
        detail::put_u32_le(os, static_cast<std::uint32_t>(e.v));
      }
    }
  } else {
    std::string buf = "# n=" + std::to_string(n) + " m=" + std::to_string(edges.size()) +
                      " seed=" + std::to_string(seed) + "\n";
    os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    buf.clear();
    char num[24];
    for (const Edge& e : edges) {
      auto r = std::to_chars(num, num + sizeof(num), e.u);
      buf.append(num, r.ptr);
      buf.push_back('\t');
      r = std::to_chars(num, num + sizeof(num), e.v);
      buf.append(num, r.ptr);
      buf.push_back('\n');
      if (buf.size() > (1u << 16)) {
        os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
        buf.clear();
      }
    }
    os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  }
  if (!os) throw IoError("write failure on edge stream");
}

EdgeFile read_edges(std::istream& is, EdgeFormat format) {
  EdgeFile f;
  if (format == EdgeFormat::binary) {
    char magic[4] = {};
    if (!is.read(magic, 4) || std::string_view(magic, 4) != std::string_view(kEdgeMagic, 4)) {
      throw ParseError("bad magic, expected RGEL", 0);
    }
    std::uint64_t m = 0;
    if (!detail::get_u64_le(is, f.n) || !detail::get_u64_le(is, m)) {
      throw ParseError("truncated edge header", 0);
    }
    const bool wide = wide_ids(f.n);
    for (std::uint64_t i = 0; i < m; ++i) {
      Edge e;
      bool ok = false;
      if (wide) {
        ok = detail::get_u64_le(is, e.u) && detail::get_u64_le(is, e.v);
      } else {
        std::uint32_t a = 0, b = 0;
        ok = detail::get_u32_le(is, a) && detail::get_u32_le(is, b);
        e = Edge{a, b};
      }
      if (!ok) throw ParseError("truncated edge payload at pair " + std::to_string(i), 0);
      f.edges.push_back(e);
    }
    return f;
  }

  std::string line;
  std::size_t lineno = 0;
  std::uint64_t declared_m = 0;
  bool have_header = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (!have_header) {
        f.n = header_field(line, "n", lineno);
        declared_m = header_field(line, "m", lineno);
        f.seed = header_field(line, "seed", lineno);
        have_header = true;
      }
      continue;
    }
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError("expected 'u<TAB>v'", lineno);
    const std::string_view sv(line);
    f.edges.push_back(Edge{parse_u64(sv.substr(0, tab), lineno), parse_u64(sv.substr(tab + 1), lineno)});
  }
  if (!have_header) throw ParseError("missing '# n=... m=... seed=...' header", 0);
  if (declared_m != f.edges.size()) {
    throw ParseError("header declares m=" + std::to_string(declared_m) + " but file has " +
                         std::to_string(f.edges.size()) + " pairs", 0);
  }
  return f;
}

}  // namespace nrgen
