#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "nrgen/graph.hpp"

namespace nrgen {

enum class EdgeFormat { text, binary };

EdgeFormat parse_edge_format(std::string_view tag);

// Text: "# n=<n> m=<m> seed=<seed>" then one "u\tv" line per pair.
// Binary: "RGEL", u64 n, u64 m, then m pairs of u32 (u64 when n >= 2^32), LE.
void write_edges(std::ostream& os, std::uint64_t n, std::span<const Edge> edges,
                 std::uint64_t seed, EdgeFormat format);

inline void write_edges(std::ostream& os, const SimpleGraph& g, std::uint64_t seed,
                        EdgeFormat format) {
  write_edges(os, g.n, g.edges, seed, format);
}

inline void write_edges(std::ostream& os, const Multigraph& g, std::uint64_t seed,
                        EdgeFormat format) {
  write_edges(os, g.n, g.events, seed, format);
}

struct EdgeFile {
  std::uint64_t n = 0;
  std::uint64_t seed = 0;  // 0 for binary files, which carry no seed
  std::vector<Edge> edges;
};

EdgeFile read_edges(std::istream& is, EdgeFormat format);

}  // namespace nrgen
