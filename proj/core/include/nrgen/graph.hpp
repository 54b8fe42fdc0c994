#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace nrgen {

using Vertex = std::uint64_t;

// Unordered endpoint pair; stored canonically (u <= v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  bool is_loop() const noexcept { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr Edge canonical(Vertex a, Vertex b) noexcept {
  return a <= b ? Edge{a, b} : Edge{b, a};
}

// Event list in generation order; loops and repeated pairs retained.
struct Multigraph {
  std::uint64_t n = 0;
  std::vector<Edge> events;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;
};

// Loop-free, duplicate-free, canonical (u < v) edges in first-insertion order.
struct SimpleGraph {
  std::uint64_t n = 0;
  std::vector<Edge> edges;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
};

/// One generator run plus its diagnostics.
///
/// In simple mode excess_edges = event_budget - |edges|
/// = loops_discarded + duplicates_merged. A multigraph run discards nothing.
template <class Graph>
struct GenOutcome {
  Graph graph;
  std::uint64_t event_budget = 0;
  std::uint64_t loops_discarded = 0;
  std::uint64_t duplicates_merged = 0;
  std::uint64_t excess_edges = 0;

  friend bool operator==(const GenOutcome&, const GenOutcome&) = default;
};

/// Drop loops and merge repeats, keeping first occurrences in event order.
GenOutcome<SimpleGraph> project_simple(const Multigraph& mg);

// Multigraph view of a simple graph (one event per edge).
Multigraph as_multigraph(const SimpleGraph& g);

// Loops contribute 2 to their vertex.
std::vector<std::uint64_t> multigraph_degrees(const Multigraph& mg);
std::vector<std::uint64_t> simple_degrees(const SimpleGraph& g);

// Multiplicity of the unordered pair {a, b} among the events; O(|events|).
std::uint64_t multiplicity(const Multigraph& mg, Vertex a, Vertex b);

// True when the edge list satisfies every SimpleGraph invariant.
bool is_simple(const SimpleGraph& g);

}  // namespace nrgen
