#include "nrgen/graph.hpp"

#include "edge_set.hpp"

namespace nrgen {

GenOutcome<SimpleGraph> project_simple(const Multigraph& mg) {
  GenOutcome<SimpleGraph> out;
  out.graph.n = mg.n;
  out.event_budget = mg.events.size();
  detail::with_edge_set(mg.n, [&](auto& seen) {
    seen.reserve(mg.events.size());
    for (const Edge& raw : mg.events) {
      const Edge e = canonical(raw.u, raw.v);
      if (e.is_loop()) {
        ++out.loops_discarded;
      } else if (seen.insert(e)) {
        out.graph.edges.push_back(e);
      } else {
        ++out.duplicates_merged;
      }
    }
  });
  out.excess_edges = out.loops_discarded + out.duplicates_merged;
  return out;
}

Multigraph as_multigraph(const SimpleGraph& g) { return Multigraph{g.n, g.edges}; }

std::vector<std::uint64_t> multigraph_degrees(const Multigraph& mg) {
  std::vector<std::uint64_t> deg(mg.n, 0);
  for (const Edge& e : mg.events) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::uint64_t> simple_degrees(const SimpleGraph& g) {
  std::vector<std::uint64_t> deg(g.n, 0);
  for (const Edge& e : g.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::uint64_t multiplicity(const Multigraph& mg, Vertex a, Vertex b) {
  const Edge target = canonical(a, b);
  std::uint64_t count = 0;
  for (const Edge& e : mg.events) count += canonical(e.u, e.v) == target ? 1 : 0;
  return count;
}

bool is_simple(const SimpleGraph& g) {
  bool ok = true;
  detail::with_edge_set(g.n, [&](auto& seen) {
    seen.reserve(g.edges.size());
    for (const Edge& e : g.edges) {
      if (!(e.u < e.v) || e.v >= g.n || !seen.insert(e)) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

}  // namespace nrgen
