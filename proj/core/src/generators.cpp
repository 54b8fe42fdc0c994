#include "nrgen/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <type_traits>
#include <vector>

#include "edge_set.hpp"
#include "nrgen/error.hpp"

namespace nrgen {
namespace {

constexpr double kPresizeFactor = 1.3;

double effective_budget_mean(double mean, Corruption c) {
  return c == Corruption::budget_half ? mean / 2.0 : mean;
}

// Events are processed in a three-stage pipeline over blocks of kBatch:
// endpoint proposals for block b (prefetching table rows), lookups for block
// b - 1 (prefetching hash slots), and the sink for block b - 2, so every
// prefetch has a full block of work to land. Proposals consume the stream in
// event order, so output matches drawing one event at a time.
constexpr std::uint64_t kBatch = 16;

struct AliasEndpoints {
  using Proposal = AliasTable::Proposal;
  const AliasTable& table;
  Proposal propose(RandomStream& rng) const noexcept { return table.propose(rng); }
  void prefetch(const Proposal& p) const noexcept { table.prefetch(p); }
  Vertex resolve(const Proposal& p) const noexcept { return table.resolve(p); }
};

struct UniformEndpoints {
  using Proposal = Vertex;
  std::uint64_t n;
  Proposal propose(RandomStream& rng) const noexcept { return uniform_index_unchecked(rng, n); }
  void prefetch(const Proposal&) const noexcept {}
  Vertex resolve(const Proposal& p) const noexcept { return p; }
};

// Feeds `budget` canonical events to sink.consume() in draw order; calls
// sink.prefetch() on each event one block ahead of its consume().
template <class Endpoints, class Sink>
void run_events(const Endpoints& ep, RandomStream& rng, std::uint64_t budget, Sink& sink) {
  const std::uint64_t blocks = (budget + kBatch - 1) / kBatch;
  const auto size_of = [&](std::uint64_t b) { return std::min(kBatch, budget - b * kBatch); };
  std::array<std::array<typename Endpoints::Proposal, 2 * kBatch>, 2> props;
  std::array<std::array<Edge, kBatch>, 2> events;

  for (std::uint64_t b = 0; b < blocks + 2; ++b) {
    if (b >= 2) {
      const auto& ev = events[b % 2];
      const std::uint64_t count = size_of(b - 2);
      for (std::uint64_t j = 0; j < count; ++j) sink.consume(ev[j]);
    }
    if (b >= 1 && b <= blocks) {
      const auto& pr = props[(b - 1) % 2];
      auto& ev = events[(b - 1) % 2];
      const std::uint64_t count = size_of(b - 1);
      for (std::uint64_t j = 0; j < count; ++j) {
        ev[j] = canonical(ep.resolve(pr[2 * j]), ep.resolve(pr[2 * j + 1]));
        sink.prefetch(ev[j]);
      }
    }
    if (b < blocks) {
      auto& pr = props[b % 2];
      const std::uint64_t count = 2 * size_of(b);
      for (std::uint64_t k = 0; k < count; ++k) {
        pr[k] = ep.propose(rng);
        ep.prefetch(pr[k]);
      }
    }
  }
}

template <class Set>
struct SimpleSink {
  Set& seen;
  GenOutcome<SimpleGraph>& out;
  bool keep_loops;
  bool dedup;

  void prefetch(const Edge& e) const {
    if (dedup && !e.is_loop()) seen.prefetch(e);
  }
  void consume(const Edge& e) {
    if (e.is_loop() && !keep_loops) {
      ++out.loops_discarded;
    } else if (!dedup || seen.insert(e)) {
      out.graph.edges.push_back(e);
    } else {
      ++out.duplicates_merged;
    }
  }
};

struct MultigraphSink {
  std::vector<Edge>& events;
  void prefetch(const Edge&) const noexcept {}
  void consume(const Edge& e) { events.push_back(e); }
};

// Shared simple-mode loop: K events, online dedup.
template <class Endpoints>
GenOutcome<SimpleGraph> simple_from_events(std::uint64_t n, std::uint64_t budget, double budget_mean,
                                           const GenOptions& options, const Endpoints& ep,
                                           RandomStream& rng) {
  GenOutcome<SimpleGraph> out;
  out.graph.n = n;
  out.event_budget = budget;

  detail::with_edge_set(n, [&](auto& seen) {
    if (options.presize) {
      const auto expected = static_cast<std::size_t>(kPresizeFactor * budget_mean);
      seen.reserve(expected);
      out.graph.edges.reserve(expected);
    }
    SimpleSink<std::remove_reference_t<decltype(seen)>> sink{
        seen, out, options.corruption == Corruption::keep_loops,
        options.corruption != Corruption::skip_dedup};
    run_events(ep, rng, budget, sink);
  });
  out.excess_edges = out.loops_discarded + out.duplicates_merged;
  return out;
}

}  // namespace

Corruption parse_corruption(std::string_view tag) {
  if (tag == "none") return Corruption::none;
  if (tag == "budget-half") return Corruption::budget_half;
  if (tag == "keep-loops") return Corruption::keep_loops;
  if (tag == "skip-dedup") return Corruption::skip_dedup;
  throw DomainError("unknown corruption '" + std::string(tag) +
                    "' (expected budget-half|keep-loops|skip-dedup)");
}

std::string_view to_string(Corruption c) {
  switch (c) {
    case Corruption::none: return "none";
    case Corruption::budget_half: return "budget-half";
    case Corruption::keep_loops: return "keep-loops";
    case Corruption::skip_dedup: return "skip-dedup";
  }
  return "none";
}

NrEventSampler::NrEventSampler(const WeightSequence& w, GenOptions options)
    : table_(AliasTable::build(w)), total_mass_(w.total_mass()), options_(options) {}

double NrEventSampler::budget_mean() const noexcept { return total_mass_ / 2.0; }

GenOutcome<Multigraph> NrEventSampler::sample_multigraph(RandomStream& rng) const {
  RandomStream budget_rng = rng.fork(StreamId::budget);
  RandomStream endpoint_rng = rng.fork(StreamId::endpoints);
  const std::uint64_t budget =
      poisson(budget_rng, effective_budget_mean(budget_mean(), options_.corruption));

  GenOutcome<Multigraph> out;
  out.graph.n = vertex_count();
  out.event_budget = budget;
  out.graph.events.reserve(budget);
  MultigraphSink sink{out.graph.events};
  run_events(AliasEndpoints{table_}, endpoint_rng, budget, sink);
  return out;
}

GenOutcome<SimpleGraph> NrEventSampler::sample_simple(RandomStream& rng) const {
  RandomStream budget_rng = rng.fork(StreamId::budget);
  RandomStream endpoint_rng = rng.fork(StreamId::endpoints);
  const double mean = effective_budget_mean(budget_mean(), options_.corruption);
  const std::uint64_t budget = poisson(budget_rng, mean);
  return simple_from_events(vertex_count(), budget, mean, options_, AliasEndpoints{table_}, endpoint_rng);
}

GenOutcome<Multigraph> generate_nr_multigraph(const WeightSequence& w, RandomStream& rng,
                                              GenOptions options) {
  return NrEventSampler(w, options).sample_multigraph(rng);
}

GenOutcome<SimpleGraph> generate_nr_simple(const WeightSequence& w, RandomStream& rng,
                                           GenOptions options) {
  return NrEventSampler(w, options).sample_simple(rng);
}

double er_horizon(std::uint64_t n, double p) {
  if (n == 0) throw DomainError("generate_er: n must be >= 1");
  if (!(p >= 0.0)) throw DomainError("generate_er: p must be >= 0");
  if (!(p < 1.0)) throw DomainError("generate_er: p must be < 1 (the arrival horizon diverges at p = 1)");
  const double nn = static_cast<double>(n);
  return -std::log1p(-p) * nn * nn / 2.0;
}

GenOutcome<SimpleGraph> generate_er(std::uint64_t n, double p, RandomStream& rng,
                                    GenOptions options) {
  const double horizon = er_horizon(n, p);
  RandomStream budget_rng = rng.fork(StreamId::budget);
  RandomStream endpoint_rng = rng.fork(StreamId::endpoints);
  const double mean = effective_budget_mean(horizon, options.corruption);
  const std::uint64_t budget = poisson(budget_rng, mean);
  return simple_from_events(n, budget, mean, options, UniformEndpoints{n}, endpoint_rng);
}

}  // namespace nrgen
