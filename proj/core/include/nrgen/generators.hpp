#pragma once

#include <cstdint>
#include <string_view>

#include "nrgen/alias.hpp"
#include "nrgen/graph.hpp"
#include "nrgen/random.hpp"
#include "nrgen/weights.hpp"

namespace nrgen {

// Deliberate generator faults used as negative controls for validation.
enum class Corruption {
  none,
  budget_half,  // draw K ~ Poisson(L_n / 4)
  keep_loops,   // store loop events as edges in simple mode
  skip_dedup,   // append every non-loop event, repeated or not
};

Corruption parse_corruption(std::string_view tag);
std::string_view to_string(Corruption c);

struct GenOptions {
  // Reserve the dedup set for ~1.3 E[K] entries before generating.
  bool presize = true;
  Corruption corruption = Corruption::none;
};

/// Event-driven Norros-Reittu generator with its preprocessing held.
///
/// Construction costs O(n) (alias table); each sample draws
/// K ~ Poisson(L_n / 2) and K endpoint pairs from pi(i) = x_i / L_n.
/// Each sample forks two child streams from `rng` (budget and endpoints),
/// consuming exactly two parent draws.
class NrEventSampler {
 public:
  explicit NrEventSampler(const WeightSequence& w, GenOptions options = {});

  GenOutcome<Multigraph> sample_multigraph(RandomStream& rng) const;
  GenOutcome<SimpleGraph> sample_simple(RandomStream& rng) const;

  const AliasTable& alias_table() const noexcept { return table_; }
  double budget_mean() const noexcept;
  std::uint64_t vertex_count() const noexcept { return table_.size(); }

 private:
  AliasTable table_;
  double total_mass_;
  GenOptions options_;
};

GenOutcome<Multigraph> generate_nr_multigraph(const WeightSequence& w, RandomStream& rng,
                                              GenOptions options = {});
GenOutcome<SimpleGraph> generate_nr_simple(const WeightSequence& w, RandomStream& rng,
                                           GenOptions options = {});

/// G(n, p) by temporal arrivals: K ~ Poisson(-log(1-p) n^2 / 2) uniform
/// endpoint pairs, loops dropped and repeats merged.
/// Throws DomainError unless n >= 1 and 0 <= p < 1.
GenOutcome<SimpleGraph> generate_er(std::uint64_t n, double p, RandomStream& rng,
                                    GenOptions options = {});

// Poisson horizon T for G(n, p).
double er_horizon(std::uint64_t n, double p);

}  // namespace nrgen
