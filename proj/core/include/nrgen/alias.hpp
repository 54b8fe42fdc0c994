#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "nrgen/random.hpp"
#include "nrgen/weights.hpp"

namespace nrgen {

// Worklist traffic recorded during construction.
struct AliasBuildStats {
  std::uint64_t pushes = 0;
  std::uint64_t pops = 0;
  std::uint64_t pairings = 0;
};

/// Walker/Vose alias table for pi(i) = x_i / L_n.
///
/// Bucket i returns i with probability cutoff[i] and alias[i] otherwise, so
///   P(j) = cutoff[j]/n + sum_{i : alias[i] = j} (1 - cutoff[i])/n.
/// Full buckets (cutoff exactly 1) alias to themselves.
class AliasTable {
 public:
  /// O(n). Small and large worklists are stacks, seeded so that the lowest
  /// indices are paired first. Throws DegeneracyError on zero total mass.
  static AliasTable build(const WeightSequence& w, AliasBuildStats* stats = nullptr);
  static AliasTable build(std::span<const double> weights, AliasBuildStats* stats = nullptr);

  std::size_t size() const noexcept { return buckets_.size(); }
  double cutoff(std::size_t i) const noexcept { return buckets_[i].cutoff; }
  std::uint64_t alias(std::size_t i) const noexcept { return buckets_[i].alias; }

  std::uint64_t sample(RandomStream& rng) const noexcept { return resolve(propose(rng)); }

  // Split form of sample() for batched callers: propose() consumes the same
  // draws in the same order, and the table lookup is deferred to resolve().
  struct Proposal {
    std::uint64_t bucket;
    double u;
  };
  Proposal propose(RandomStream& rng) const noexcept {
    const std::uint64_t i = uniform_index_unchecked(rng, buckets_.size());
    return {i, uniform_real(rng)};
  }
  void prefetch(const Proposal& p) const noexcept {
    __builtin_prefetch(buckets_.data() + p.bucket);
  }
  std::uint64_t resolve(const Proposal& p) const noexcept {
    // Strict comparison: a zero cutoff never returns its own bucket.
    const Bucket& b = buckets_[p.bucket];
    return p.u < b.cutoff ? p.bucket : b.alias;
  }

  /// P(j) implied by the table, reconstructed bucket by bucket.
  std::vector<double> implied_probabilities() const;

  /// TSV with header "index\tcutoff\talias".
  void dump_tsv(std::ostream& os) const;

 private:
  // Cutoff and alias side by side, so a draw touches one cache line.
  struct Bucket {
    double cutoff;
    std::uint64_t alias;
  };
  std::vector<Bucket> buckets_;
};

inline std::uint64_t sample_vertex(const AliasTable& t, RandomStream& rng) noexcept {
  return t.sample(rng);
}

}  // namespace nrgen
