#pragma once

#include "segstab/cover.hpp"
#include "segstab/geometry.hpp"
#include "segstab/set_cover.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace segstab {

struct RoundingParams {
  std::uint64_t seed = 0;
  int trials = 32;
  std::vector<Rational> inflation{Rational(2), Rational(4), Rational(8)};
  GreedyMode repair = GreedyMode::count;

  /// Throws Error unless trials >= 1 and every inflation value is >= 1.
  void validate() const;
};

/// Sample-and-repair rounding of a fractional cover. For every trial and
/// inflation factor l, keeps each set with probability min(1, l z_S), covers
/// what is left greedily (using `weights`, default 1), then drops redundant
/// sets, most expensive first. Returns the cheapest outcome; ties go to the
/// lexicographically smallest set list. Trials run on worker threads, each
/// with its own seed, so the result depends only on the inputs.
CoverResult sample_and_repair(const SetCoverInstance& sc, std::span<const Rational> z,
                              std::span<const Rational> weights, const RoundingParams& params);

/// Shrinks each segment to the rects assigned to it: every rect goes to the
/// longest segment stabbing it (lowest id on ties), and a segment becomes
/// [min left, max right] of its rects at their lowest top edge (transposed
/// for vertical segments). Segments left without rects are dropped.
Solution trim_to_assignment(const StabInstance& inst, const Solution& sol);

/// Rounds z over one x-laminar family on the rects at positions `subuniverse`.
/// Output stabs every rect of the subuniverse and is trimmed. Throws Error
/// when the family is not x-laminar or z does not cover the subuniverse.
Solution round_laminar(const StabInstance& inst, std::span<const int> subuniverse,
                       std::span<const Segment> family, std::span<const Rational> z, const RoundingParams& params);

struct ApproxResult {
  Solution solution;
  Rational lp_bound;     // LP optimum over the pruned canonical candidates
  Rational lp_laminar;   // LP optimum over the laminarized family
  Rational ratio;        // solution.cost / lp_bound
  std::size_t candidates = 0;
  std::size_t laminar_sets = 0;
};

/// Pruned candidates, laminarized into two x-laminar families, one exact LP
/// over both, split with equal factors, each side rounded, merged, trimmed
/// and canonicalized. Throws Error for constrained or HV instances.
ApproxResult approx_stab(const StabInstance& inst, const RoundingParams& params = {});

/// HV counterpart: horizontal and vertical laminar families share one LP;
/// the H/V split comes first, then each side splits its own two families.
ApproxResult approx_hv(const StabInstance& inst, const RoundingParams& params = {});

}  // namespace segstab
