#pragma once

#include "segstab/set_cover.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace segstab {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// SEGSTAB_NODE_BUDGET when set to a positive integer, else kDefaultNodeBudget.
std::uint64_t node_budget_from_env();

/// Branch and bound. Branches on the uncovered element with the fewest
/// admissible sets; the i-th child takes that element's i-th set and forbids
/// the earlier ones. Bounds come from a floating LP turned into a certified
/// dual bound. Status is `unproven` when the node budget runs out.
CoverResult exact_cover(const SetCoverInstance& sc, std::uint64_t budget = node_budget_from_env());

enum class GreedyMode { count, width };

/// Per-element greedy weights: multiplicity (count mode) or
/// width * multiplicity (width mode).
std::vector<Rational> greedy_weights(std::span<const Rect> rects, GreedyMode mode);

/// Repeatedly takes the set minimizing cost / (weight of newly covered
/// elements); ties go to the lowest set position. `weights` defaults to 1.
CoverResult greedy_cover(const SetCoverInstance& sc, std::span<const Rational> weights = {});

/// Rounds a fractional solution of a sub-instance to an integral cover (set
/// positions within that sub-instance).
using Rounder = std::function<CoverResult(const SetCoverInstance&, const std::vector<Rational>&)>;

struct Decomposition {
  CoverResult cover;
  std::vector<int> part_one, part_two;  // element positions assigned to U1 / U2
  Rational lp_one, lp_two;              // sum of c(S) z_S over F1 / F2
  CoverResult cover_one, cover_two;     // in original set positions
};

/// Splits elements by their F1 mass against a1/(a1+a2) (ties to U1), scales
/// z by (a1+a2)/a_i capped at 1 on each side, rounds both sides and merges.
/// `family[j]` is 1 or 2 for set position j. Throws Error when a scaled
/// solution is infeasible or a rounder returns a non-cover.
Decomposition decompose_and_conquer(const SetCoverInstance& sc, std::span<const int> family,
                                    std::span<const Rational> z, const Rational& a1, const Rational& a2,
                                    const Rounder& rounder1, const Rounder& rounder2);

}  // namespace segstab
