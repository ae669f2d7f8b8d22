#pragma once

#include "segstab/geometry.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace segstab {

struct CoverSet {
  int id = 0;
  std::vector<int> members;  // indices into SetCoverInstance::universe, ascending
  Rational cost;
};

/// Weighted set cover (U, F, c). Elements are addressed by position in
/// `universe`; `universe` itself holds the caller's element ids (rect ids).
struct SetCoverInstance {
  std::vector<int> universe;
  std::vector<CoverSet> sets;

  std::size_t num_elements() const { return universe.size(); }
  /// Throws Error if an element is uncovered or a cost is not positive.
  void validate() const;
  /// For every element, the positions of the sets containing it.
  std::vector<std::vector<int>> covering_sets() const;
};

/// LP solution indexed by set position.
struct FractionalSolution {
  std::vector<Rational> z;
  Rational objective;
  /// Optimal duals (one per element) when produced by lp_solve.
  std::vector<Rational> duals;
};

enum class CoverStatus { optimal, unproven, heuristic };

struct CoverResult {
  std::vector<int> chosen;  // set positions, ascending
  Rational cost;
  CoverStatus status = CoverStatus::heuristic;
  std::uint64_t nodes = 0;
};

/// One set per candidate, members = stabbed rects; cost = length, or 1 in
/// cardinality mode. Throws Error naming the first rect no candidate stabs.
SetCoverInstance to_set_cover(const StabInstance& inst, std::span<const Segment> cands);

/// True iff `chosen` covers every element.
bool covers(const SetCoverInstance& sc, std::span<const int> chosen);

Rational cover_cost(const SetCoverInstance& sc, std::span<const int> chosen);

/// Sub-instance on the element positions `elements` using the set positions
/// `sets` (members restricted; empty sets dropped). `set_map` receives the
/// original position of every kept set.
SetCoverInstance restrict_instance(const SetCoverInstance& sc, std::span<const int> elements,
                                   std::span<const int> sets, std::vector<int>& set_map);

/// Geometric solution made of the chosen candidates.
Solution cover_to_solution(const StabInstance& inst, std::span<const Segment> cands,
                           const CoverResult& result);

}  // namespace segstab
