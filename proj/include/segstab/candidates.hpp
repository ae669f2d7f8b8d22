#pragma once

#include "segstab/geometry.hpp"

#include <boost/dynamic_bitset.hpp>

#include <span>
#include <vector>

namespace segstab {

/// All segments [a,b] x {y} with a a left edge, b a right edge and y a top
/// edge of some rect that stab at least one rect. Sorted by (y, a, b), ids
/// 0..k-1 in that order. At most n^3 segments.
std::vector<Segment> candidate_segments(std::span<const Rect> rects);

/// The subset of candidate_segments that is already in canonical form:
/// a (b) is the leftmost left (rightmost right) edge of the rects it stabs
/// and y is their lowest top edge. Every candidate is dominated by one of
/// these. Same ordering and id scheme as candidate_segments.
std::vector<Segment> tight_candidates(std::span<const Rect> rects);

/// Drops every candidate whose stab set is contained in another candidate's
/// stab set at no smaller length. Among exact ties (equal stab set and
/// length) the first in input order survives. Input order and ids are kept.
std::vector<Segment> prune_dominated(std::span<const Segment> cands, std::span<const Rect> rects);

/// prune_dominated(tight_candidates(rects), rects).
std::vector<Segment> pruned_candidates(std::span<const Rect> rects);

/// Vertical counterparts of `family` for HV mode: runs `family` on the
/// transposed rects and flips the results back. Ids start at `first_id`.
template <class Family>
std::vector<Segment> vertical_candidates(std::span<const Rect> rects, Family&& family, int first_id) {
  auto transposed = transpose(rects);
  auto cands = family(std::span<const Rect>(transposed));
  for (auto& s : cands) {
    s = transpose(s);
    s.id += first_id;
  }
  return cands;
}

/// Bitset of rect indices stabbed by each segment.
std::vector<boost::dynamic_bitset<>> stab_sets(std::span<const Segment> segs, std::span<const Rect> rects);

}  // namespace segstab
