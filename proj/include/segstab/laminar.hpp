#pragma once

#include "segstab/geometry.hpp"

#include <span>
#include <vector>

namespace segstab {

/// True iff every two x-projections are nested or interior-disjoint.
bool is_x_laminar(std::span<const Segment> segs);

struct DyadicSnap {
  int family = 1;  // 1: I = I_{s,j}; 2: I = I_{s,j} shifted by 1/3
  Rational lo, hi;
  int level = 0;   // s
};

/// Snaps J = [a, b] with 0 < b - a <= 1/3 into the dyadic family
/// I_{s,j} = [j/2^s, (j+1)/2^s] or into the same family shifted by 1/3,
/// where s is the largest integer with b - a <= 1/(3 * 2^s). The result
/// contains J and is less than 6 times longer. Throws Error on a violated
/// length precondition.
DyadicSnap dyadic_snap(const Rational& a, const Rational& b);

struct SnappedSegment {
  int original_id = 0;
  Segment original;
  Segment snapped;  // back in instance coordinates, original y
  int family = 1;
  int level = 0;
  Rational stretch;  // |snapped| / |original|
};

struct LaminarDecomposition {
  Rational scale;  // instance -> snap coordinates: x' = (x + shift) * scale
  Rational shift;
  std::vector<SnappedSegment> snapped;  // snapped[i].snapped.id == i

  std::vector<Segment> family(int which) const;
  std::vector<Segment> segments() const;
  Rational max_stretch() const;
};

/// Translates so the leftmost candidate starts at 0, scales so the longest
/// has length 1/3, snaps every candidate and maps the result back. Snapped
/// segments with identical (interval, y, family) are merged, keeping the
/// lowest original id. Throws Error on constrained instances or zero-length
/// candidates.
LaminarDecomposition laminarize(const StabInstance& inst, std::span<const Segment> cands);

}  // namespace segstab
