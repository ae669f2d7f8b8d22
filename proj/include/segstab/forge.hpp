#pragma once

#include "segstab/geometry.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace segstab {

struct RandomOptions {
  int coord_max = 20;  // coordinates are k / denominator with 0 <= k <= coord_max
  int denominator = 1;
  Objective objective = Objective::length;
  bool hv = false;
};

/// n rects with ids 0..n-1, deterministic in `seed`.
StabInstance gen_random(int n, std::uint64_t seed, const RandomOptions& opts = {});

/// gen_random plus `extra` random fixed candidates; rects left unstabbed get
/// their top edge added so the instance stays feasible.
StabInstance gen_random_constrained(int n, int extra, std::uint64_t seed, const RandomOptions& opts = {});

/// Rects [i,j] x [i,j] for i <= m/2 < j, and the m segments
/// s_i = [i,m] x {i} (i <= m/2), s_j = [1,j] x {j} (j > m/2) as the fixed
/// candidate family. Every rect is stabbed by exactly s_i and s_j.
StabInstance gen_scc_counterexample(int m);

struct GreedyTrap {
  StabInstance inst;
  std::vector<int> b_rects, t_rects;  // rect ids, one per copy
  Segment t, b;                       // the optimal pair, cost 2
  std::vector<Segment> b_top_edges;   // one per distinct rect of B
  Rational greedy_cost;               // sum over kept levels of (1 - i eps)
  int levels = 0;
};

/// Nested family B (level i holds 2^i disjoint rects of width
/// (1 - i eps)/2^i, all with bottom 0 and pairwise distinct tops near 1) with
/// its mirror family T sitting on B's top edges and reaching up to y = 2.
/// Weighted mode keeps even levels and replicates every rect of level i
/// ceil(2^i / (1 - i eps)) times.
GreedyTrap gen_greedy_trap(int levels, const Rational& eps, bool weighted);

struct DoubleStaircase {
  StabInstance inst;
  int k = 0;
  Segment universal;
  std::vector<Segment> lines;  // k lines on each of levels 1..k+1, level-major
};

/// 2l+1 unit-width rects r_i = [i,i+1] x [0,|i|+1] for -l <= i <= l.
DoubleStaircase gen_double_staircase(int l);

/// Number of bounded vertical slabs cut out by the rects' vertical edges.
int vertical_slab_count(std::span<const Rect> rects);

/// Smallest even l for which the staircase's k(k+1) equal-size sets
/// outnumber two faces per slab, computed on generated instances.
int staircase_slab_threshold(int max_l = 200);

struct Box3 {
  std::array<Rational, 3> lo, hi;
  int id = 0;
  bool contains(const std::array<Rational, 3>& p) const;
  bool empty() const;
};

struct Point3 {
  std::array<Rational, 3> at;
  Rational weight;
  int id = 0;
};

struct PiercingInstance3D {
  std::vector<Box3> boxes;
  std::vector<Point3> points;
};

/// Segment [l,r] x {y} becomes the point (l, r, y) of weight r - l; a rect
/// becomes {u <= x_left, x_right <= v, y_bottom <= w <= y_top}, clipped to
/// [min - 1, max + 1] of the segment coordinates on each axis.
PiercingInstance3D embed_piercing_3d(const StabInstance& inst, std::span<const Segment> segments);

}  // namespace segstab
