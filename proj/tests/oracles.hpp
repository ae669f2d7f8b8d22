#pragma once

// Brute-force references. None of these touch the candidate family, the LP
// or the branch and bound.

#include "segstab/geometry.hpp"
#include "segstab/set_cover.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using segstab::Rational;
using segstab::Rect;

inline Rational q(const char* text) { return segstab::parse_rational(text); }

inline Rect rect(const char* x1, const char* x2, const char* y1, const char* y2, int id = 0) {
  return Rect{q(x1), q(x2), q(y1), q(y2), id, 1};
}

inline segstab::Segment hseg(const char* x1, const char* x2, const char* y, int id = 0) {
  return segstab::Segment{q(x1), q(x2), q(y), segstab::Orientation::horizontal, id};
}

// Cheapest way to stab `group` with one segment: the segment must span from
// the leftmost left edge to the rightmost right edge at a height shared by all
// y-ranges. nullopt when the y-ranges have no common point.
inline std::optional<Rational> group_cost(std::span<const Rect> rects, std::uint32_t group,
                                          segstab::Objective objective) {
  std::optional<Rational> lo, hi, bottom, top;
  for (std::size_t i = 0; i < rects.size(); ++i) {
    if (!(group >> i & 1u)) continue;
    const auto& r = rects[i];
    if (!lo || r.x_left < *lo) lo = r.x_left;
    if (!hi || r.x_right > *hi) hi = r.x_right;
    if (!bottom || r.y_bottom > *bottom) bottom = r.y_bottom;
    if (!top || r.y_top < *top) top = r.y_top;
  }
  if (!lo || *bottom > *top) return std::nullopt;
  if (objective == segstab::Objective::cardinality) return Rational(1);
  return Rational(*hi - *lo);
}

// Optimum by dynamic programming over partitions of the rect set into groups
// stabbed by a common segment. In HV mode a group may alternatively be
// stabbed vertically.
inline Rational stabbing_optimum(const segstab::StabInstance& inst) {
  const auto& rects = inst.rects;
  const std::size_t n = rects.size();
  if (n > 16) throw std::runtime_error("oracle limited to 16 rects");
  std::vector<Rect> flipped = segstab::transpose(std::span<const Rect>(rects));
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::optional<Rational>> single(full + 1);
  for (std::uint32_t g = 1; g <= full; ++g) {
    single[g] = group_cost(rects, g, inst.objective);
    if (inst.hv) {
      auto v = group_cost(flipped, g, inst.objective);
      if (v && (!single[g] || *v < *single[g])) single[g] = v;
    }
  }
  std::vector<std::optional<Rational>> best(full + 1);
  best[0] = Rational(0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t low = mask & (~mask + 1);
    std::uint32_t rest = mask ^ low;
    // groups containing the lowest element of mask
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      std::uint32_t g = sub | low;
      if (single[g] && best[mask ^ g]) {
        Rational c = *single[g] + *best[mask ^ g];
        if (!best[mask] || c < *best[mask]) best[mask] = c;
      }
      if (sub == 0) break;
    }
  }
  return *best[full];
}

// Exact set cover: dynamic programming over covered-element masks for small
// universes, otherwise enumeration of all subsets of sets (at most 24).
inline std::optional<Rational> set_cover_optimum(const segstab::SetCoverInstance& sc) {
  const std::size_t m = sc.sets.size();
  if (m > 24 || sc.universe.size() > 64) throw std::runtime_error("set cover oracle too large");
  std::vector<std::uint64_t> masks;
  for (const auto& s : sc.sets) {
    std::uint64_t b = 0;
    for (int e : s.members) b |= std::uint64_t{1} << e;
    masks.push_back(b);
  }
  const std::uint64_t goal = sc.universe.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << sc.universe.size()) - 1;
  if (sc.universe.size() <= 20) {
    // cheapest way to reach each covered-element mask
    std::vector<std::optional<Rational>> reach(goal + 1);
    reach[0] = Rational(0);
    for (std::uint64_t cov = 0; cov <= goal; ++cov) {
      if (!reach[cov]) continue;
      for (std::size_t j = 0; j < m; ++j) {
        std::uint64_t next = cov | masks[j];
        if (next == cov) continue;
        Rational c = *reach[cov] + sc.sets[j].cost;
        if (!reach[next] || c < *reach[next]) reach[next] = c;
      }
    }
    return reach[goal];
  }
  std::optional<Rational> best;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    std::uint64_t cov = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (pick >> j & 1u) cov |= masks[j];
    }
    if (cov != goal) continue;
    Rational c = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (pick >> j & 1u) c += sc.sets[j].cost;
    }
    if (!best || c < *best) best = c;
  }
  return best;
}

// Smallest vertex cover by enumeration.
inline int vertex_cover_size(int n, const std::vector<std::pair<int, int>>& edges) {
  int best = n;
  for (std::uint32_t pick = 0; pick < (1u << n); ++pick) {
    bool ok = true;
    for (auto [u, v] : edges) ok &= ((pick >> u) & 1u) || ((pick >> v) & 1u);
    if (ok) best = std::min(best, __builtin_popcount(pick));
  }
  return best;
}

// Pairwise definition of x-laminarity.
inline bool pairwise_laminar(std::span<const segstab::Segment> segs) {
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const auto& a = segs[i];
      const auto& b = segs[j];
      bool disjoint = a.x_right <= b.x_left || b.x_right <= a.x_left;
      bool a_in_b = b.x_left <= a.x_left && a.x_right <= b.x_right;
      bool b_in_a = a.x_left <= b.x_left && b.x_right <= a.x_right;
      if (!disjoint && !a_in_b && !b_in_a) return false;
    }
  }
  return true;
}

}  // namespace oracle
