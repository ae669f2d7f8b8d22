#pragma once

#include "segstab/geometry.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace segstab {

struct CellStats {
  long cells = 0;    // distinct stab sets of size 1..k
  long orphans = 0;  // rects stabbed by no segment of the family
};

/// Cells of the family at depth k: rects stabbed by 1..k segments, grouped
/// by their exact set of stabbing segments. Throws Error unless 1 <= k <= m.
CellStats cell_stats(std::span<const Rect> rects, std::span<const Segment> segs, int k);

inline long cell_count(std::span<const Rect> rects, std::span<const Segment> segs, int k) {
  return cell_stats(rects, segs, k).cells;
}

struct SccRow {
  int m = 0;
  int k = 0;
  long cells = 0;  // max over the sampled subfamilies of size m
};

/// Max cell count per (subfamily size, k) over `samples` subfamilies. Sample
/// 0 is the full family; the rest are uniform random subfamilies of random
/// size, seeded per sample from `seed`. `only_k` restricts the k column.
/// Rows are sorted by (m, k); samples == 0 yields no rows.
std::vector<SccRow> scc_profile(std::span<const Rect> rects, std::span<const Segment> segs, int samples,
                                std::uint64_t seed, std::optional<int> only_k = std::nullopt);

/// Same table over every nonempty subfamily. Throws Error when m > 16.
std::vector<SccRow> scc_exhaustive(std::span<const Rect> rects, std::span<const Segment> segs);

}  // namespace segstab
