#include "segstab/scc.hpp"

#include "segstab/candidates.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace segstab {

namespace {

using Bits = boost::dynamic_bitset<>;

// For every rect, the set of segments stabbing it.
std::vector<Bits> stabbers(std::span<const Rect> rects, std::span<const Segment> segs) {
  auto by_seg = stab_sets(segs, rects);
  std::vector<Bits> by_rect(rects.size(), Bits(segs.size()));
  for (std::size_t s = 0; s < segs.size(); ++s) {
    for (auto r = by_seg[s].find_first(); r != Bits::npos; r = by_seg[s].find_next(r)) by_rect[r].set(s);
  }
  return by_rect;
}

// Folds the cell counts of one subfamily into the (m, k) table.
void record(const std::vector<Bits>& by_rect, const Bits& mask, std::optional<int> only_k,
            std::map<std::pair<int, int>, long>& table) {
  const int m = static_cast<int>(mask.count());
  if (m == 0) return;
  std::map<std::size_t, std::set<Bits>> by_size;
  for (const auto& b : by_rect) {
    Bits restricted = b & mask;
    auto c = restricted.count();
    if (c > 0) by_size[c].insert(std::move(restricted));
  }
  long running = 0;
  auto it = by_size.begin();
  for (int k = 1; k <= m; ++k) {
    for (; it != by_size.end() && static_cast<int>(it->first) <= k; ++it) running += static_cast<long>(it->second.size());
    if (only_k && *only_k != k) continue;
    long& slot = table[{m, k}];
    slot = std::max(slot, running);
  }
}

std::vector<SccRow> rows_of(const std::map<std::pair<int, int>, long>& table) {
  std::vector<SccRow> out;
  for (const auto& [key, cells] : table) out.push_back(SccRow{key.first, key.second, cells});
  return out;
}

}  // namespace

CellStats cell_stats(std::span<const Rect> rects, std::span<const Segment> segs, int k) {
  if (k < 1 || k > static_cast<int>(segs.size())) throw Error("cell_count needs 1 <= k <= m");
  CellStats out;
  std::set<Bits> cells;
  for (auto& b : stabbers(rects, segs)) {
    auto c = b.count();
    if (c == 0) {
      ++out.orphans;
    } else if (static_cast<int>(c) <= k) {
      cells.insert(std::move(b));
    }
  }
  out.cells = static_cast<long>(cells.size());
  return out;
}

std::vector<SccRow> scc_profile(std::span<const Rect> rects, std::span<const Segment> segs, int samples,
                                std::uint64_t seed, std::optional<int> only_k) {
  std::map<std::pair<int, int>, long> table;
  if (samples <= 0 || segs.empty()) return {};
  auto by_rect = stabbers(rects, segs);
  const std::size_t m = segs.size();
  for (int sample = 0; sample < samples; ++sample) {
    Bits mask(m);
    if (sample == 0) {
      mask.set();
    } else {
      std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(sample));
      std::vector<std::size_t> order(m);
      for (std::size_t i = 0; i < m; ++i) order[i] = i;
      std::shuffle(order.begin(), order.end(), rng);
      std::size_t size = 1 + rng() % m;
      for (std::size_t i = 0; i < size; ++i) mask.set(order[i]);
    }
    record(by_rect, mask, only_k, table);
  }
  return rows_of(table);
}

std::vector<SccRow> scc_exhaustive(std::span<const Rect> rects, std::span<const Segment> segs) {
  const std::size_t m = segs.size();
  if (m > 16) throw Error("exhaustive SCC profile limited to 16 segments");
  std::map<std::pair<int, int>, long> table;
  auto by_rect = stabbers(rects, segs);
  for (unsigned long pick = 1; pick < (1ul << m); ++pick) {
    Bits mask(m, pick);
    record(by_rect, mask, std::nullopt, table);
  }
  return rows_of(table);
}

}  // namespace segstab
