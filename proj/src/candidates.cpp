#include "segstab/candidates.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>

namespace segstab {

namespace {

// Rects with coordinates replaced by ranks so the cubic enumeration runs on
// integers.
struct RankedRects {
  std::vector<Rational> xs, ys;
  struct R {
    int left, right, bottom, top;
  };
  std::vector<R> rects;

  explicit RankedRects(std::span<const Rect> in) {
    for (const auto& r : in) {
      xs.push_back(r.x_left);
      xs.push_back(r.x_right);
      ys.push_back(r.y_bottom);
      ys.push_back(r.y_top);
    }
    auto uniq = [](std::vector<Rational>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    uniq(xs);
    uniq(ys);
    auto rank = [](const std::vector<Rational>& v, const Rational& q) {
      return static_cast<int>(std::lower_bound(v.begin(), v.end(), q) - v.begin());
    };
    for (const auto& r : in) {
      rects.push_back({rank(xs, r.x_left), rank(xs, r.x_right), rank(ys, r.y_bottom), rank(ys, r.y_top)});
    }
  }

  std::vector<int> distinct(int R::*field) const {
    std::vector<int> v;
    for (const auto& r : rects) v.push_back(r.*field);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  std::vector<int> alive_at(int y) const {
    std::vector<int> alive;
    for (int i = 0; i < static_cast<int>(rects.size()); ++i) {
      if (rects[i].bottom <= y && y <= rects[i].top) alive.push_back(i);
    }
    return alive;
  }

  Segment segment(int a, int b, int y, int id) const {
    return Segment{xs[a], xs[b], ys[y], Orientation::horizontal, id};
  }
};

// Exact stabbing test with a floating-point fast path; falls back to the
// rationals whenever the doubles are too close to decide.
class StabTester {
 public:
  explicit StabTester(std::span<const Rect> rects) : rects_(rects) {
    for (const auto& r : rects) {
      approx_.push_back({r.x_left.get_d(), r.x_right.get_d(), r.y_bottom.get_d(), r.y_top.get_d()});
    }
  }

  bool operator()(const Segment& s, std::size_t i) const {
    if (s.orientation == Orientation::vertical) return stabs(s, rects_[i]);
    const auto& a = approx_[i];
    double sl = s.x_left.get_d(), sr = s.x_right.get_d(), sy = s.y.get_d();
    int c1 = cmp(sl, a[0]), c2 = cmp(a[1], sr), c3 = cmp(a[2], sy), c4 = cmp(sy, a[3]);
    if (c1 > 0 || c2 > 0 || c3 > 0 || c4 > 0) return false;
    if (c1 < 0 && c2 < 0 && c3 < 0 && c4 < 0) return true;
    return stabs(s, rects_[i]);
  }

 private:
  // -1 if clearly a < b, +1 if clearly a > b, 0 if undecided.
  static int cmp(double a, double b) {
    double tol = 1e-9 * (1.0 + std::max(std::fabs(a), std::fabs(b)));
    if (a < b - tol) return -1;
    if (a > b + tol) return 1;
    return 0;
  }

  std::span<const Rect> rects_;
  std::vector<std::array<double, 4>> approx_;
};

}  // namespace

std::vector<Segment> candidate_segments(std::span<const Rect> rects) {
  std::vector<Segment> out;
  if (rects.empty()) return out;
  RankedRects rr(rects);
  auto lefts = rr.distinct(&RankedRects::R::left);
  auto rights = rr.distinct(&RankedRects::R::right);
  auto tops = rr.distinct(&RankedRects::R::top);

  for (int y : tops) {
    auto alive = rr.alive_at(y);
    for (int a : lefts) {
      int min_right = -1;
      for (int i : alive) {
        const auto& r = rr.rects[i];
        if (r.left >= a && (min_right < 0 || r.right < min_right)) min_right = r.right;
      }
      if (min_right < 0) break;  // larger a only shrinks the stab set
      for (int b : rights) {
        if (b >= min_right) out.push_back(rr.segment(a, b, y, static_cast<int>(out.size())));
      }
    }
  }
  return out;
}

std::vector<Segment> tight_candidates(std::span<const Rect> rects) {
  std::vector<Segment> out;
  if (rects.empty()) return out;
  RankedRects rr(rects);
  auto tops = rr.distinct(&RankedRects::R::top);

  for (int y : tops) {
    auto alive = rr.alive_at(y);
    std::vector<int> lefts, rights;
    for (int i : alive) {
      lefts.push_back(rr.rects[i].left);
      rights.push_back(rr.rects[i].right);
    }
    std::sort(lefts.begin(), lefts.end());
    lefts.erase(std::unique(lefts.begin(), lefts.end()), lefts.end());
    std::sort(rights.begin(), rights.end());
    rights.erase(std::unique(rights.begin(), rights.end()), rights.end());

    for (int a : lefts) {
      for (int b : rights) {
        if (b <= a) continue;
        bool left_tight = false, right_tight = false, any = false;
        int min_top = 0;
        for (int i : alive) {
          const auto& r = rr.rects[i];
          if (r.left < a || r.right > b) continue;
          min_top = any ? std::min(min_top, r.top) : r.top;
          any = true;
          left_tight |= r.left == a;
          right_tight |= r.right == b;
        }
        if (any && left_tight && right_tight && min_top == y) {
          out.push_back(rr.segment(a, b, y, static_cast<int>(out.size())));
        }
      }
    }
  }
  return out;
}

std::vector<boost::dynamic_bitset<>> stab_sets(std::span<const Segment> segs, std::span<const Rect> rects) {
  StabTester test(rects);
  std::vector<boost::dynamic_bitset<>> sets;
  sets.reserve(segs.size());
  for (const auto& s : segs) {
    boost::dynamic_bitset<> bits(rects.size());
    for (std::size_t i = 0; i < rects.size(); ++i) {
      if (test(s, i)) bits.set(i);
    }
    sets.push_back(std::move(bits));
  }
  return sets;
}

std::vector<Segment> prune_dominated(std::span<const Segment> cands, std::span<const Rect> rects) {
  auto sets = stab_sets(cands, rects);

  // Collapse identical stab sets to the shortest (first on ties).
  std::map<boost::dynamic_bitset<>, std::size_t> best;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    auto [it, inserted] = best.emplace(sets[i], i);
    if (!inserted && cands[i].length() < cands[it->second].length()) it->second = i;
  }

  std::vector<std::size_t> uniq;
  uniq.reserve(best.size());
  for (const auto& [bits, idx] : best) uniq.push_back(idx);
  std::vector<std::size_t> count(cands.size());
  for (auto i : uniq) count[i] = sets[i].count();

  // A dominator covers the x-span of i's stab set at no greater length. When
  // i already spans exactly that (the tight case) only candidates with the
  // same x-extent qualify.
  std::map<std::pair<Rational, Rational>, std::vector<std::size_t>> by_extent;
  for (auto i : uniq) by_extent[{cands[i].x_left, cands[i].x_right}].push_back(i);
  auto tight_extent = [&](std::size_t i) {
    auto first = sets[i].find_first();
    if (first == boost::dynamic_bitset<>::npos) return false;
    Rational lo = rects[first].x_left, hi = rects[first].x_right;
    for (auto r = sets[i].find_next(first); r != boost::dynamic_bitset<>::npos; r = sets[i].find_next(r)) {
      if (rects[r].x_left < lo) lo = rects[r].x_left;
      if (rects[r].x_right > hi) hi = rects[r].x_right;
    }
    return cands[i].orientation == Orientation::horizontal && lo == cands[i].x_left && hi == cands[i].x_right;
  };
  auto dominates = [&](std::size_t j, std::size_t i) {
    return j != i && count[j] > count[i] && cands[j].length() <= cands[i].length() && sets[i].is_subset_of(sets[j]);
  };

  std::vector<char> keep(cands.size(), 0);
  for (auto i : uniq) {
    bool dominated = false;
    if (tight_extent(i)) {
      for (auto j : by_extent[{cands[i].x_left, cands[i].x_right}]) {
        if ((dominated = dominates(j, i))) break;
      }
    } else {
      for (auto j : uniq) {
        if ((dominated = dominates(j, i))) break;
      }
    }
    keep[i] = !dominated;
  }

  std::vector<Segment> out;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (keep[i]) out.push_back(cands[i]);
  }
  return out;
}

std::vector<Segment> pruned_candidates(std::span<const Rect> rects) {
  auto tight = tight_candidates(rects);
  return prune_dominated(tight, rects);
}

}  // namespace segstab
