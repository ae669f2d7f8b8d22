#include "segstab/forge.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace segstab {

namespace {

int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::pair<int, int> draw_span(std::mt19937_64& rng, int max) {
  int a = draw(rng, 0, max), b = draw(rng, 0, max - 1);
  if (b >= a) ++b;
  return {std::min(a, b), std::max(a, b)};
}

}  // namespace

StabInstance gen_random(int n, std::uint64_t seed, const RandomOptions& opts) {
  if (n < 1) throw Error("gen_random needs n >= 1");
  if (opts.coord_max < 1 || opts.denominator < 1) throw Error("gen_random needs a positive coordinate range");
  std::mt19937_64 rng(seed);
  StabInstance inst;
  inst.objective = opts.objective;
  inst.hv = opts.hv;
  for (int i = 0; i < n; ++i) {
    auto [x1, x2] = draw_span(rng, opts.coord_max);
    auto [y1, y2] = draw_span(rng, opts.coord_max);
    inst.rects.push_back(Rect{rational(x1, opts.denominator), rational(x2, opts.denominator),
                              rational(y1, opts.denominator), rational(y2, opts.denominator), i, 1});
  }
  return inst;
}

StabInstance gen_random_constrained(int n, int extra, std::uint64_t seed, const RandomOptions& opts) {
  auto inst = gen_random(n, seed, opts);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Segment> cands;
  for (int i = 0; i < extra; ++i) {
    auto [x1, x2] = draw_span(rng, opts.coord_max);
    int y = draw(rng, 0, opts.coord_max);
    cands.push_back(Segment{rational(x1, opts.denominator), rational(x2, opts.denominator),
                            rational(y, opts.denominator), Orientation::horizontal, i});
  }
  for (const auto& r : inst.rects) {
    bool hit = std::any_of(cands.begin(), cands.end(), [&](const Segment& s) { return stabs(s, r); });
    if (!hit) {
      cands.push_back(Segment{r.x_left, r.x_right, r.y_top, Orientation::horizontal, static_cast<int>(cands.size())});
    }
  }
  inst.fixed_candidates = std::move(cands);
  return inst;
}

StabInstance gen_scc_counterexample(int m) {
  if (m < 2 || m % 2 != 0) throw Error("SCC counterexample needs an even m >= 2");
  StabInstance inst;
  int half = m / 2;
  for (int i = 1; i <= half; ++i) {
    for (int j = half + 1; j <= m; ++j) {
      int id = static_cast<int>(inst.rects.size());
      inst.rects.push_back(Rect{Rational(i), Rational(j), Rational(i), Rational(j), id, 1});
    }
  }
  std::vector<Segment> segs;
  for (int i = 1; i <= m; ++i) {
    Rational y(i);
    if (i <= half) {
      segs.push_back(Segment{Rational(i), Rational(m), y, Orientation::horizontal, i - 1});
    } else {
      segs.push_back(Segment{Rational(1), Rational(i), y, Orientation::horizontal, i - 1});
    }
  }
  inst.fixed_candidates = std::move(segs);
  return inst;
}

GreedyTrap gen_greedy_trap(int levels, const Rational& eps, bool weighted) {
  if (levels < 1) throw Error("greedy trap needs at least one level");
  if (sgn(eps) <= 0 || eps * (levels + 1) >= 1) throw Error("greedy trap needs 0 < eps < 1/(levels+1)");
  if (weighted && levels % 2 != 0) throw Error("weighted greedy trap needs an even number of levels");

  // x-extents level by level: each rect holds its two children with three
  // equal gaps.
  std::vector<std::vector<std::pair<Rational, Rational>>> spans(levels + 1);
  spans[0].push_back({Rational(0), Rational(1)});
  for (int i = 1; i <= levels; ++i) {
    Rational width = (1 - i * eps) / pow2(i);
    for (const auto& [lo, hi] : spans[i - 1]) {
      Rational gap = (hi - lo - 2 * width) / 3;
      Rational a = lo + gap;
      Rational b = a + width + gap;
      spans[i].push_back({a, Rational(a + width)});
      spans[i].push_back({b, Rational(b + width)});
    }
  }

  std::vector<int> kept;
  for (int i = 0; i <= levels; ++i) {
    if (!weighted || i % 2 == 0) kept.push_back(i);
  }
  // Distinct top heights 1 + step * rank, ranked: first nested level, level 0,
  // then deeper levels.
  std::vector<int> rank_order = kept;
  if (rank_order.size() >= 2) std::swap(rank_order[0], rank_order[1]);
  std::vector<long> first_rank(levels + 1, 0);
  long next_rank = 0;
  for (int i : rank_order) {
    first_rank[i] = next_rank;
    next_rank += static_cast<long>(spans[i].size());
  }

  GreedyTrap trap;
  trap.levels = levels;
  const Rational top_h = 2;
  const Rational step = eps / (4 * pow2(levels));
  trap.greedy_cost = 0;
  int next_id = 0;
  std::vector<Rect> t_side;
  for (int i : kept) {
    trap.greedy_cost += 1 - i * eps;
    int copies = 1;
    if (weighted) copies = static_cast<int>(ceil_of(Rational(pow2(i) / (1 - i * eps))).get_si());
    for (std::size_t rank = 0; rank < spans[i].size(); ++rank) {
      const auto& [lo, hi] = spans[i][rank];
      Rational top = 1 + step * (first_rank[i] + static_cast<long>(rank));
      trap.b_top_edges.push_back(Segment{lo, hi, top, Orientation::horizontal, 0});
      for (int c = 0; c < copies; ++c) {
        trap.b_rects.push_back(next_id);
        trap.inst.rects.push_back(Rect{lo, hi, Rational(0), top, next_id++, 1});
        t_side.push_back(Rect{lo, hi, top, top_h, 0, 1});
      }
    }
  }
  for (auto& r : t_side) {
    r.id = next_id++;
    trap.t_rects.push_back(r.id);
    trap.inst.rects.push_back(r);
  }
  for (std::size_t i = 0; i < trap.b_top_edges.size(); ++i) trap.b_top_edges[i].id = static_cast<int>(i);
  trap.b = Segment{Rational(0), Rational(1), Rational(0), Orientation::horizontal, 0};
  trap.t = Segment{Rational(0), Rational(1), top_h, Orientation::horizontal, 1};
  return trap;
}

DoubleStaircase gen_double_staircase(int l) {
  if (l < 2 || l % 2 != 0) throw Error("double staircase needs an even l >= 2");
  DoubleStaircase out;
  out.k = l / 2;
  for (int i = -l; i <= l; ++i) {
    out.inst.rects.push_back(Rect{Rational(i), Rational(i + 1), Rational(0), Rational(std::abs(i) + 1), i + l, 1});
  }
  out.universal = Segment{Rational(-l), Rational(l + 1), rational(1, 2), Orientation::horizontal, 0};
  int id = 1;
  for (int level = 1; level <= out.k + 1; ++level) {
    for (int j = 1; j <= out.k; ++j) {
      // j left rects r_{-level-j+1} .. r_{-level}, k+1-j right rects r_level .. r_{level+k-j}
      out.lines.push_back(Segment{Rational(-(level + j - 1)), Rational(level + out.k - j + 1),
                                  Rational(2 * level + 1, 2), Orientation::horizontal, id++});
    }
  }
  return out;
}

int vertical_slab_count(std::span<const Rect> rects) {
  std::set<Rational> xs;
  for (const auto& r : rects) {
    xs.insert(r.x_left);
    xs.insert(r.x_right);
  }
  return xs.empty() ? 0 : static_cast<int>(xs.size()) - 1;
}

int staircase_slab_threshold(int max_l) {
  for (int l = 2; l <= max_l; l += 2) {
    auto st = gen_double_staircase(l);
    long sets = static_cast<long>(st.k) * (st.k + 1);
    if (sets > 2L * vertical_slab_count(st.inst.rects)) return l;
  }
  return -1;
}

bool Box3::contains(const std::array<Rational, 3>& p) const {
  for (int a = 0; a < 3; ++a) {
    if (p[a] < lo[a] || p[a] > hi[a]) return false;
  }
  return true;
}

bool Box3::empty() const {
  for (int a = 0; a < 3; ++a) {
    if (lo[a] > hi[a]) return true;
  }
  return false;
}

PiercingInstance3D embed_piercing_3d(const StabInstance& inst, std::span<const Segment> segments) {
  PiercingInstance3D out;
  if (segments.empty()) {
    for (const auto& r : inst.rects) {
      out.boxes.push_back(Box3{{Rational(1), Rational(1), Rational(1)}, {Rational(0), Rational(0), Rational(0)}, r.id});
    }
    return out;
  }
  std::array<Rational, 3> lo{segments[0].x_left, segments[0].x_right, segments[0].y};
  std::array<Rational, 3> hi = lo;
  for (const auto& s : segments) {
    if (s.orientation != Orientation::horizontal) throw Error("piercing embedding takes horizontal segments");
    std::array<Rational, 3> p{s.x_left, s.x_right, s.y};
    for (int a = 0; a < 3; ++a) {
      if (p[a] < lo[a]) lo[a] = p[a];
      if (p[a] > hi[a]) hi[a] = p[a];
    }
    out.points.push_back(Point3{p, s.length(), s.id});
  }
  for (int a = 0; a < 3; ++a) {
    lo[a] -= 1;
    hi[a] += 1;
  }
  for (const auto& r : inst.rects) {
    Box3 box;
    box.id = r.id;
    box.lo = {lo[0], r.x_right, std::max(r.y_bottom, lo[2])};
    box.hi = {r.x_left, hi[1], std::min(r.y_top, hi[2])};
    out.boxes.push_back(box);
  }
  return out;
}

}  // namespace segstab
