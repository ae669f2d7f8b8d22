#include "oracles.hpp"

#include "segstab/candidates.hpp"
#include "segstab/cover.hpp"
#include "segstab/forge.hpp"

#include <doctest.h>

#include <set>

using namespace segstab;
using oracle::hseg;
using oracle::rect;

namespace {

std::vector<Segment> greedy_segments(const StabInstance& inst, const std::vector<Segment>& cands, GreedyMode mode) {
  auto sc = to_set_cover(inst, cands);
  auto res = greedy_cover(sc, greedy_weights(inst.rects, mode));
  std::vector<Segment> out;
  for (int j : res.chosen) out.push_back(cands[j]);
  return out;
}

bool same_segment_set(const std::vector<Segment>& a, const std::vector<Segment>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& s : a) {
    if (std::none_of(b.begin(), b.end(), [&](const Segment& t) { return same_geometry(s, t); })) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("gen_random") {
  auto one = gen_random(1, 3);
  CHECK(one.rects.size() == 1);
  one.validate();
  auto a = gen_random(100, 77, {50, 3});
  auto b = gen_random(100, 77, {50, 3});
  a.validate();
  CHECK(a.rects == b.rects);
  CHECK(gen_random(100, 78, {50, 3}).rects != a.rects);
  auto c = gen_random_constrained(10, 5, 9);
  c.validate();
}

TEST_CASE("SCC counterexample") {
  CHECK_THROWS_AS(gen_scc_counterexample(5), Error);
  for (int m : {2, 4, 6, 8}) {
    auto inst = gen_scc_counterexample(m);
    inst.validate();
    CHECK(inst.rects.size() == static_cast<std::size_t>(m * m / 4));
    auto bits = stab_sets(*inst.fixed_candidates, inst.rects);
    // per rect: exactly s_i and s_j
    for (std::size_t r = 0; r < inst.rects.size(); ++r) {
      std::vector<int> hit;
      for (std::size_t s = 0; s < bits.size(); ++s) {
        if (bits[s].test(r)) hit.push_back(static_cast<int>(s) + 1);
      }
      REQUIRE(hit.size() == 2);
      CHECK(Rational(hit[0]) == inst.rects[r].x_left);
      CHECK(Rational(hit[1]) == inst.rects[r].x_right);
    }
  }
}

TEST_CASE("greedy trap structure") {
  auto trap = gen_greedy_trap(1, rational(1, 100), false);
  CHECK(trap.b_rects.size() == 3);
  CHECK(trap.t_rects.size() == 3);
  trap.inst.validate();
  for (const auto& r : trap.inst.rects) {
    bool in_b = std::find(trap.b_rects.begin(), trap.b_rects.end(), r.id) != trap.b_rects.end();
    CHECK(stabs(in_b ? trap.b : trap.t, r));
  }
  // with a single level the B top edges cost 1 + (1 - eps) < 2
  auto cands = candidate_segments(trap.inst.rects);
  CHECK(exact_cover(to_set_cover(trap.inst, cands)).cost == rational(199, 100));
  auto two = gen_greedy_trap(2, rational(1, 100), false);
  CHECK(exact_cover(to_set_cover(two.inst, candidate_segments(two.inst.rects))).cost == 2);

  std::set<Rational> tops;
  for (int id : trap.b_rects) tops.insert(trap.inst.rects[id].y_top);
  CHECK(tops.size() == trap.b_rects.size());

  CHECK_THROWS_AS(gen_greedy_trap(3, rational(1, 4), false), Error);
  CHECK_THROWS_AS(gen_greedy_trap(3, rational(1, 100), true), Error);
}

TEST_CASE("greedy falls into the trap") {
  const Rational eps = rational(1, 100);
  for (int l = 1; l <= 3; ++l) {
    auto trap = gen_greedy_trap(l, eps, false);
    auto full = candidate_segments(trap.inst.rects);
    auto picked = greedy_segments(trap.inst, full, GreedyMode::count);
    CHECK(same_segment_set(picked, trap.b_top_edges));
    CHECK(solution_cost(Objective::length, picked) == trap.greedy_cost);
    // the tight family leads greedy to the same answer
    CHECK(same_segment_set(greedy_segments(trap.inst, tight_candidates(trap.inst.rects), GreedyMode::count),
                           trap.b_top_edges));
  }
  CHECK(gen_greedy_trap(3, eps, false).greedy_cost == rational(394, 100));
}

TEST_CASE("weighted greedy trap") {
  const Rational eps = rational(1, 100);
  auto trap = gen_greedy_trap(4, eps, true);
  long level4 = 0;
  for (int id : trap.b_rects) {
    if (trap.inst.rects[id].width() == (1 - 4 * eps) / 16) ++level4;
  }
  CHECK(level4 == 16 * ceil_of(Rational(16 / (1 - 4 * eps))).get_si());
  auto picked = greedy_segments(trap.inst, tight_candidates(trap.inst.rects), GreedyMode::width);
  CHECK(same_segment_set(picked, trap.b_top_edges));
  CHECK(trap.greedy_cost == 3 - 6 * eps);
}

TEST_CASE("double staircase") {
  CHECK_THROWS_AS(gen_double_staircase(3), Error);
  for (int l : {2, 4, 6}) {
    auto st = gen_double_staircase(l);
    CHECK(st.inst.rects.size() == static_cast<std::size_t>(2 * l + 1));
    CHECK(st.lines.size() == static_cast<std::size_t>(st.k * (st.k + 1)));
    auto uni = stab_sets(std::vector<Segment>{st.universal}, st.inst.rects);
    CHECK(uni[0].all());
    auto bits = stab_sets(st.lines, st.inst.rects);
    std::set<boost::dynamic_bitset<>> distinct(bits.begin(), bits.end());
    CHECK(distinct.size() == st.lines.size());
    for (const auto& b : bits) CHECK(b.count() == static_cast<std::size_t>(st.k + 1));
  }
  CHECK(vertical_slab_count(gen_double_staircase(4).inst.rects) == 9);
  int threshold = staircase_slab_threshold();
  CHECK(threshold == 16);
}

TEST_CASE("piercing embedding") {
  StabInstance inst;
  inst.rects = {rect("0.5", "1.5", "0", "2", 0)};
  std::vector<Segment> segs{hseg("0", "2", "1", 0), hseg("0", "1", "1", 1)};
  auto p = embed_piercing_3d(inst, segs);
  REQUIRE(p.points.size() == 2);
  CHECK(p.points[0].weight == 2);
  CHECK(p.boxes[0].contains(p.points[0].at));
  CHECK_FALSE(p.boxes[0].contains(p.points[1].at));

  auto scc = gen_scc_counterexample(4);
  auto e = embed_piercing_3d(scc, *scc.fixed_candidates);
  for (const auto& box : e.boxes) {
    for (std::size_t s = 0; s < e.points.size(); ++s) {
      const Rect& r = scc.rects[box.id];
      CHECK(box.contains(e.points[s].at) == stabs((*scc.fixed_candidates)[s], r));
    }
  }
}
