#include "oracles.hpp"

#include "segstab/candidates.hpp"
#include "segstab/forge.hpp"
#include "segstab/geometry.hpp"

#include <doctest.h>

#include <random>

using namespace segstab;
using oracle::hseg;
using oracle::q;
using oracle::rect;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/6") == rational(1, 2));
  CHECK(parse_rational("-1.25") == rational(-5, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(format_rational(Rational(3)) == "3/1");
  CHECK(format_rational(rational(-2, 4)) == "-1/2");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK(floor_of(rational(-1, 2)) == -1);
  CHECK(ceil_of(rational(-1, 2)) == 0);
  CHECK(pow2(-3) == rational(1, 8));
  CHECK(to_decimal(rational(1, 3), 4) == "0.3333");
}

TEST_CASE("stabbing predicate") {
  auto r = rect("0.5", "1.5", "0", "2");
  CHECK(stabs(hseg("0", "2", "1"), r));
  CHECK_FALSE(stabs(hseg("0", "1", "1"), r));
  CHECK_FALSE(stabs(hseg("0", "2", "3"), r));
  // closed boundaries
  CHECK(stabs(hseg("0.5", "1.5", "2"), r));
  CHECK(stabs(hseg("0.5", "1.5", "0"), r));
  // vertical: spans y in [0,2] at x = 1
  Segment v{q("0"), q("2"), q("1"), Orientation::vertical, 0};
  CHECK(stabs(v, r));
  v.y = q("2");
  CHECK_FALSE(stabs(v, r));
}

TEST_CASE("stabbing is translation invariant") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto inst = gen_random(2, trial, {10, 2});
    const auto& r = inst.rects[0];
    const auto& o = inst.rects[1];
    Segment s{o.x_left, o.x_right, o.y_top, Orientation::horizontal, 0};
    if (rng() % 2) s.x_left = r.x_left;
    Rational dx = rational(static_cast<long>(rng() % 41) - 20, 3);
    Rational dy = rational(static_cast<long>(rng() % 41) - 20, 7);
    Rect moved{r.x_left + dx, r.x_right + dx, r.y_bottom + dy, r.y_top + dy, r.id, 1};
    Segment moved_s{s.x_left + dx, s.x_right + dx, s.y + dy, Orientation::horizontal, 0};
    CHECK(stabs(s, r) == stabs(moved_s, moved));
  }
}

TEST_CASE("verify_solution") {
  StabInstance inst;
  inst.rects = {rect("0", "1", "0", "1", 0)};
  Solution sol{{hseg("0", "1", "1")}, Rational(1), {}};
  auto rep = verify_solution(inst, sol);
  CHECK(rep.feasible);
  CHECK(rep.recomputed_cost == 1);

  Solution empty{{}, Rational(0), {}};
  rep = verify_solution(inst, empty);
  CHECK_FALSE(rep.feasible);
  CHECK(rep.uncovered == std::vector<int>{0});

  inst.rects.push_back(rect("2", "3", "0", "1", 1));
  Solution wide{{hseg("0", "3", "1")}, Rational(99), {}};
  rep = verify_solution(inst, wide);
  CHECK(rep.feasible);
  CHECK(rep.recomputed_cost == 3);
  CHECK_FALSE(rep.cost_matches);

  SUBCASE("constrained mode rejects foreign segments") {
    inst.fixed_candidates = std::vector<Segment>{hseg("0", "1", "1", 0), hseg("2", "3", "1", 1)};
    rep = verify_solution(inst, wide);
    CHECK_FALSE(rep.feasible);
    CHECK(rep.invalid_segments.size() == 1);
  }
  SUBCASE("vertical segments need HV mode") {
    Solution vert{{Segment{q("0"), q("1"), q("0"), Orientation::vertical, 5}}, Rational(1), {}};
    StabInstance single;
    single.rects = {rect("0", "1", "0", "1", 0)};
    CHECK_FALSE(verify_solution(single, vert).feasible);
    single.hv = true;
    CHECK(verify_solution(single, vert).feasible);
  }
}

TEST_CASE("instance validation") {
  StabInstance inst;
  inst.rects = {rect("0", "1", "0", "1", 0), rect("0", "1", "0", "1", 0)};
  CHECK_THROWS_AS(inst.validate(), Error);
  inst.rects[1].id = 1;
  inst.validate();
  inst.rects[1].x_right = inst.rects[1].x_left;
  CHECK_THROWS_AS(inst.validate(), Error);
  inst.rects[1].x_right = q("5");
  inst.fixed_candidates = std::vector<Segment>{hseg("0", "1", "0", 0)};
  CHECK_THROWS_AS(inst.validate(), Error);
}

TEST_CASE("canonicalize_solution") {
  StabInstance inst;
  inst.rects = {rect("0", "1", "0", "1", 0)};
  Solution sol{{hseg("-5", "5", "0.5")}, Rational(10), {}};
  auto c = canonicalize_solution(inst, sol);
  REQUIRE(c.segments.size() == 1);
  CHECK(same_geometry(c.segments[0], hseg("0", "1", "1")));
  CHECK(c.cost == 1);
  auto again = canonicalize_solution(inst, c);
  CHECK(same_geometry(again.segments[0], c.segments[0]));

  inst.fixed_candidates = std::vector<Segment>{hseg("0", "1", "1")};
  CHECK_THROWS_AS(canonicalize_solution(inst, sol), Error);
}

TEST_CASE("canonicalization properties on random feasible solutions") {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto inst = gen_random(6, seed, {12, 1});
    // one random superset segment per rect, sometimes shared
    Solution sol;
    for (const auto& r : inst.rects) {
      Rational lo = r.x_left - static_cast<long>(rng() % 3);
      Rational hi = r.x_right + static_cast<long>(rng() % 3);
      Rational y = r.y_bottom + (r.y_top - r.y_bottom) * rational(static_cast<long>(rng() % 5), 4);
      sol.segments.push_back(Segment{lo, hi, y, Orientation::horizontal, r.id});
    }
    sol.cost = solution_cost(inst.objective, sol.segments);
    REQUIRE(verify_solution(inst, sol).feasible);

    auto c = canonicalize_solution(inst, sol);
    auto rep = verify_solution(inst, c);
    CHECK(rep.feasible);
    CHECK(rep.cost_matches);
    CHECK(c.cost <= sol.cost);
    auto cc = canonicalize_solution(inst, c);
    CHECK(cc.cost == c.cost);
    CHECK(cc.segments.size() == c.segments.size());
    for (const auto& s : c.segments) {
      bool left = false, right = false, top = false;
      for (const auto& r : inst.rects) {
        left |= r.x_left == s.x_left;
        right |= r.x_right == s.x_right;
        top |= r.y_top == s.y;
      }
      CHECK((left && right && top));
    }
    // canonical segments are members of the candidate family
    auto cands = candidate_segments(inst.rects);
    for (const auto& s : c.segments) {
      bool member = std::any_of(cands.begin(), cands.end(), [&](const Segment& t) { return same_geometry(s, t); });
      CHECK(member);
    }
  }
}

TEST_CASE("transposition swaps axes") {
  auto r = rect("0", "2", "5", "6", 3);
  auto t = transpose(r);
  CHECK(t.x_left == 5);
  CHECK(t.y_top == 2);
  CHECK(transpose(t) == r);
  auto s = hseg("1", "2", "3");
  CHECK(transpose(transpose(s)) == s);
}
