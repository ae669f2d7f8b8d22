// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria.

#include "oracles.hpp"

#include "segstab/approx.hpp"
#include "segstab/candidates.hpp"
#include "segstab/cover.hpp"
#include "segstab/forge.hpp"
#include "segstab/hardness.hpp"
#include "segstab/laminar.hpp"
#include "segstab/lp.hpp"
#include "segstab/scc.hpp"
#include "segstab/solve.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace segstab;

namespace {

// Pinned limits.
constexpr double kLimit1 = 120;   // seconds
constexpr double kLimit3 = 300;
constexpr double kLimit6 = 600;
constexpr double kLimit10 = 900;
constexpr std::uint64_t kNodeBudget6 = 10'000'000;
constexpr int kLaminarStretch = 6;
constexpr int kApproxRatioCap = 12;
constexpr int kSpscFactor = 2;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (pass) note << why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Stabbing predicate written out from the definition, independent of geometry.cpp.
bool hits(const Segment& s, const Rect& r) {
  if (s.orientation == Orientation::horizontal) {
    return s.x_left <= r.x_left && r.x_right <= s.x_right && r.y_bottom <= s.y && s.y <= r.y_top;
  }
  return s.x_left <= r.y_bottom && r.y_top <= s.x_right && r.x_left <= s.y && s.y <= r.x_right;
}

std::set<int> hit_ids(const Segment& s, std::span<const Rect> rects) {
  std::set<int> ids;
  for (const auto& r : rects) {
    if (hits(s, r)) ids.insert(r.id);
  }
  return ids;
}

StabInstance corpus_instance(int i) {
  RandomOptions opts;
  opts.coord_max = 12 + i % 9;
  opts.denominator = 1 + i % 3;
  opts.objective = i % 4 == 3 ? Objective::cardinality : Objective::length;
  return gen_random(1 + i % 7, 1000 + static_cast<std::uint64_t>(i), opts);
}

Outcome criterion_1_2(Outcome& lp_out) {
  Outcome out;
  auto start = Clock::now();
  int lp_equal = 0;
  for (int i = 0; i < 200; ++i) {
    auto inst = corpus_instance(i);
    auto sc = to_set_cover(inst, candidate_segments(inst.rects));
    auto exact = exact_cover(sc, 10'000'000);
    auto brute = oracle::stabbing_optimum(inst);
    if (exact.status != CoverStatus::optimal) out.fail("instance " + std::to_string(i) + " not proven optimal");
    if (exact.cost != brute) {
      out.fail("instance " + std::to_string(i) + ": exact " + format_rational(exact.cost) + " vs brute force " +
               format_rational(brute));
    }
    auto lp = lp_solve(sc);
    if (lp.objective > brute) lp_out.fail("instance " + std::to_string(i) + ": LP above the optimum");
    if (lp.objective == brute) ++lp_equal;
  }
  double t = seconds_since(start);
  if (t >= kLimit1) out.fail("took " + std::to_string(t) + " s");
  if (out.pass) out.note << "200 instances, " << t << " s";
  if (lp_out.pass) lp_out.note << "0 violations, LP tight on " << lp_equal << "/200";
  return out;
}

Outcome criterion_3() {
  Outcome out;
  auto start = Clock::now();
  Rational worst = 0, worst_stretch = 0;
  for (int i = 0; i < 100; ++i) {
    auto inst = gen_random(1 + i % 6, 3000 + static_cast<std::uint64_t>(i), {10 + i % 11, 1 + i % 4});
    auto cands = candidate_segments(inst.rects);
    auto dec = laminarize(inst, cands);
    for (int f : {1, 2}) {
      auto fam = dec.family(f);
      if (!is_x_laminar(fam) || !oracle::pairwise_laminar(fam)) out.fail("family not x-laminar");
    }
    for (const auto& s : dec.snapped) {
      Rational stretch = (s.snapped.x_right - s.snapped.x_left) / (s.original.x_right - s.original.x_left);
      if (stretch > kLaminarStretch) out.fail("stretch " + format_rational(stretch));
      if (stretch > worst_stretch) worst_stretch = stretch;
      if (!(s.snapped.x_left <= s.original.x_left && s.original.x_right <= s.snapped.x_right)) {
        out.fail("snapped segment does not contain its original");
      }
    }
    auto lam = dec.segments();
    auto lam_opt = exact_cover(to_set_cover(inst, lam), 10'000'000);
    auto opt = oracle::stabbing_optimum(inst);
    if (lam_opt.status != CoverStatus::optimal) out.fail("laminar optimum not proven");
    if (lam_opt.cost > kLaminarStretch * opt) out.fail("laminar optimum exceeds 6 opt on instance " + std::to_string(i));
    if (opt > 0 && lam_opt.cost / opt > worst) worst = lam_opt.cost / opt;
  }
  double t = seconds_since(start);
  if (t >= kLimit3) out.fail("took " + std::to_string(t) + " s");
  if (out.pass) {
    out.note << "worst opt'/opt " << format_rational(worst) << ", worst stretch " << format_rational(worst_stretch) << ", "
             << t << " s";
  }
  return out;
}

// Cells counted directly from the definition.
long direct_cells(std::span<const Rect> rects, std::span<const Segment> segs, int k) {
  std::set<std::vector<int>> cells;
  for (const auto& r : rects) {
    std::vector<int> ids;
    for (const auto& s : segs) {
      if (hits(s, r)) ids.push_back(s.id);
    }
    if (!ids.empty() && static_cast<int>(ids.size()) <= k) cells.insert(ids);
  }
  return static_cast<long>(cells.size());
}

Outcome criterion_4() {
  Outcome out;
  for (int m = 2; m <= 20; m += 2) {
    auto inst = gen_scc_counterexample(m);
    long cells = cell_count(inst.rects, *inst.fixed_candidates, 2);
    if (cells != m * m / 4 || direct_cells(inst.rects, *inst.fixed_candidates, 2) != cells) {
      out.fail("m=" + std::to_string(m) + ": " + std::to_string(cells) + " cells");
    }
  }
  int families = 0;
  double tightest = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto inst = gen_random(4 + static_cast<int>(seed % 12), 5000 + seed, {16, 2});
    auto dec = laminarize(inst, pruned_candidates(inst.rects));
    for (int f : {1, 2}) {
      auto segs = dec.family(f);
      if (segs.empty() || segs.size() > 40) continue;
      ++families;
      long m = static_cast<long>(segs.size());
      for (int k = 1; k <= m; ++k) {
        long c = cell_count(inst.rects, segs, k);
        if (c != direct_cells(inst.rects, segs, k)) out.fail("cell_count disagrees with the direct count");
        if (c > m * k * k) out.fail("m=" + std::to_string(m) + " k=" + std::to_string(k));
        tightest = std::max(tightest, static_cast<double>(c) / (m * k * k));
      }
      // subfamilies
      for (const auto& row : scc_profile(inst.rects, segs, 24, seed)) {
        if (row.cells > static_cast<long>(row.m) * row.k * row.k) out.fail("subfamily above m k^2");
      }
    }
  }
  if (out.pass) out.note << "m^2/4 for m=2..20; " << families << " laminar families, max cells/(m k^2) " << tightest;
  return out;
}

std::vector<Segment> greedy_pick(const StabInstance& inst, GreedyMode mode) {
  auto cands = tight_candidates(inst.rects);
  auto res = greedy_cover(to_set_cover(inst, cands), greedy_weights(inst.rects, mode));
  std::vector<Segment> out;
  for (int j : res.chosen) out.push_back(cands[j]);
  return out;
}

// B's top edges recomputed from the rects: one segment per distinct B rect.
std::set<std::tuple<Rational, Rational, Rational>> top_edges(const GreedyTrap& trap) {
  std::set<std::tuple<Rational, Rational, Rational>> out;
  for (int id : trap.b_rects) {
    const auto& r = trap.inst.rects[id];
    out.emplace(r.x_left, r.x_right, r.y_top);
  }
  return out;
}

std::set<std::tuple<Rational, Rational, Rational>> as_tuples(std::span<const Segment> segs) {
  std::set<std::tuple<Rational, Rational, Rational>> out;
  for (const auto& s : segs) out.emplace(s.x_left, s.x_right, s.y);
  return out;
}

Outcome criterion_5() {
  Outcome out;
  const Rational eps = rational(1, 100);
  Rational previous = 0;
  for (int l = 2; l <= 5; ++l) {
    auto trap = gen_greedy_trap(l, eps, false);
    auto picked = greedy_pick(trap.inst, GreedyMode::count);
    Rational expected = 0;
    for (int i = 0; i <= l; ++i) expected += 1 - i * eps;
    Rational cost = solution_cost(Objective::length, picked);
    if (as_tuples(picked) != top_edges(trap) || picked.size() != top_edges(trap).size()) {
      out.fail("l=" + std::to_string(l) + ": greedy did not return B's top edges");
    }
    if (cost != expected) out.fail("l=" + std::to_string(l) + ": greedy cost " + format_rational(cost));
    auto opt = solve(trap.inst, Algo::exact);
    if (opt.status != CoverStatus::optimal || opt.cost != 2) {
      out.fail("l=" + std::to_string(l) + ": optimum " + format_rational(opt.cost));
    }
    Rational ratio = cost / 2;
    if (l > 2 && ratio - previous != (1 - l * eps) / 2) out.fail("ratio increment not linear");
    previous = ratio;
    out.note << "l=" << l << " ratio " << format_rational(ratio) << "; ";
  }
  for (int l : {2, 4}) {
    auto trap = gen_greedy_trap(l, eps, true);
    auto picked = greedy_pick(trap.inst, GreedyMode::width);
    if (as_tuples(picked) != top_edges(trap)) out.fail("weighted l=" + std::to_string(l) + ": width greedy missed B");
  }
  if (out.pass) out.note << "weighted l=2,4 ok";
  return out;
}

Outcome criterion_6() {
  Outcome out;
  auto start = Clock::now();
  struct Named {
    const char* name;
    Graph g;
  };
  std::vector<Named> graphs = {
      {"P2", {2, {{0, 1}}}},
      {"P3", {3, {{0, 1}, {1, 2}}}},
      {"C3", {3, {{0, 1}, {1, 2}, {0, 2}}}},
      {"C4", {4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}}},
      {"K1,3", {4, {{0, 1}, {0, 2}, {0, 3}}}},
      {"K4-e", {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}}},
  };
  for (const auto& [name, g] : graphs) {
    auto np = compile_np_instance(build_visibility(g));
    auto violations = check_np_instance(np);
    if (!violations.empty()) out.fail(std::string(name) + ": " + violations.front());
    int vc = oracle::vertex_cover_size(g.n, g.edges);
    auto r = solve(np.inst, Algo::exact, {}, kNodeBudget6);
    if (r.status != CoverStatus::optimal) out.fail(std::string(name) + ": node budget exhausted");
    if (r.cost != np.c + vc) {
      out.fail(std::string(name) + ": opt " + format_rational(r.cost) + " vs c + vc " + format_rational(np.c + vc));
    }
    out.note << name << " " << format_rational(r.cost) << "=" << format_rational(np.c) << "+" << vc << "; ";
  }
  double t = seconds_since(start);
  if (t >= kLimit6) out.fail("took " + std::to_string(t) + " s");
  out.note << t << " s";
  return out;
}

Outcome criterion_7() {
  Outcome out;
  for (int m : {2, 4}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto spsc = gen_spsc(m, seed);
      auto target = oracle::set_cover_optimum(spsc_set_cover(spsc));
      if (!target) {
        out.fail("SPSC instance without a cover");
        continue;
      }
      auto card = solve(spsc_to_stabbing(spsc, SpscMode::cardinality), Algo::exact);
      auto constr = solve(spsc_to_stabbing(spsc, SpscMode::constrained), Algo::exact);
      std::string tag = "m=" + std::to_string(m) + " seed " + std::to_string(seed);
      if (card.status != CoverStatus::optimal || card.cost != *target) {
        out.fail(tag + ": cardinality opt " + format_rational(card.cost) + " vs " + format_rational(*target));
      }
      if (constr.status != CoverStatus::optimal || constr.cost > kSpscFactor * *target) {
        out.fail(tag + ": constrained opt " + format_rational(constr.cost));
      }
    }
  }
  if (out.pass) out.note << "m=2,4 over 5 seeds each";
  return out;
}

Outcome criterion_8() {
  Outcome out;
  long pairs = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto inst = gen_random_constrained(3 + static_cast<int>(seed % 10), 6, 7000 + seed, {15, 1 + static_cast<int>(seed % 3)});
    const auto& segs = *inst.fixed_candidates;
    auto p = embed_piercing_3d(inst, segs);
    if (p.boxes.size() != inst.rects.size() || p.points.size() != segs.size()) {
      out.fail("size mismatch");
      continue;
    }
    for (std::size_t b = 0; b < p.boxes.size(); ++b) {
      for (std::size_t s = 0; s < segs.size(); ++s) {
        ++pairs;
        if (p.boxes[b].contains(p.points[s].at) != hits(segs[s], inst.rects[b])) {
          out.fail("seed " + std::to_string(seed) + " pair (" + std::to_string(b) + "," + std::to_string(s) + ")");
        }
      }
    }
    for (std::size_t s = 0; s < segs.size(); ++s) {
      if (p.points[s].weight != segs[s].x_right - segs[s].x_left) out.fail("point weight differs from segment length");
    }
  }
  if (out.pass) out.note << pairs << " pairs, 0 violations";
  return out;
}

Outcome criterion_9() {
  Outcome out;
  for (int l : {4, 8, 12}) {
    auto st = gen_double_staircase(l);
    const int k = st.k;
    if (static_cast<int>(st.inst.rects.size()) != 2 * l + 1) out.fail("rect count");
    if (hit_ids(st.universal, st.inst.rects).size() != st.inst.rects.size()) out.fail("universal line misses a rect");
    std::set<std::set<int>> distinct;
    for (const auto& line : st.lines) {
      auto ids = hit_ids(line, st.inst.rects);
      if (static_cast<int>(ids.size()) != k + 1) out.fail("line with " + std::to_string(ids.size()) + " rects");
      distinct.insert(ids);
    }
    if (static_cast<int>(distinct.size()) != k * (k + 1)) {
      out.fail("l=" + std::to_string(l) + ": " + std::to_string(distinct.size()) + " distinct sets");
    }
    out.note << "l=" << l << " " << distinct.size() << "=" << k << "*" << k + 1 << "; ";
  }
  return out;
}

Outcome criterion_10() {
  Outcome out;
  auto start = Clock::now();
  RoundingParams params;
  int feasible = 0;
  double worst_lp = 0;
  std::vector<int> small;
  for (int i = 0; i < 500; ++i) {
    RandomOptions opts;
    opts.coord_max = 20 + i % 31;
    opts.denominator = 1 + i % 2;
    opts.objective = i % 5 == 4 ? Objective::cardinality : Objective::length;
    auto inst = gen_random(1 + i % 50, 9000 + static_cast<std::uint64_t>(i), opts);
    params.seed = static_cast<std::uint64_t>(i);
    auto r = approx_stab(inst, params);
    if (verify_solution(inst, r.solution).feasible && r.solution.cost == solution_cost(inst.objective, r.solution.segments)) {
      ++feasible;
    } else {
      out.fail("instance " + std::to_string(i) + " infeasible");
    }
    if (r.lp_bound <= 0) {
      out.fail("instance " + std::to_string(i) + ": non-positive LP bound");
    } else {
      worst_lp = std::max(worst_lp, to_double(r.solution.cost / r.lp_bound));
    }
    if (inst.rects.size() <= 6) small.push_back(i);
  }
  Rational worst_exact = 0;
  for (int i : small) {
    RandomOptions opts;
    opts.coord_max = 20 + i % 31;
    opts.denominator = 1 + i % 2;
    opts.objective = i % 5 == 4 ? Objective::cardinality : Objective::length;
    auto inst = gen_random(1 + i % 50, 9000 + static_cast<std::uint64_t>(i), opts);
    auto opt = oracle::stabbing_optimum(inst);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      params.seed = seed;
      auto r = approx_stab(inst, params);
      Rational ratio = r.solution.cost / opt;
      if (ratio > kApproxRatioCap) out.fail("instance " + std::to_string(i) + " ratio " + format_rational(ratio));
      worst_exact = std::max(worst_exact, ratio);
    }
  }
  int hv_ok = 0;
  for (int i = 0; i < 100; ++i) {
    RandomOptions opts;
    opts.hv = true;
    opts.coord_max = 16 + i % 17;
    auto inst = gen_random(1 + i % 30, 20000 + static_cast<std::uint64_t>(i), opts);
    params.seed = static_cast<std::uint64_t>(i);
    auto r = approx_hv(inst, params);
    if (verify_solution(inst, r.solution).feasible) {
      ++hv_ok;
    } else {
      out.fail("HV instance " + std::to_string(i) + " infeasible");
    }
  }
  double t = seconds_since(start);
  if (t >= kLimit10) out.fail("took " + std::to_string(t) + " s");
  out.note << feasible << "/500 feasible, max cost/lp " << worst_lp << ", " << small.size()
           << " small instances x 20 seeds max cost/opt " << format_rational(worst_exact) << ", HV " << hv_ok
           << "/100 feasible, " << t << " s";
  return out;
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const char* title, const Outcome& o) {
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << " (" << title << "): " << o.note.str()
              << std::endl;
    if (!o.pass) ++failed;
  };
  Outcome lp;
  auto c1 = criterion_1_2(lp);
  report(1, "oracle consistency", c1);
  report(2, "LP soundness", lp);
  report(3, "laminarization bound", criterion_3());
  report(4, "SCC bounds", criterion_4());
  report(5, "greedy trap", criterion_5());
  report(6, "NP-gadget identity", criterion_6());
  report(7, "SPSC correspondence", criterion_7());
  report(8, "piercing isomorphism", criterion_8());
  report(9, "double staircase", criterion_9());
  report(10, "approximation pipeline", criterion_10());
  return failed;
}
