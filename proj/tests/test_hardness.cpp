#include "oracles.hpp"

#include "segstab/candidates.hpp"
#include "segstab/cover.hpp"
#include "segstab/hardness.hpp"

#include <doctest.h>

#include <set>

using namespace segstab;
using oracle::q;
using oracle::rect;

namespace {

Graph graph(int n, std::vector<std::pair<int, int>> edges) { return Graph{n, std::move(edges)}; }

// Smallest vertex cover as an explicit vertex list.
std::vector<int> min_cover(const Graph& g) {
  for (int size = 0; size <= g.n; ++size) {
    for (std::uint32_t pick = 0; pick < (1u << g.n); ++pick) {
      if (__builtin_popcount(pick) != size) continue;
      bool ok = true;
      for (auto [u, v] : g.edges) ok &= ((pick >> u) & 1u) || ((pick >> v) & 1u);
      if (!ok) continue;
      std::vector<int> out;
      for (int v = 0; v < g.n; ++v) {
        if (pick >> v & 1u) out.push_back(v);
      }
      return out;
    }
  }
  return {};
}

Rational exact_stab(const StabInstance& inst) {
  auto cands = inst.constrained() ? *inst.fixed_candidates : pruned_candidates(inst.rects);
  auto r = exact_cover(to_set_cover(inst, cands));
  REQUIRE(r.status == CoverStatus::optimal);
  return r.cost;
}

SetCoverInstance spsc_cover(const SpscInstance& s) {
  SetCoverInstance sc;
  for (int e = 0; e < s.universe_size(); ++e) sc.universe.push_back(e);
  for (std::size_t j = 0; j < s.sets.size(); ++j) sc.sets.push_back(CoverSet{static_cast<int>(j), s.sets[j], Rational(1)});
  return sc;
}

const std::vector<std::pair<const char*, Graph>>& fixed_graphs() {
  static const std::vector<std::pair<const char*, Graph>> graphs{
      {"path", graph(4, {{0, 1}, {1, 2}, {2, 3}})},
      {"cycle", graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})},
      {"star", graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})},
      {"K4 minus an edge", graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})},
      {"K4", graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})},
  };
  return graphs;
}

}  // namespace

TEST_CASE("planarity and graph validation") {
  CHECK(is_planar(graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})));
  Graph k5 = graph(5, {});
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) k5.edges.push_back({a, b});
  }
  CHECK_FALSE(is_planar(k5));
  CHECK_THROWS_AS(build_visibility(k5), Error);
  Graph k33 = graph(6, {});
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) k33.edges.push_back({a, b});
  }
  CHECK_FALSE(is_planar(k33));
  CHECK_THROWS_AS(graph(2, {{0, 0}}).validate(), Error);
  CHECK_THROWS_AS(graph(2, {{0, 1}, {1, 0}}).validate(), Error);
  CHECK_THROWS_AS(graph(2, {{0, 2}}).validate(), Error);
}

TEST_CASE("visibility representations") {
  auto path = build_visibility(graph(2, {{0, 1}}));
  CHECK(path.vertex_segments.size() == 2);
  CHECK(path.edge_segments.size() == 1);
  CHECK(check_visibility(path).empty());

  auto k3 = build_visibility(graph(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(check_visibility(k3).empty());
  std::set<int> levels(k3.level.begin(), k3.level.end());
  CHECK(levels.size() == 3);

  // a house: 5-cycle with one chord
  auto house = build_visibility(graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 4}}));
  CHECK(check_visibility(house).empty());

  auto broken = k3;
  broken.edge_segments[1].y = broken.edge_segments[0].y;
  CHECK_FALSE(check_visibility(broken).empty());

  for (const auto& [name, g] : fixed_graphs()) {
    CAPTURE(name);
    CHECK(check_visibility(build_visibility(g)).empty());
  }
}

TEST_CASE("gadget_segments on a three-rect stack") {
  std::vector<Rect> stack{rect("0", "1", "4", "5", 0), rect("-1", "7", "3", "4", 1), rect("0", "2", "2", "3", 2)};
  auto [act, ina] = gadget_segments(stack);
  REQUIRE(ina.size() == 2);
  REQUIRE(act.size() == 2);
  CHECK(ina[0].y == 5);
  CHECK(act[0].y == 4);
  CHECK(ina[1].y == 3);
  CHECK(act[1].y == 2);
  CHECK(ina[0].length() == 1);
  CHECK(act[0].length() == 8);
  CHECK(ina[1].length() == 8);
  CHECK(act[1].length() == 2);
  CHECK(solution_cost(Objective::length, act) == solution_cost(Objective::length, ina) + 1);

  std::vector<Rect> even{stack[0], stack[1]};
  CHECK_THROWS_AS(gadget_segments(even), Error);
  std::vector<Rect> gap{stack[0], stack[1], rect("0", "2", "1", "2", 2)};
  CHECK_THROWS_AS(gadget_segments(gap), Error);
}

TEST_CASE("compiled gadgets satisfy the checker") {
  auto single = compile_np_instance(build_visibility(graph(2, {{0, 1}})));
  CHECK(check_np_instance(single).empty());
  CHECK(single.vertices.size() == 2);
  CHECK(single.edges.size() == 1);
  CHECK(single.inst.rects.size() == 2 * 5 + 1);
  CHECK(single.overlap == 5);

  for (const auto& [name, g] : fixed_graphs()) {
    CAPTURE(name);
    auto np = compile_np_instance(build_visibility(g));
    CHECK(check_np_instance(np).empty());
    auto deg = g.degrees();
    for (const auto& vg : np.vertices) {
      CHECK(vg.rect_ids.size() == static_cast<std::size_t>(2 * deg[vg.vertex] + 3));
      CHECK(vg.len_act == vg.len_ina + 1);
      CHECK(vg.s_act.size() == vg.s_ina.size());
      StabInstance part;
      for (int id : vg.rect_ids) part.rects.push_back(np.inst.rects[id]);
      for (auto group : {vg.s_act, vg.s_ina}) {
        Solution sol;
        sol.segments = group;
        sol.cost = solution_cost(Objective::length, group);
        sol.assignment = assign_rects(part.rects, group);
        CHECK(verify_solution(part, sol).feasible);
      }
    }
  }

  auto np = compile_np_instance(build_visibility(graph(3, {{0, 1}, {1, 2}})));
  np.c += 1;
  CHECK_FALSE(check_np_instance(np).empty());
}

TEST_CASE("gadget optimum equals c plus the minimum vertex cover") {
  auto fixed = fixed_graphs();
  fixed.push_back({"K3", graph(3, {{0, 1}, {1, 2}, {0, 2}})});
  fixed.push_back({"edgeless", graph(3, {})});
  for (const auto& [name, g] : fixed) {
    CAPTURE(name);
    auto np = compile_np_instance(build_visibility(g));
    auto cover = min_cover(g);
    CHECK(static_cast<int>(cover.size()) == oracle::vertex_cover_size(g.n, g.edges));
    auto sol = np_solution_from_cover(np, cover);
    CHECK(verify_solution(np.inst, sol).feasible);
    CHECK(sol.cost == np.k_star(static_cast<int>(cover.size())));
    CHECK(exact_stab(np.inst) == np.c + static_cast<int>(cover.size()));
  }
  auto np = compile_np_instance(build_visibility(graph(3, {{0, 1}, {1, 2}})));
  std::vector<int> none{0};
  CHECK_THROWS_AS(np_solution_from_cover(np, none), Error);
}

TEST_CASE("gen_spsc structure") {
  auto s = gen_spsc(2, 1);
  CHECK(s.n == 3);
  CHECK(s.sets.size() == 10);
  CHECK(s.universe_size() == 11);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto t = gen_spsc(2 + 2 * static_cast<int>(seed % 4), seed);
    std::vector<int> count(t.universe_size(), 0);
    for (const auto& set : t.sets) {
      for (int e : set) ++count[e];
    }
    for (int c : count) CHECK(c == 2);
    for (const auto& tri : t.triples) CHECK((tri[0] < tri[1] && tri[1] < tri[2]));
  }
  CHECK_THROWS_AS(gen_spsc(3, 0), Error);
  CHECK_THROWS_AS(gen_spsc(0, 0), Error);
}

TEST_CASE("spsc_to_stabbing encodings") {
  for (int m : {2, 4}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      auto s = gen_spsc(m, seed);
      auto card = spsc_to_stabbing(s, SpscMode::cardinality);
      auto constr = spsc_to_stabbing(s, SpscMode::constrained);
      REQUIRE(card.fixed_candidates->size() == static_cast<std::size_t>(5 * m));
      for (std::size_t j = 0; j < s.sets.size(); ++j) {
        std::set<int> got;
        for (const auto& r : card.rects) {
          if (stabs((*card.fixed_candidates)[j], r)) got.insert(r.id);
        }
        CHECK(got == std::set<int>(s.sets[j].begin(), s.sets[j].end()));
      }
      const Rational delta = rational(1, 10L * m);
      for (const auto& seg : *constr.fixed_candidates) CHECK((seg.length() == 1 || seg.length() == 1 + delta));

      Rational spsc_opt = *oracle::set_cover_optimum(spsc_cover(s));
      CHECK(exact_stab(card) == spsc_opt);
      Rational constr_opt = exact_stab(constr);
      CHECK(constr_opt >= spsc_opt);
      CHECK(constr_opt <= 2 * spsc_opt);
    }
  }
  auto s2 = spsc_to_stabbing(gen_spsc(2, 0), SpscMode::constrained);
  std::set<Rational> lengths;
  for (const auto& seg : *s2.fixed_candidates) lengths.insert(seg.length());
  CHECK(lengths == std::set<Rational>{Rational(1), q("21/20")});
}
