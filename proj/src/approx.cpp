#include "segstab/approx.hpp"

#include "segstab/candidates.hpp"
#include "segstab/laminar.hpp"
#include "segstab/lp.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace segstab {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive(std::uint64_t seed, std::uint64_t tag) { return splitmix(seed ^ splitmix(tag)); }

struct Splitmix {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    return splitmix(state - 0x9e3779b97f4a7c15ULL);
  }
};

bool better(const CoverResult& a, const CoverResult& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  return a.chosen < b.chosen;
}

void drop_redundant(const SetCoverInstance& sc, std::vector<int>& chosen) {
  std::vector<int> load(sc.num_elements(), 0);
  for (int j : chosen) {
    for (int e : sc.sets[j].members) ++load[e];
  }
  std::vector<int> order = chosen;
  std::sort(order.begin(), order.end(), [&](int p, int q) {
    return sc.sets[p].cost != sc.sets[q].cost ? sc.sets[p].cost > sc.sets[q].cost : p > q;
  });
  std::vector<char> keep(sc.sets.size(), 0);
  for (int j : chosen) keep[j] = 1;
  for (int j : order) {
    const auto& m = sc.sets[j].members;
    if (std::all_of(m.begin(), m.end(), [&](int e) { return load[e] >= 2; })) {
      keep[j] = 0;
      for (int e : m) --load[e];
    }
  }
  chosen.clear();
  for (int j = 0; j < static_cast<int>(keep.size()); ++j) {
    if (keep[j]) chosen.push_back(j);
  }
}

CoverResult one_round(const SetCoverInstance& sc, std::span<const Rational> z, std::span<const Rational> weights,
                      const Rational& inflation, std::uint64_t seed) {
  static const Rational kScale = pow2(53);
  Splitmix rng{seed};
  std::vector<char> picked(sc.sets.size(), 0);
  for (std::size_t j = 0; j < sc.sets.size(); ++j) {
    Rational p = inflation * z[j];
    std::uint64_t u = rng.next() >> 11;
    if (p >= 1 || Rational(static_cast<unsigned long>(u)) < p * kScale) picked[j] = 1;
  }

  std::vector<char> covered(sc.num_elements(), 0);
  std::vector<int> chosen, others;
  for (int j = 0; j < static_cast<int>(sc.sets.size()); ++j) {
    if (picked[j]) {
      chosen.push_back(j);
      for (int e : sc.sets[j].members) covered[e] = 1;
    } else {
      others.push_back(j);
    }
  }
  std::vector<int> missing;
  for (int e = 0; e < static_cast<int>(covered.size()); ++e) {
    if (!covered[e]) missing.push_back(e);
  }
  if (!missing.empty()) {
    std::vector<int> map;
    auto sub = restrict_instance(sc, missing, others, map);
    std::vector<Rational> sub_weights;
    if (!weights.empty()) {
      for (int e : missing) sub_weights.push_back(weights[e]);
    }
    for (int j : greedy_cover(sub, sub_weights).chosen) chosen.push_back(map[j]);
  }
  std::sort(chosen.begin(), chosen.end());
  drop_redundant(sc, chosen);

  CoverResult out;
  out.chosen = std::move(chosen);
  out.cost = cover_cost(sc, out.chosen);
  out.status = CoverStatus::heuristic;
  return out;
}

std::vector<Rational> weights_by_position(const StabInstance& inst, const SetCoverInstance& sc, GreedyMode mode) {
  auto per_rect = greedy_weights(inst.rects, mode);
  std::map<int, Rational> by_id;
  for (std::size_t i = 0; i < inst.rects.size(); ++i) by_id.emplace(inst.rects[i].id, per_rect[i]);
  std::vector<Rational> out;
  out.reserve(sc.universe.size());
  for (int id : sc.universe) out.push_back(by_id.at(id));
  return out;
}

// Rounder over a sub-instance whose universe holds rect ids.
Rounder leaf_rounder(const std::map<int, Rational>& weight_of, RoundingParams params) {
  return [&weight_of, params](const SetCoverInstance& sub, const std::vector<Rational>& z) {
    std::vector<Rational> w;
    w.reserve(sub.universe.size());
    for (int id : sub.universe) w.push_back(weight_of.at(id));
    return sample_and_repair(sub, z, w, params);
  };
}

RoundingParams reseeded(const RoundingParams& params, std::uint64_t tag) {
  RoundingParams out = params;
  out.seed = derive(params.seed, tag);
  return out;
}

Solution finish(const StabInstance& inst, std::span<const Segment> family, const CoverResult& cover) {
  Solution sol = cover_to_solution(inst, family, cover);
  return canonicalize_solution(inst, trim_to_assignment(inst, sol));
}

void fill_stats(ApproxResult& out, const Rational& lp_bound) {
  out.lp_bound = lp_bound;
  out.ratio = sgn(lp_bound) > 0 ? Rational(out.solution.cost / lp_bound) : Rational(1);
}

std::map<int, Rational> weight_map(const StabInstance& inst, GreedyMode mode) {
  auto w = greedy_weights(inst.rects, mode);
  std::map<int, Rational> out;
  for (std::size_t i = 0; i < inst.rects.size(); ++i) out.emplace(inst.rects[i].id, w[i]);
  return out;
}

}  // namespace

void RoundingParams::validate() const {
  if (trials < 1) throw Error("rounding needs at least one trial");
  if (inflation.empty()) throw Error("inflation schedule is empty");
  for (const auto& l : inflation) {
    if (l < 1) throw Error("inflation values must be at least 1");
  }
}

CoverResult sample_and_repair(const SetCoverInstance& sc, std::span<const Rational> z,
                              std::span<const Rational> weights, const RoundingParams& params) {
  params.validate();
  if (z.size() != sc.sets.size()) throw Error("fractional solution does not match the set family");
  if (!weights.empty() && weights.size() != sc.num_elements()) throw Error("weights do not match the universe");
  if (sc.num_elements() == 0) return CoverResult{{}, Rational(0), CoverStatus::heuristic, 0};

  const int trials = params.trials;
  std::vector<CoverResult> best(trials);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int t = next++; t < trials; t = next++) {
      std::optional<CoverResult> mine;
      for (std::size_t i = 0; i < params.inflation.size(); ++i) {
        auto seed = derive(params.seed, static_cast<std::uint64_t>(t) * 64 + i);
        auto r = one_round(sc, z, weights, params.inflation[i], seed);
        if (!mine || better(r, *mine)) mine = std::move(r);
      }
      best[t] = std::move(*mine);
    }
  };
  const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, std::min(trials, 8));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return *std::min_element(best.begin(), best.end(), better);
}

Solution trim_to_assignment(const StabInstance& inst, const Solution& sol) {
  std::vector<int> order(sol.segments.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int p, int q) {
    const auto& a = sol.segments[p];
    const auto& b = sol.segments[q];
    return a.length() != b.length() ? a.length() > b.length() : a.id < b.id;
  });

  std::vector<std::vector<const Rect*>> owned(sol.segments.size());
  for (const auto& r : inst.rects) {
    for (int i : order) {
      if (stabs(sol.segments[i], r)) {
        owned[i].push_back(&r);
        break;
      }
    }
  }

  Solution out;
  for (std::size_t i = 0; i < sol.segments.size(); ++i) {
    if (owned[i].empty()) continue;
    const Segment& s = sol.segments[i];
    Segment t = s;
    bool first = true;
    for (const Rect* r : owned[i]) {
      Rect h = s.orientation == Orientation::horizontal ? *r : transpose(*r);
      if (first || h.x_left < t.x_left) t.x_left = h.x_left;
      if (first || h.x_right > t.x_right) t.x_right = h.x_right;
      if (first || h.y_top < t.y) t.y = h.y_top;
      first = false;
    }
    out.segments.push_back(t);
  }
  out.cost = solution_cost(inst.objective, out.segments);
  out.assignment = assign_rects(inst.rects, out.segments);
  return out;
}

Solution round_laminar(const StabInstance& inst, std::span<const int> subuniverse,
                       std::span<const Segment> family, std::span<const Rational> z, const RoundingParams& params) {
  if (!is_x_laminar(family)) throw Error("round_laminar needs an x-laminar family");
  StabInstance sub;
  sub.objective = inst.objective;
  sub.hv = inst.hv;
  for (int p : subuniverse) sub.rects.push_back(inst.rects.at(p));
  auto sc = to_set_cover(sub, family);
  if (!is_fractional_cover(sc, z)) throw Error("fractional solution does not cover the subuniverse");
  auto cover = sample_and_repair(sc, z, weights_by_position(sub, sc, params.repair), params);
  return trim_to_assignment(sub, cover_to_solution(sub, family, cover));
}

ApproxResult approx_stab(const StabInstance& inst, const RoundingParams& params) {
  if (inst.constrained()) throw Error("approx_stab takes unconstrained instances");
  if (inst.hv) throw Error("approx_stab takes horizontal-only instances; use approx_hv");
  params.validate();
  ApproxResult out;
  if (inst.rects.empty()) {
    fill_stats(out, Rational(0));
    return out;
  }
  auto cands = pruned_candidates(inst.rects);
  auto dec = laminarize(inst, cands);
  auto family = dec.segments();
  std::vector<int> label;
  for (const auto& s : dec.snapped) label.push_back(s.family);

  auto sc = to_set_cover(inst, family);
  auto lp = lp_solve(sc);
  auto weight_of = weight_map(inst, params.repair);
  auto d = decompose_and_conquer(sc, label, lp.z, Rational(1), Rational(1),
                                 leaf_rounder(weight_of, reseeded(params, 1)),
                                 leaf_rounder(weight_of, reseeded(params, 2)));

  out.solution = finish(inst, family, d.cover);
  out.lp_laminar = lp.objective;
  out.candidates = cands.size();
  out.laminar_sets = family.size();
  fill_stats(out, lp_solve(to_set_cover(inst, cands)).objective);
  return out;
}

ApproxResult approx_hv(const StabInstance& inst, const RoundingParams& params) {
  if (inst.constrained()) throw Error("approx_hv takes unconstrained instances");
  params.validate();
  StabInstance hv = inst;
  hv.hv = true;
  ApproxResult out;
  if (inst.rects.empty()) {
    fill_stats(out, Rational(0));
    return out;
  }

  StabInstance flat = inst;
  flat.hv = false;
  StabInstance turned = flat;
  turned.rects = transpose(inst.rects);

  auto h_cands = pruned_candidates(flat.rects);
  auto v_cands = pruned_candidates(turned.rects);
  auto h_dec = laminarize(flat, h_cands);
  auto v_dec = laminarize(turned, v_cands);

  std::vector<Segment> family;
  std::vector<int> side, lam;
  for (const auto& s : h_dec.snapped) {
    family.push_back(s.snapped);
    side.push_back(1);
    lam.push_back(s.family);
  }
  for (const auto& s : v_dec.snapped) {
    family.push_back(transpose(s.snapped));
    side.push_back(2);
    lam.push_back(s.family);
  }
  for (std::size_t j = 0; j < family.size(); ++j) family[j].id = static_cast<int>(j);

  auto sc = to_set_cover(hv, family);
  auto lp = lp_solve(sc);
  auto weight_of = weight_map(inst, params.repair);

  // inner split of one side over its two laminar families
  auto inner = [&](std::uint64_t tag) -> Rounder {
    return [&, tag](const SetCoverInstance& sub, const std::vector<Rational>& z) {
      std::vector<int> labels;
      for (const auto& s : sub.sets) labels.push_back(lam[s.id]);
      auto p = reseeded(params, tag);
      return decompose_and_conquer(sub, labels, z, Rational(1), Rational(1),
                                   leaf_rounder(weight_of, reseeded(p, 1)), leaf_rounder(weight_of, reseeded(p, 2)))
          .cover;
    };
  };
  auto d = decompose_and_conquer(sc, side, lp.z, Rational(1), Rational(1), inner(1), inner(2));

  out.solution = finish(hv, family, d.cover);
  out.lp_laminar = lp.objective;

  std::vector<Segment> joint = h_cands;
  for (auto s : v_cands) joint.push_back(transpose(s));
  for (std::size_t j = 0; j < joint.size(); ++j) joint[j].id = static_cast<int>(j);
  out.candidates = joint.size();
  out.laminar_sets = family.size();
  fill_stats(out, lp_solve(to_set_cover(hv, joint)).objective);
  return out;
}

}  // namespace segstab
