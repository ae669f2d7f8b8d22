#include "segstab/cover.hpp"

#include "segstab/lp.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <sstream>

namespace segstab {

std::uint64_t node_budget_from_env() {
  if (const char* env = std::getenv("SEGSTAB_NODE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultNodeBudget;
}

std::vector<Rational> greedy_weights(std::span<const Rect> rects, GreedyMode mode) {
  std::vector<Rational> w;
  w.reserve(rects.size());
  for (const auto& r : rects) {
    Rational m(r.multiplicity);
    w.push_back(mode == GreedyMode::count ? m : Rational(m * r.width()));
  }
  return w;
}

CoverResult greedy_cover(const SetCoverInstance& sc, std::span<const Rational> weights) {
  sc.validate();
  const std::size_t n = sc.universe.size();
  std::vector<Rational> w(n, Rational(1));
  if (!weights.empty()) {
    if (weights.size() != n) throw Error("greedy weights do not match the universe");
    std::copy(weights.begin(), weights.end(), w.begin());
  }
  std::vector<char> covered(n, 0);
  auto gain = [&](int j) {
    Rational g = 0;
    for (int e : sc.sets[j].members) {
      if (!covered[e]) g += w[e];
    }
    return g;
  };

  // Lazy evaluation: gains only shrink, so a stale key is a lower bound on
  // the current efficiency.
  struct Entry {
    Rational eff;
    int set;
  };
  auto worse = [](const Entry& a, const Entry& b) {
    int c = cmp(a.eff, b.eff);
    return c != 0 ? c > 0 : a.set > b.set;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
  for (int j = 0; j < static_cast<int>(sc.sets.size()); ++j) {
    Rational g = gain(j);
    if (g > 0) heap.push({sc.sets[j].cost / g, j});
  }

  CoverResult out;
  std::size_t left = n;
  while (left > 0 && !heap.empty()) {
    Entry top = heap.top();
    heap.pop();
    Rational g = gain(top.set);
    if (g == 0) continue;
    Entry fresh{sc.sets[top.set].cost / g, top.set};
    if (!heap.empty() && worse(fresh, heap.top())) {
      heap.push(std::move(fresh));
      continue;
    }
    out.chosen.push_back(top.set);
    for (int e : sc.sets[top.set].members) {
      if (!covered[e]) {
        covered[e] = 1;
        --left;
      }
    }
  }
  if (left > 0) throw Error("greedy cover failed to cover the universe");
  out.cost = cover_cost(sc, out.chosen);
  out.status = CoverStatus::heuristic;
  std::sort(out.chosen.begin(), out.chosen.end());
  return out;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const SetCoverInstance& sc, std::uint64_t budget)
      : sc_(sc), budget_(budget), by_elem_(sc.covering_sets()), covered_(sc.universe.size(), 0),
        forbidden_(sc.sets.size(), 0) {
    mpz_class l = 1;
    for (const auto& s : sc.sets) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.cost.get_den_mpz_t());
    grid_ = l;
  }

  CoverResult solve() {
    best_ = greedy_cover(sc_);
    best_.status = CoverStatus::heuristic;
    search(Rational(0));
    best_.nodes = nodes_;
    best_.status = exhausted_ ? CoverStatus::unproven : CoverStatus::optimal;
    std::sort(best_.chosen.begin(), best_.chosen.end());
    return best_;
  }

 private:
  // True when no completion of the current node can beat the incumbent.
  bool prunable(const Rational& cost, const std::vector<int>& open) {
    std::vector<int> allowed;
    for (int j = 0; j < static_cast<int>(sc_.sets.size()); ++j) {
      if (!forbidden_[j]) allowed.push_back(j);
    }
    std::vector<int> map;
    auto sub = restrict_instance(sc_, open, allowed, map);
    auto lp = lp_solve_float(sub);
    Rational bound = certified_lower_bound(sub, lp.duals);
    Rational total = cost + bound;
    mpz_class scaled = total.get_num() * grid_;
    mpz_class ceiled;
    mpz_cdiv_q(ceiled.get_mpz_t(), scaled.get_mpz_t(), total.get_den_mpz_t());
    Rational best_scaled = best_.cost * grid_;
    return Rational(ceiled) >= best_scaled;
  }

  void search(const Rational& cost) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    std::vector<int> open;
    for (int e = 0; e < static_cast<int>(covered_.size()); ++e) {
      if (!covered_[e]) open.push_back(e);
    }
    if (open.empty()) {
      if (cost < best_.cost) {
        best_.cost = cost;
        best_.chosen = chosen_;
      }
      return;
    }
    if (cost >= best_.cost) return;

    int pick = -1;
    std::size_t fewest = 0;
    for (int e : open) {
      std::size_t k = 0;
      for (int j : by_elem_[e]) k += forbidden_[j] ? 0 : 1;
      if (k == 0) return;
      if (pick < 0 || k < fewest) {
        pick = e;
        fewest = k;
      }
    }
    if (prunable(cost, open)) return;

    std::vector<std::pair<Rational, int>> order;
    for (int j : by_elem_[pick]) {
      if (forbidden_[j]) continue;
      long fresh = 0;
      for (int e : sc_.sets[j].members) fresh += covered_[e] ? 0 : 1;
      order.emplace_back(sc_.sets[j].cost / fresh, j);
    }
    std::sort(order.begin(), order.end());

    std::vector<int> newly_forbidden;
    for (const auto& [eff, j] : order) {
      std::vector<int> newly;
      for (int e : sc_.sets[j].members) {
        if (!covered_[e]) {
          covered_[e] = 1;
          newly.push_back(e);
        }
      }
      chosen_.push_back(j);
      search(cost + sc_.sets[j].cost);
      chosen_.pop_back();
      for (int e : newly) covered_[e] = 0;
      forbidden_[j] = 1;
      newly_forbidden.push_back(j);
      if (exhausted_) break;
    }
    for (int j : newly_forbidden) forbidden_[j] = 0;
  }

  const SetCoverInstance& sc_;
  std::uint64_t budget_;
  std::vector<std::vector<int>> by_elem_;
  std::vector<char> covered_, forbidden_;
  std::vector<int> chosen_;
  mpz_class grid_;
  CoverResult best_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

CoverResult exact_cover(const SetCoverInstance& sc, std::uint64_t budget) {
  sc.validate();
  if (sc.universe.empty()) return CoverResult{{}, Rational(0), CoverStatus::optimal, 0};
  return BranchAndBound(sc, budget).solve();
}

namespace {

CoverResult round_side(const SetCoverInstance& sc, std::span<const int> elements, std::span<const int> sets,
                       std::span<const Rational> z, const Rational& factor, const Rounder& rounder,
                       Rational& lp_mass, const char* side) {
  CoverResult out;
  lp_mass = 0;
  for (int j : sets) lp_mass += sc.sets[j].cost * z[j];
  if (elements.empty()) {
    out.cost = 0;
    return out;
  }
  std::vector<int> map;
  auto sub = restrict_instance(sc, elements, sets, map);
  std::vector<Rational> scaled;
  for (int j : map) scaled.push_back(std::min(Rational(factor * z[j]), Rational(1)));
  if (!is_fractional_cover(sub, scaled)) {
    throw Error(std::string("scaled LP solution is infeasible on side ") + side);
  }
  auto rounded = rounder(sub, scaled);
  if (!covers(sub, rounded.chosen)) {
    std::ostringstream msg;
    msg << "rounder for side " << side << " returned a non-cover (" << rounded.chosen.size() << " sets over "
        << sub.universe.size() << " elements)";
    throw Error(msg.str());
  }
  for (int j : rounded.chosen) out.chosen.push_back(map[j]);
  std::sort(out.chosen.begin(), out.chosen.end());
  out.cost = cover_cost(sc, out.chosen);
  out.status = rounded.status;
  out.nodes = rounded.nodes;
  return out;
}

}  // namespace

Decomposition decompose_and_conquer(const SetCoverInstance& sc, std::span<const int> family,
                                    std::span<const Rational> z, const Rational& a1, const Rational& a2,
                                    const Rounder& rounder1, const Rounder& rounder2) {
  if (family.size() != sc.sets.size() || z.size() != sc.sets.size()) {
    throw Error("decomposition inputs do not match the set family");
  }
  if (sgn(a1) <= 0 || sgn(a2) <= 0) throw Error("decomposition factors must be positive");
  if (!is_fractional_cover(sc, z)) throw Error("fractional solution is infeasible");

  std::vector<int> sets1, sets2;
  for (int j = 0; j < static_cast<int>(family.size()); ++j) {
    if (family[j] == 1) {
      sets1.push_back(j);
    } else if (family[j] == 2) {
      sets2.push_back(j);
    } else {
      throw Error("family labels must be 1 or 2");
    }
  }

  const Rational threshold = a1 / (a1 + a2);
  std::vector<Rational> mass(sc.universe.size(), Rational(0));
  for (int j : sets1) {
    for (int e : sc.sets[j].members) mass[e] += z[j];
  }
  Decomposition out;
  for (int e = 0; e < static_cast<int>(mass.size()); ++e) {
    (mass[e] >= threshold ? out.part_one : out.part_two).push_back(e);
  }

  out.cover_one = round_side(sc, out.part_one, sets1, z, (a1 + a2) / a1, rounder1, out.lp_one, "F1");
  out.cover_two = round_side(sc, out.part_two, sets2, z, (a1 + a2) / a2, rounder2, out.lp_two, "F2");

  out.cover.chosen = out.cover_one.chosen;
  out.cover.chosen.insert(out.cover.chosen.end(), out.cover_two.chosen.begin(), out.cover_two.chosen.end());
  std::sort(out.cover.chosen.begin(), out.cover.chosen.end());
  out.cover.chosen.erase(std::unique(out.cover.chosen.begin(), out.cover.chosen.end()), out.cover.chosen.end());
  out.cover.cost = cover_cost(sc, out.cover.chosen);
  out.cover.status = CoverStatus::heuristic;
  if (!covers(sc, out.cover.chosen)) throw Error("merged decomposition cover is infeasible");
  return out;
}

}  // namespace segstab
