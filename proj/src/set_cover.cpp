#include "segstab/set_cover.hpp"

#include "segstab/candidates.hpp"

#include <algorithm>

namespace segstab {

void SetCoverInstance::validate() const {
  std::vector<char> hit(universe.size(), 0);
  for (const auto& s : sets) {
    if (s.cost <= 0) throw Error("set " + std::to_string(s.id) + " has non-positive cost");
    for (int e : s.members) {
      if (e < 0 || e >= static_cast<int>(universe.size())) {
        throw Error("set " + std::to_string(s.id) + " references element out of range");
      }
      hit[e] = 1;
    }
  }
  for (std::size_t e = 0; e < universe.size(); ++e) {
    if (!hit[e]) throw Error("element " + std::to_string(universe[e]) + " is covered by no set");
  }
}

std::vector<std::vector<int>> SetCoverInstance::covering_sets() const {
  std::vector<std::vector<int>> by_elem(universe.size());
  for (std::size_t j = 0; j < sets.size(); ++j) {
    for (int e : sets[j].members) by_elem[e].push_back(static_cast<int>(j));
  }
  return by_elem;
}

SetCoverInstance to_set_cover(const StabInstance& inst, std::span<const Segment> cands) {
  SetCoverInstance sc;
  for (const auto& r : inst.rects) sc.universe.push_back(r.id);
  auto bits = stab_sets(cands, inst.rects);
  std::vector<char> hit(inst.rects.size(), 0);
  for (std::size_t j = 0; j < cands.size(); ++j) {
    CoverSet set{cands[j].id, {}, inst.objective == Objective::cardinality ? Rational(1) : cands[j].length()};
    for (auto i = bits[j].find_first(); i != boost::dynamic_bitset<>::npos; i = bits[j].find_next(i)) {
      set.members.push_back(static_cast<int>(i));
      hit[i] = 1;
    }
    sc.sets.push_back(std::move(set));
  }
  for (std::size_t i = 0; i < inst.rects.size(); ++i) {
    if (!hit[i]) throw Error("rect " + std::to_string(inst.rects[i].id) + " is stabbed by no candidate");
  }
  return sc;
}

bool covers(const SetCoverInstance& sc, std::span<const int> chosen) {
  std::vector<char> hit(sc.universe.size(), 0);
  for (int j : chosen) {
    for (int e : sc.sets[j].members) hit[e] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

Rational cover_cost(const SetCoverInstance& sc, std::span<const int> chosen) {
  Rational total = 0;
  for (int j : chosen) total += sc.sets[j].cost;
  return total;
}

SetCoverInstance restrict_instance(const SetCoverInstance& sc, std::span<const int> elements,
                                   std::span<const int> sets, std::vector<int>& set_map) {
  std::vector<int> position(sc.universe.size(), -1);
  SetCoverInstance sub;
  for (int e : elements) {
    position[e] = static_cast<int>(sub.universe.size());
    sub.universe.push_back(sc.universe[e]);
  }
  set_map.clear();
  for (int j : sets) {
    CoverSet restricted{sc.sets[j].id, {}, sc.sets[j].cost};
    for (int e : sc.sets[j].members) {
      if (position[e] >= 0) restricted.members.push_back(position[e]);
    }
    if (restricted.members.empty()) continue;
    std::sort(restricted.members.begin(), restricted.members.end());
    sub.sets.push_back(std::move(restricted));
    set_map.push_back(j);
  }
  return sub;
}

Solution cover_to_solution(const StabInstance& inst, std::span<const Segment> cands,
                           const CoverResult& result) {
  Solution sol;
  for (int j : result.chosen) sol.segments.push_back(cands[j]);
  sol.cost = solution_cost(inst.objective, sol.segments);
  sol.assignment = assign_rects(inst.rects, sol.segments);
  return sol;
}

}  // namespace segstab
