#include "segstab/geometry.hpp"

#include <algorithm>
#include <set>

namespace segstab {

bool same_geometry(const Segment& a, const Segment& b) {
  return a.orientation == b.orientation && a.x_left == b.x_left && a.x_right == b.x_right &&
         a.y == b.y;
}

void StabInstance::validate() const {
  std::set<int> ids;
  for (const auto& r : rects) {
    if (!(r.x_left < r.x_right) || !(r.y_bottom < r.y_top)) {
      throw Error("rect " + std::to_string(r.id) + " has non-positive area");
    }
    if (r.multiplicity < 1) {
      throw Error("rect " + std::to_string(r.id) + " has multiplicity < 1");
    }
    if (!ids.insert(r.id).second) throw Error("duplicate rect id " + std::to_string(r.id));
  }
  if (!fixed_candidates) return;

  std::set<int> cand_ids;
  for (const auto& s : *fixed_candidates) {
    if (s.x_left > s.x_right) throw Error("candidate " + std::to_string(s.id) + " has x_left > x_right");
    if (s.orientation == Orientation::vertical && !hv) {
      throw Error("vertical candidate " + std::to_string(s.id) + " outside HV mode");
    }
    if (!cand_ids.insert(s.id).second) throw Error("duplicate candidate id " + std::to_string(s.id));
  }
  for (const auto& r : rects) {
    bool covered = std::any_of(fixed_candidates->begin(), fixed_candidates->end(),
                               [&](const Segment& s) { return stabs(s, r); });
    if (!covered) throw Error("rect " + std::to_string(r.id) + " is stabbed by no fixed candidate");
  }
}

Rect transpose(const Rect& r) {
  return Rect{r.y_bottom, r.y_top, r.x_left, r.x_right, r.id, r.multiplicity};
}

Segment transpose(const Segment& s) {
  Segment t = s;
  t.orientation = s.orientation == Orientation::horizontal ? Orientation::vertical
                                                           : Orientation::horizontal;
  return t;
}

std::vector<Rect> transpose(std::span<const Rect> rects) {
  std::vector<Rect> out;
  out.reserve(rects.size());
  for (const auto& r : rects) out.push_back(transpose(r));
  return out;
}

bool stabs(const Segment& s, const Rect& r) {
  if (s.orientation == Orientation::vertical) return stabs(transpose(s), transpose(r));
  return s.x_left <= r.x_left && r.x_right <= s.x_right && r.y_bottom <= s.y && s.y <= r.y_top;
}

Rational solution_cost(Objective objective, std::span<const Segment> segments) {
  if (objective == Objective::cardinality) return Rational(static_cast<long>(segments.size()));
  Rational total = 0;
  for (const auto& s : segments) total += s.length();
  return total;
}

VerifyReport verify_solution(const StabInstance& inst, const Solution& sol) {
  VerifyReport report;
  for (const auto& r : inst.rects) {
    bool hit = std::any_of(sol.segments.begin(), sol.segments.end(), [&](const Segment& s) {
      return (inst.hv || s.orientation == Orientation::horizontal) && stabs(s, r);
    });
    if (!hit) report.uncovered.push_back(r.id);
  }
  for (const auto& s : sol.segments) {
    bool ok = s.x_left <= s.x_right && (inst.hv || s.orientation == Orientation::horizontal);
    if (ok && inst.fixed_candidates) {
      ok = std::any_of(inst.fixed_candidates->begin(), inst.fixed_candidates->end(),
                       [&](const Segment& f) { return same_geometry(f, s); });
    }
    if (!ok) report.invalid_segments.push_back(s.id);
  }
  std::map<int, const Segment*> by_id;
  for (const auto& s : sol.segments) by_id.emplace(s.id, &s);
  std::map<int, const Rect*> rect_by_id;
  for (const auto& r : inst.rects) rect_by_id.emplace(r.id, &r);
  for (const auto& [rid, sid] : sol.assignment) {
    auto rit = rect_by_id.find(rid);
    auto sit = by_id.find(sid);
    if (rit == rect_by_id.end() || sit == by_id.end() || !stabs(*sit->second, *rit->second)) {
      report.bad_assignment.push_back(rid);
    }
  }
  report.recomputed_cost = solution_cost(inst.objective, sol.segments);
  report.cost_matches = report.recomputed_cost == sol.cost;
  report.feasible = report.uncovered.empty() && report.invalid_segments.empty();
  return report;
}

namespace {

// Canonical form of a horizontal segment relative to `rects`; nullopt when it
// stabs nothing.
std::optional<Segment> tighten(const Segment& s, std::span<const Rect> rects) {
  std::optional<Segment> out;
  for (const auto& r : rects) {
    if (!stabs(s, r)) continue;
    if (!out) {
      out = Segment{r.x_left, r.x_right, r.y_top, Orientation::horizontal, s.id};
      continue;
    }
    if (r.x_left < out->x_left) out->x_left = r.x_left;
    if (r.x_right > out->x_right) out->x_right = r.x_right;
    if (r.y_top < out->y) out->y = r.y_top;
  }
  return out;
}

}  // namespace

Solution canonicalize_solution(const StabInstance& inst, const Solution& sol) {
  if (inst.constrained()) throw Error("canonical form is undefined for constrained instances");
  std::vector<Rect> transposed;
  if (inst.hv) transposed = transpose(inst.rects);

  Solution out;
  for (const auto& s : sol.segments) {
    std::optional<Segment> t;
    if (s.orientation == Orientation::horizontal) {
      t = tighten(s, inst.rects);
    } else if (inst.hv) {
      if (auto h = tighten(transpose(s), transposed)) t = transpose(*h);
    }
    if (!t) continue;
    bool duplicate = std::any_of(out.segments.begin(), out.segments.end(),
                                 [&](const Segment& o) { return same_geometry(o, *t); });
    if (!duplicate) out.segments.push_back(*t);
  }
  out.cost = solution_cost(inst.objective, out.segments);
  out.assignment = assign_rects(inst.rects, out.segments);
  return out;
}

std::map<int, int> assign_rects(std::span<const Rect> rects, std::span<const Segment> segments) {
  std::map<int, int> assignment;
  for (const auto& r : rects) {
    for (const auto& s : segments) {
      if (stabs(s, r)) {
        assignment[r.id] = s.id;
        break;
      }
    }
  }
  return assignment;
}

}  // namespace segstab
