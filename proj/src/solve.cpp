#include "segstab/solve.hpp"

#include "segstab/candidates.hpp"
#include "segstab/lp.hpp"

#include <chrono>

namespace segstab {

Algo parse_algo(std::string_view name) {
  if (name == "exact") return Algo::exact;
  if (name == "greedy") return Algo::greedy;
  if (name == "greedy-width") return Algo::greedy_width;
  if (name == "lp") return Algo::lp;
  if (name == "approx") return Algo::approx;
  throw Error("unknown algorithm '" + std::string(name) + "'");
}

std::string_view algo_name(Algo algo) {
  switch (algo) {
    case Algo::exact: return "exact";
    case Algo::greedy: return "greedy";
    case Algo::greedy_width: return "greedy-width";
    case Algo::lp: return "lp";
    case Algo::approx: return "approx";
  }
  return "?";
}

std::vector<Segment> solver_family(const StabInstance& inst, bool tight) {
  if (inst.constrained()) return *inst.fixed_candidates;
  auto family = [tight](std::span<const Rect> rects) {
    return tight ? tight_candidates(rects) : pruned_candidates(rects);
  };
  auto out = family(inst.rects);
  if (inst.hv) {
    auto vertical = vertical_candidates(inst.rects, family, static_cast<int>(out.size()));
    out.insert(out.end(), vertical.begin(), vertical.end());
  }
  return out;
}

SolveReport solve(const StabInstance& inst, Algo algo, const RoundingParams& params, std::uint64_t budget) {
  inst.validate();
  const auto start = std::chrono::steady_clock::now();
  SolveReport out;
  out.algo = algo;

  const auto family = solver_family(inst);
  const auto sc = to_set_cover(inst, family);
  out.lp = lp_solve(sc);
  out.lp_bound = out.lp.objective;

  switch (algo) {
    case Algo::exact: {
      auto r = exact_cover(sc, budget);
      out.solution = cover_to_solution(inst, family, r);
      out.status = r.status;
      out.nodes = r.nodes;
      break;
    }
    case Algo::greedy:
    case Algo::greedy_width: {
      auto tight = solver_family(inst, true);
      auto tsc = to_set_cover(inst, tight);
      auto weights = greedy_weights(inst.rects, algo == Algo::greedy ? GreedyMode::count : GreedyMode::width);
      out.solution = cover_to_solution(inst, tight, greedy_cover(tsc, weights));
      break;
    }
    case Algo::lp:
      out.cost = out.lp.objective;
      out.status = CoverStatus::optimal;
      break;
    case Algo::approx: {
      auto r = inst.hv ? approx_hv(inst, params) : approx_stab(inst, params);
      out.solution = r.solution;
      break;
    }
  }
  if (out.solution) out.cost = out.solution->cost;
  if (algo != Algo::lp) out.lp = {};
  out.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace segstab
