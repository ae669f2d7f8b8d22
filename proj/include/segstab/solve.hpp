#pragma once

#include "segstab/approx.hpp"
#include "segstab/set_cover.hpp"

#include <optional>
#include <string_view>

namespace segstab {

enum class Algo { exact, greedy, greedy_width, lp, approx };

/// Throws Error for unknown names.
Algo parse_algo(std::string_view name);
std::string_view algo_name(Algo algo);

/// The family a solver works on: the fixed candidates of a constrained
/// instance, otherwise the pruned (or tight, for greedy) candidates, with
/// their vertical counterparts appended in HV mode.
std::vector<Segment> solver_family(const StabInstance& inst, bool tight = false);

struct SolveReport {
  Algo algo = Algo::exact;
  std::optional<Solution> solution;  // absent for the LP
  Rational cost;                      // solution cost, or the LP optimum
  Rational lp_bound;                  // LP optimum over solver_family(inst)
  CoverStatus status = CoverStatus::heuristic;
  std::uint64_t nodes = 0;
  FractionalSolution lp;              // filled for Algo::lp
  double ms = 0;
};

/// Runs one algorithm end to end. `params` only matters for approx, which
/// requires an unconstrained instance.
SolveReport solve(const StabInstance& inst, Algo algo, const RoundingParams& params = {},
                  std::uint64_t budget = node_budget_from_env());

}  // namespace segstab
