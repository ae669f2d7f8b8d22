#pragma once

#include "segstab/set_cover.hpp"

#include <span>
#include <vector>

namespace segstab {

/// Optimal solution of min c.z s.t. every element is covered with mass >= 1,
/// z >= 0, by exact rational dual simplex (Bland's rule). The floating-point
/// solver supplies a starting basis when it is exactly dual feasible.
FractionalSolution lp_solve(const SetCoverInstance& sc);

struct FloatLp {
  bool converged = false;
  double objective = 0;
  std::vector<double> z;
  std::vector<double> duals;
  std::vector<int> basis;  // variable indices; set j is j, surplus of element i is |sets| + i
};

/// Floating-point dual simplex with relative tolerance 1e-9. Costs are
/// normalized to max 1 internally. `max_pivots == 0` picks a size-based cap.
FloatLp lp_solve_float(const SetCoverInstance& sc, std::size_t max_pivots = 0);

/// A lower bound on the LP optimum derived from arbitrary dual values:
/// negatives are clamped to 0 and the vector is scaled down until every set
/// constraint holds, so the bound is valid whatever the quality of `duals`.
Rational certified_lower_bound(const SetCoverInstance& sc, std::span<const double> duals);

/// Exact check that z covers every element with mass >= 1 and z >= 0.
bool is_fractional_cover(const SetCoverInstance& sc, std::span<const Rational> z);

}  // namespace segstab
