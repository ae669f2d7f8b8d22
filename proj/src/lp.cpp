#include "segstab/lp.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace segstab {

namespace {

constexpr double kTol = 1e-9;

bool is_negative(const Rational& v) { return sgn(v) < 0; }
bool is_negative(double v) { return v < -kTol; }

// Variables 0..N-1 are the sets, N..N+R-1 the surplus of each element:
// A z - s = 1, z, s >= 0. Starting from the all-surplus basis (B = -I) the
// reduced costs equal the set costs, so the start is dual feasible and only
// dual simplex pivots are needed.
template <class Scalar>
class DualSimplex {
 public:
  DualSimplex(const SetCoverInstance& sc, std::vector<Scalar> cost)
      : sc_(sc), rows_(static_cast<int>(sc.universe.size())), cols_(static_cast<int>(sc.sets.size())),
        cost_(std::move(cost)) {}

  void start_from_surplus() {
    basis_.resize(rows_);
    binv_.assign(rows_, std::vector<Scalar>(rows_, Scalar(0)));
    x_.assign(rows_, Scalar(-1));
    for (int i = 0; i < rows_; ++i) {
      basis_[i] = cols_ + i;
      binv_[i][i] = Scalar(-1);
    }
    d_.assign(cols_ + rows_, Scalar(0));
    for (int j = 0; j < cols_; ++j) d_[j] = cost_[j];
    index_basis();
  }

  // False when `basis` is singular or not dual feasible.
  bool start_from(const std::vector<int>& basis) {
    if (static_cast<int>(basis.size()) != rows_) return false;
    basis_ = basis;
    std::vector<std::vector<Scalar>> b(rows_, std::vector<Scalar>(rows_, Scalar(0)));
    for (int r = 0; r < rows_; ++r) {
      int v = basis_[r];
      if (v < cols_) {
        for (int e : sc_.sets[v].members) b[e][r] = Scalar(1);
      } else {
        b[v - cols_][r] = Scalar(-1);
      }
    }
    if (!invert(b)) return false;
    x_.assign(rows_, Scalar(0));
    for (int r = 0; r < rows_; ++r) {
      for (int i = 0; i < rows_; ++i) x_[r] += binv_[r][i];
    }
    auto y = duals();
    d_.assign(cols_ + rows_, Scalar(0));
    for (int j = 0; j < cols_; ++j) {
      Scalar sum(0);
      for (int e : sc_.sets[j].members) sum += y[e];
      d_[j] = cost_[j] - sum;
    }
    for (int i = 0; i < rows_; ++i) d_[cols_ + i] = y[i];
    index_basis();
    for (int v : basis_) d_[v] = Scalar(0);
    return std::none_of(d_.begin(), d_.end(), [](const Scalar& v) { return is_negative(v); });
  }

  // Runs to optimality or until `max_pivots`; true when optimal.
  bool run(bool bland, std::size_t max_pivots) {
    std::vector<Scalar> row(cols_ + rows_), col(rows_);
    for (std::size_t pivots = 0; max_pivots == 0 || pivots < max_pivots; ++pivots) {
      int r = leaving_row(bland);
      if (r < 0) return true;

      int entering = -1;
      Scalar best_num(0), best_den(1);
      for (int k = 0; k < cols_ + rows_; ++k) {
        if (pos_[k] >= 0) continue;
        row[k] = row_entry(r, k);
        if (!is_negative(row[k])) continue;
        // ratio d_k / -row_k compared by cross-multiplication
        Scalar num = d_[k], den = -row[k];
        if (entering < 0 || num * best_den < best_num * den) {
          entering = k;
          best_num = num;
          best_den = den;
        }
      }
      if (entering < 0) throw Error("set cover LP is infeasible");

      for (int i = 0; i < rows_; ++i) col[i] = column_entry(i, entering);
      pivot(r, entering, row, col);
    }
    return false;
  }

  std::vector<Scalar> primal() const {
    std::vector<Scalar> z(cols_, Scalar(0));
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] < cols_) z[basis_[r]] = x_[r];
    }
    return z;
  }

  std::vector<Scalar> duals() const {
    std::vector<Scalar> y(rows_, Scalar(0));
    for (int r = 0; r < rows_; ++r) {
      int v = basis_[r];
      if (v >= cols_) continue;
      for (int i = 0; i < rows_; ++i) y[i] += cost_[v] * binv_[r][i];
    }
    return y;
  }

  const std::vector<int>& basis() const { return basis_; }

 private:
  void index_basis() {
    pos_.assign(cols_ + rows_, -1);
    for (int r = 0; r < rows_; ++r) pos_[basis_[r]] = r;
  }

  int leaving_row(bool bland) const {
    int best = -1;
    for (int r = 0; r < rows_; ++r) {
      if (!is_negative(x_[r])) continue;
      if (best < 0) {
        best = r;
      } else if (bland ? basis_[r] < basis_[best] : x_[r] < x_[best]) {
        best = r;
      }
    }
    return best;
  }

  Scalar row_entry(int r, int k) const {
    if (k >= cols_) return -binv_[r][k - cols_];
    Scalar sum(0);
    for (int e : sc_.sets[k].members) sum += binv_[r][e];
    return sum;
  }

  Scalar column_entry(int i, int k) const { return row_entry(i, k); }

  void pivot(int r, int q, const std::vector<Scalar>& row, const std::vector<Scalar>& col) {
    const Scalar alpha = col[r];
    const Scalar dual_step = d_[q] / alpha;
    for (int k = 0; k < cols_ + rows_; ++k) {
      if (pos_[k] < 0 && k != q) d_[k] -= dual_step * row[k];
    }
    int leaving = basis_[r];
    d_[leaving] = -dual_step;
    d_[q] = Scalar(0);

    const Scalar primal_step = x_[r] / alpha;
    for (int i = 0; i < rows_; ++i) {
      if (i != r) x_[i] -= primal_step * col[i];
    }
    x_[r] = primal_step;

    for (auto& v : binv_[r]) v /= alpha;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || col[i] == Scalar(0)) continue;
      const Scalar f = col[i];
      for (int t = 0; t < rows_; ++t) binv_[i][t] -= f * binv_[r][t];
    }

    basis_[r] = q;
    pos_[leaving] = -1;
    pos_[q] = r;
  }

  // Gauss-Jordan with partial pivoting by magnitude (exact for rationals).
  bool invert(std::vector<std::vector<Scalar>>& a) {
    binv_.assign(rows_, std::vector<Scalar>(rows_, Scalar(0)));
    for (int i = 0; i < rows_; ++i) binv_[i][i] = Scalar(1);
    for (int c = 0; c < rows_; ++c) {
      int p = -1;
      for (int i = c; i < rows_; ++i) {
        if (a[i][c] != Scalar(0) && (p < 0 || abs_of(a[i][c]) > abs_of(a[p][c]))) p = i;
      }
      if (p < 0) return false;
      std::swap(a[p], a[c]);
      std::swap(binv_[p], binv_[c]);
      const Scalar inv = Scalar(1) / a[c][c];
      for (auto& v : a[c]) v *= inv;
      for (auto& v : binv_[c]) v *= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == c || a[i][c] == Scalar(0)) continue;
        const Scalar f = a[i][c];
        for (int t = 0; t < rows_; ++t) {
          a[i][t] -= f * a[c][t];
          binv_[i][t] -= f * binv_[c][t];
        }
      }
    }
    return true;
  }

  static Scalar abs_of(const Scalar& v) { return v < Scalar(0) ? Scalar(-v) : v; }

  const SetCoverInstance& sc_;
  int rows_, cols_;
  std::vector<Scalar> cost_;
  std::vector<int> basis_;
  std::vector<int> pos_;
  std::vector<std::vector<Scalar>> binv_;
  std::vector<Scalar> x_;
  std::vector<Scalar> d_;
};

}  // namespace

FloatLp lp_solve_float(const SetCoverInstance& sc, std::size_t max_pivots) {
  FloatLp out;
  if (sc.universe.empty()) {
    out.converged = true;
    out.z.assign(sc.sets.size(), 0.0);
    return out;
  }
  double scale = 0;
  for (const auto& s : sc.sets) scale = std::max(scale, s.cost.get_d());
  std::vector<double> cost;
  for (const auto& s : sc.sets) cost.push_back(s.cost.get_d() / scale);
  if (max_pivots == 0) max_pivots = 50 * (sc.sets.size() + sc.universe.size()) + 1000;

  DualSimplex<double> lp(sc, cost);
  lp.start_from_surplus();
  out.converged = lp.run(false, max_pivots);
  out.z = lp.primal();
  out.duals = lp.duals();
  for (auto& y : out.duals) y *= scale;
  for (std::size_t j = 0; j < sc.sets.size(); ++j) out.objective += sc.sets[j].cost.get_d() * out.z[j];
  out.basis = lp.basis();
  return out;
}

FractionalSolution lp_solve(const SetCoverInstance& sc) {
  sc.validate();
  FractionalSolution out;
  if (sc.universe.empty()) {
    out.z.assign(sc.sets.size(), Rational(0));
    return out;
  }
  std::vector<Rational> cost;
  for (const auto& s : sc.sets) cost.push_back(s.cost);

  DualSimplex<Rational> lp(sc, cost);
  auto warm = lp_solve_float(sc);
  if (!warm.converged || !lp.start_from(warm.basis)) lp.start_from_surplus();
  if (!lp.run(true, 0)) throw Error("exact LP did not terminate");

  out.z = lp.primal();
  out.duals = lp.duals();
  out.objective = 0;
  for (std::size_t j = 0; j < sc.sets.size(); ++j) out.objective += sc.sets[j].cost * out.z[j];
  return out;
}

Rational certified_lower_bound(const SetCoverInstance& sc, std::span<const double> duals) {
  // Round to a coarse dyadic grid so the exact sums stay cheap.
  const mpz_class grid = mpz_class(1) << 30;
  std::vector<Rational> y(sc.universe.size());
  Rational total = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    double v = i < duals.size() ? duals[i] : 0.0;
    if (!(v > 0) || !std::isfinite(v)) continue;
    mpz_class scaled(std::floor(std::ldexp(v, 30)));
    y[i] = Rational(scaled, grid);
    y[i].canonicalize();
    total += y[i];
  }
  Rational theta = 1;
  for (const auto& s : sc.sets) {
    Rational load = 0;
    for (int e : s.members) load += y[e];
    Rational ratio = load / s.cost;
    if (ratio > theta) theta = ratio;
  }
  return total / theta;
}

bool is_fractional_cover(const SetCoverInstance& sc, std::span<const Rational> z) {
  if (z.size() != sc.sets.size()) return false;
  std::vector<Rational> mass(sc.universe.size(), Rational(0));
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (sgn(z[j]) < 0) return false;
    for (int e : sc.sets[j].members) mass[e] += z[j];
  }
  return std::all_of(mass.begin(), mass.end(), [](const Rational& m) { return m >= 1; });
}

}  // namespace segstab
