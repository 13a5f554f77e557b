// Two-phase primal simplex on a dense tableau.
//
// Standardization: free variables are split into differences of two
// nonnegative variables, rows are sign-normalized so b >= 0, <= rows get a
// slack, >= rows get a surplus plus an artificial, = rows get an artificial.
// Phase 1 minimizes the artificial sum from the slack/artificial basis;
// phase 2 minimizes the (sign-adjusted) objective. Pricing is Dantzig's rule
// until the objective stalls, then Bland's rule, which cannot cycle.

#include "dea/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dea/errors.hpp"

namespace dea::lp {

namespace {

constexpr double kPivotEps = 1e-9;   // minimum pivot magnitude
constexpr double kRatioTieEps = 1e-9;
constexpr int kStallLimit = 30;      // non-improving pivots before Bland

struct Tableau {
  std::size_t rows = 0;
  std::size_t cols = 0;  // variable columns; rhs lives at index cols
  std::vector<double> data;

  Tableau(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * (c + 1), 0.0) {}

  double& at(std::size_t i, std::size_t j) { return data[i * (cols + 1) + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * (cols + 1) + j]; }
  double& rhs(std::size_t i) { return at(i, cols); }
  double rhs(std::size_t i) const { return at(i, cols); }

  void drop_row(std::size_t i) {
    data.erase(data.begin() + static_cast<std::ptrdiff_t>(i * (cols + 1)),
               data.begin() + static_cast<std::ptrdiff_t>((i + 1) * (cols + 1)));
    --rows;
  }
};

void validate_input(const LinearProgram& lp, const Tolerances& tol) {
  if (tol.feasibility <= 0 || tol.optimality <= 0 || tol.unit_score <= 0 ||
      tol.slack_zero <= 0 || tol.strict_positivity <= 0) {
    throw InputError("tolerances must all be strictly positive");
  }
  const std::size_t n = lp.num_vars();
  if (!lp.bounds.empty() && lp.bounds.size() != n) {
    throw InputError("bounds size does not match variable count");
  }
  for (double c : lp.objective) {
    if (!std::isfinite(c)) throw InputError("objective coefficient is not finite");
  }
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const Constraint& con = lp.constraints[i];
    if (con.coeffs.size() != n) {
      throw InputError("constraint " + std::to_string(i) +
                       " has coefficient row of wrong length");
    }
    if (!std::isfinite(con.rhs)) {
      throw InputError("constraint " + std::to_string(i) + " has non-finite rhs");
    }
    for (double a : con.coeffs) {
      if (!std::isfinite(a)) {
        throw InputError("constraint " + std::to_string(i) +
                         " has non-finite coefficient");
      }
    }
  }
}

class SimplexSolver {
 public:
  SimplexSolver(const LinearProgram& lp, const Tolerances& tol)
      : lp_(lp), tol_(tol), tableau_(0, 0) {}

  LpSolution run() {
    standardize();
    iter_limit_ = std::max<std::size_t>(
        100, 50 * (lp_.num_vars() + lp_.constraints.size()));

    if (first_artificial_ < tableau_.cols) {
      if (!phase_one()) return LpSolution{LpStatus::Infeasible, 0.0, {}};
    }
    if (!phase_two()) return LpSolution{LpStatus::Unbounded, 0.0, {}};

    LpSolution sol = extract();
    certify(sol);
    return sol;
  }

 private:
  // --- standardized problem ---------------------------------------------
  const LinearProgram& lp_;
  Tolerances tol_;
  Tableau tableau_;
  std::vector<double> cost_;       // phase-2 costs over standardized columns
  std::vector<int> basis_;         // basis_[row] = column index
  std::vector<int> pos_col_;       // original var -> standardized column
  std::vector<int> neg_col_;       // original var -> negative half (-1 if none)
  std::size_t first_artificial_ = 0;
  double rhs_scale_ = 1.0;         // max(1, |b|_inf), for threshold scaling
  std::size_t iter_limit_ = 0;
  std::size_t iters_ = 0;

  void standardize() {
    const std::size_t n = lp_.num_vars();
    const std::size_t m = lp_.constraints.size();
    const bool maximize = lp_.sense == Sense::Maximize;

    pos_col_.assign(n, -1);
    neg_col_.assign(n, -1);
    std::size_t cols = 0;
    for (std::size_t j = 0; j < n; ++j) {
      pos_col_[j] = static_cast<int>(cols++);
      if (lp_.bound(j) == VarBound::Free) neg_col_[j] = static_cast<int>(cols++);
    }
    const std::size_t structural = cols;

    // Sign-normalize rows so every rhs is >= 0.
    std::vector<double> row_sign(m, 1.0);
    std::vector<Relation> rel(m);
    for (std::size_t i = 0; i < m; ++i) {
      rel[i] = lp_.constraints[i].rel;
      if (lp_.constraints[i].rhs < 0) {
        row_sign[i] = -1.0;
        if (rel[i] == Relation::LessEqual) rel[i] = Relation::GreaterEqual;
        else if (rel[i] == Relation::GreaterEqual) rel[i] = Relation::LessEqual;
      }
      rhs_scale_ = std::max(rhs_scale_, std::abs(lp_.constraints[i].rhs));
    }

    std::vector<int> slack_col(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
      if (rel[i] != Relation::Equal) slack_col[i] = static_cast<int>(cols++);
    }
    first_artificial_ = cols;
    std::vector<int> art_col(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
      if (rel[i] != Relation::LessEqual) art_col[i] = static_cast<int>(cols++);
    }

    tableau_ = Tableau(m, cols);
    basis_.assign(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
      const Constraint& con = lp_.constraints[i];
      for (std::size_t j = 0; j < n; ++j) {
        const double a = row_sign[i] * con.coeffs[j];
        tableau_.at(i, static_cast<std::size_t>(pos_col_[j])) = a;
        if (neg_col_[j] >= 0) tableau_.at(i, static_cast<std::size_t>(neg_col_[j])) = -a;
      }
      tableau_.rhs(i) = row_sign[i] * con.rhs;
      if (slack_col[i] >= 0) {
        tableau_.at(i, static_cast<std::size_t>(slack_col[i])) =
            rel[i] == Relation::LessEqual ? 1.0 : -1.0;
      }
      if (art_col[i] >= 0) {
        tableau_.at(i, static_cast<std::size_t>(art_col[i])) = 1.0;
        basis_[i] = art_col[i];
      } else {
        basis_[i] = slack_col[i];
      }
    }

    cost_.assign(cols, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double c = maximize ? -lp_.objective[j] : lp_.objective[j];
      cost_[static_cast<std::size_t>(pos_col_[j])] = c;
      if (neg_col_[j] >= 0) cost_[static_cast<std::size_t>(neg_col_[j])] = -c;
    }
    (void)structural;
  }

  // Performs one pivot, updating the tableau and the working cost row.
  void pivot(std::size_t prow, std::size_t pcol, std::vector<double>& reduced) {
    const std::size_t w = tableau_.cols;
    const double piv = tableau_.at(prow, pcol);
    for (std::size_t j = 0; j <= w; ++j) tableau_.at(prow, j) /= piv;
    tableau_.at(prow, pcol) = 1.0;
    for (std::size_t i = 0; i < tableau_.rows; ++i) {
      if (i == prow) continue;
      const double f = tableau_.at(i, pcol);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= w; ++j) {
        tableau_.at(i, j) -= f * tableau_.at(prow, j);
      }
      tableau_.at(i, pcol) = 0.0;
    }
    const double rf = reduced[pcol];
    if (rf != 0.0) {
      for (std::size_t j = 0; j < w; ++j) reduced[j] -= rf * tableau_.at(prow, j);
      reduced[pcol] = 0.0;
    }
    basis_[prow] = static_cast<int>(pcol);
  }

  // Core loop shared by both phases. `allowed_cols` limits entering columns
  // (phase 1 bars artificials from re-entering). Returns false on
  // unboundedness, true at the reduced-cost optimum.
  bool iterate(std::vector<double>& reduced, double& objective,
               std::size_t max_col) {
    bool bland = false;
    int stall = 0;
    while (true) {
      if (++iters_ > iter_limit_) {
        throw NumericalError("simplex iteration limit exceeded (" +
                             std::to_string(iter_limit_) + ")");
      }
      // entering column
      std::ptrdiff_t enter = -1;
      if (bland) {
        for (std::size_t j = 0; j < max_col; ++j) {
          if (reduced[j] < -tol_.optimality) {
            enter = static_cast<std::ptrdiff_t>(j);
            break;
          }
        }
      } else {
        double best = -tol_.optimality;
        for (std::size_t j = 0; j < max_col; ++j) {
          if (reduced[j] < best) {
            best = reduced[j];
            enter = static_cast<std::ptrdiff_t>(j);
          }
        }
      }
      if (enter < 0) return true;
      const auto pcol = static_cast<std::size_t>(enter);

      // ratio test; ties broken by smallest basic-variable index, which
      // together with the Bland entering rule prevents cycling
      std::ptrdiff_t leave = -1;
      double best_t = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < tableau_.rows; ++i) {
        const double a = tableau_.at(i, pcol);
        if (a <= kPivotEps) continue;
        const double t = std::max(0.0, tableau_.rhs(i)) / a;
        if (leave < 0) {
          best_t = t;
          leave = static_cast<std::ptrdiff_t>(i);
          continue;
        }
        const double tie = kRatioTieEps * std::max(1.0, best_t);
        if (t < best_t - tie) {
          best_t = t;
          leave = static_cast<std::ptrdiff_t>(i);
        } else if (t <= best_t + tie &&
                   basis_[i] < basis_[static_cast<std::size_t>(leave)]) {
          best_t = std::min(best_t, t);
          leave = static_cast<std::ptrdiff_t>(i);
        }
      }
      if (leave < 0) return false;

      const double before = objective;
      objective += reduced[pcol] * best_t;
      pivot(static_cast<std::size_t>(leave), pcol, reduced);

      if (!bland) {
        if (before - objective <= tol_.optimality * std::max(1.0, std::abs(before))) {
          if (++stall >= kStallLimit) bland = true;
        } else {
          stall = 0;
        }
      }
    }
  }

  bool phase_one() {
    const std::size_t w = tableau_.cols;
    std::vector<double> reduced(w, 0.0);
    for (std::size_t j = first_artificial_; j < w; ++j) reduced[j] = 1.0;
    double z = 0.0;
    for (std::size_t i = 0; i < tableau_.rows; ++i) {
      if (basis_[i] < static_cast<int>(first_artificial_)) continue;
      for (std::size_t j = 0; j < w; ++j) reduced[j] -= tableau_.at(i, j);
      z += tableau_.rhs(i);
    }

    if (!iterate(reduced, z, first_artificial_)) {
      // The artificial sum is bounded below by zero; reaching here means
      // numerical breakdown rather than a real ray.
      throw NumericalError("phase 1 reported an unbounded direction");
    }
    if (z > tol_.feasibility * rhs_scale_) return false;

    // Drive any leftover artificial out of the basis; rows where that is
    // impossible are redundant and get dropped.
    for (std::size_t i = tableau_.rows; i-- > 0;) {
      if (basis_[i] < static_cast<int>(first_artificial_)) continue;
      std::ptrdiff_t pcol = -1;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (std::abs(tableau_.at(i, j)) > kPivotEps) {
          pcol = static_cast<std::ptrdiff_t>(j);
          break;
        }
      }
      if (pcol >= 0) {
        pivot(i, static_cast<std::size_t>(pcol), reduced);
      } else {
        tableau_.drop_row(i);
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    return true;
  }

  bool phase_two() {
    const std::size_t w = tableau_.cols;
    std::vector<double> reduced = cost_;
    reduced.resize(w, 0.0);
    double z = 0.0;
    for (std::size_t i = 0; i < tableau_.rows; ++i) {
      const auto b = static_cast<std::size_t>(basis_[i]);
      const double cb = b < cost_.size() ? cost_[b] : 0.0;
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j < w; ++j) reduced[j] -= cb * tableau_.at(i, j);
      z += cb * tableau_.rhs(i);
    }
    return iterate(reduced, z, first_artificial_);
  }

  LpSolution extract() const {
    const std::size_t n = lp_.num_vars();
    std::vector<double> std_values(tableau_.cols, 0.0);
    for (std::size_t i = 0; i < tableau_.rows; ++i) {
      std_values[static_cast<std::size_t>(basis_[i])] = tableau_.rhs(i);
    }
    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.primal.resize(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      double v = std_values[static_cast<std::size_t>(pos_col_[j])];
      if (neg_col_[j] >= 0) v -= std_values[static_cast<std::size_t>(neg_col_[j])];
      sol.primal[j] = v;
      sol.objective_value += lp_.objective[j] * v;
    }
    return sol;
  }

  void certify(const LpSolution& sol) const {
    for (std::size_t j = 0; j < lp_.num_vars(); ++j) {
      if (lp_.bound(j) == VarBound::NonNegative &&
          sol.primal[j] < -tol_.feasibility * rhs_scale_) {
        throw NumericalError("optimal point violates a variable bound");
      }
    }
    for (std::size_t i = 0; i < lp_.constraints.size(); ++i) {
      const Constraint& con = lp_.constraints[i];
      double lhs = 0.0;
      for (std::size_t j = 0; j < con.coeffs.size(); ++j) {
        lhs += con.coeffs[j] * sol.primal[j];
      }
      const double viol = lhs - con.rhs;
      const double eps = tol_.feasibility * std::max(rhs_scale_, std::abs(lhs));
      const bool ok = con.rel == Relation::LessEqual  ? viol <= eps
                      : con.rel == Relation::Equal    ? std::abs(viol) <= eps
                                                      : viol >= -eps;
      if (!ok) {
        throw NumericalError("optimal point violates constraint " +
                             std::to_string(i) + " by " + std::to_string(viol));
      }
    }
  }
};

}  // namespace

Tolerances Tolerances::scaled_to(double unit_score_value) const {
  if (!(unit_score_value > 0) || !std::isfinite(unit_score_value)) {
    throw InputError("tolerance override must be a positive finite number");
  }
  const double f = unit_score_value / Tolerances{}.unit_score;
  Tolerances t;
  t.feasibility = feasibility * f;
  t.optimality = optimality * f;
  t.unit_score = unit_score_value;
  t.slack_zero = slack_zero * f;
  t.strict_positivity = strict_positivity * f;
  return t;
}

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "unknown";
}

LpSolution solve(const LinearProgram& lp, const Tolerances& tol) {
  validate_input(lp, tol);
  SimplexSolver solver(lp, tol);
  return solver.run();
}

}  // namespace dea::lp
