// Self-contained dense linear-programming solver (two-phase primal simplex).

#ifndef DEA_LP_HPP
#define DEA_LP_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace dea::lp {

enum class Sense { Maximize, Minimize };

enum class Relation { LessEqual, Equal, GreaterEqual };

// Per-variable lower bound: either x >= 0 or x free.
enum class VarBound { NonNegative, Free };

enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string to_string(LpStatus status);

struct Constraint {
  std::vector<double> coeffs;
  Relation rel = Relation::LessEqual;
  double rhs = 0.0;
};

// Numerical thresholds used throughout the library. All must be > 0.
//   feasibility        constraint satisfaction (A·x vs b)
//   optimality         reduced-cost test at the simplex exit
//   unit_score         deciding theta* == 1
//   slack_zero         deciding total slack == 0
//   strict_positivity  deciding lambda_j > 0 / u0 != 0
struct Tolerances {
  double feasibility = 1e-8;
  double optimality = 1e-9;
  double unit_score = 1e-6;
  double slack_zero = 1e-6;
  double strict_positivity = 1e-9;

  // Rescales every threshold by unit_score_value / default unit_score.
  // Used by the CLI's single --tolerance knob.
  Tolerances scaled_to(double unit_score_value) const;
};

struct LinearProgram {
  Sense sense = Sense::Minimize;
  std::vector<double> objective;
  std::vector<Constraint> constraints;
  // One entry per variable; empty means all NonNegative.
  std::vector<VarBound> bounds;

  std::size_t num_vars() const { return objective.size(); }
  VarBound bound(std::size_t j) const {
    return bounds.empty() ? VarBound::NonNegative : bounds[j];
  }
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double objective_value = 0.0;       // meaningful iff Optimal
  std::vector<double> primal;         // meaningful iff Optimal

  bool optimal() const { return status == LpStatus::Optimal; }
};

// Solves the program with a two-phase primal simplex. Dantzig pricing with a
// switch to Bland's rule after a stall, so degenerate programs terminate.
// Deterministic: identical inputs produce identical outputs.
//
// Throws InputError on malformed dimensions or non-finite data and
// NumericalError when the iteration cap (50 * (vars + constraints)) is hit
// or the final feasibility recheck fails.
LpSolution solve(const LinearProgram& lp, const Tolerances& tol = {});

}  // namespace dea::lp

#endif  // DEA_LP_HPP
