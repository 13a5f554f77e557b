#include "dea/dea.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "dea/errors.hpp"

namespace dea {

namespace {

using lp::Constraint;
using lp::LinearProgram;
using lp::LpSolution;
using lp::LpStatus;
using lp::Relation;
using lp::Sense;
using lp::Tolerances;
using lp::VarBound;

void check_index(const Panel& panel, std::size_t o) {
  if (o >= panel.num_dmus()) {
    throw InputError("DMU index " + std::to_string(o) + " out of range (n=" +
                     std::to_string(panel.num_dmus()) + ")");
  }
}

// Solves and insists on an optimum; DEA programs built here are feasible and
// bounded by construction, so anything else is a numerical failure.
LpSolution solve_expect_optimal(const LinearProgram& program,
                                const Tolerances& tol, const std::string& what,
                                const std::string& dmu) {
  LpSolution sol;
  try {
    sol = lp::solve(program, tol);
  } catch (const NumericalError& e) {
    throw NumericalError("DMU '" + dmu + "': " + what + ": " + e.what());
  }
  if (!sol.optimal()) {
    throw NumericalError("DMU '" + dmu + "': " + what + " came back " +
                         lp::to_string(sol.status));
  }
  return sol;
}

double clamp_score(double theta) { return std::min(theta, 1.0); }

Rts classify_rts_unchecked(const Panel& panel, std::size_t o,
                           const Tolerances& tol) {
  const MultiplierResult first = solve_multiplier(panel, o, Variant::BCC, tol);
  const double u0 = first.u0.value();
  if (std::abs(u0) <= tol.strict_positivity) return Rts::CRS;

  const RtsBranch branch =
      u0 < 0 ? RtsBranch::NonpositiveU0 : RtsBranch::NonnegativeU0;
  const LinearProgram program = build_rts_program(panel, o, branch);
  const LpSolution sol =
      solve_expect_optimal(program, tol, "returns-to-scale program",
                           panel.name(o));
  // objective is u0 itself (maximized toward 0 from below, or minimized
  // toward 0 from above)
  if (std::abs(sol.objective_value) <= tol.strict_positivity) return Rts::CRS;
  return branch == RtsBranch::NonpositiveU0 ? Rts::IRS : Rts::DRS;
}

DmuReport analyze_one(const Panel& panel, std::size_t o, const Tolerances& tol) {
  const DmuSolve ccr = solve_dmu(panel, o, Variant::CCR, tol);
  const DmuSolve bcc = solve_dmu(panel, o, Variant::BCC, tol);

  DmuReport report;
  report.name = panel.name(o);
  report.theta_ccr = clamp_score(ccr.envelopment.theta_star);
  report.theta_bcc = clamp_score(bcc.envelopment.theta_star);
  report.scale_efficiency = scale_efficiency(report.theta_ccr, report.theta_bcc, tol);
  report.ccr_efficient = ccr.efficient;
  report.bcc_efficient = bcc.efficient;
  report.weakly_efficient_ccr = ccr.weakly_efficient;
  report.weakly_efficient_bcc = bcc.weakly_efficient;
  report.reference_set_ccr = reference_set(ccr.slack, panel.names(), tol);
  report.reference_set_bcc = reference_set(bcc.slack, panel.names(), tol);
  if (bcc.efficient) report.rts = classify_rts_unchecked(panel, o, tol);
  return report;
}

}  // namespace

std::string to_string(Variant variant) {
  return variant == Variant::CCR ? "CCR" : "BCC";
}

std::string to_string(Rts rts) {
  switch (rts) {
    case Rts::CRS: return "CRS";
    case Rts::IRS: return "IRS";
    case Rts::DRS: return "DRS";
  }
  return "?";
}

LinearProgram build_envelopment(const Panel& panel, std::size_t o,
                                Variant variant) {
  check_index(panel, o);
  const std::size_t n = panel.num_dmus();
  const std::size_t m = panel.num_inputs();
  const std::size_t s = panel.num_outputs();

  LinearProgram program;
  program.sense = Sense::Minimize;
  program.objective.assign(1 + n, 0.0);
  program.objective[0] = 1.0;
  program.bounds.assign(1 + n, VarBound::NonNegative);
  program.bounds[0] = VarBound::Free;

  for (std::size_t i = 0; i < m; ++i) {
    Constraint con;
    con.coeffs.assign(1 + n, 0.0);
    con.coeffs[0] = panel.input(i, o);
    for (std::size_t j = 0; j < n; ++j) con.coeffs[1 + j] = -panel.input(i, j);
    con.rel = Relation::GreaterEqual;
    con.rhs = 0.0;
    program.constraints.push_back(std::move(con));
  }
  for (std::size_t r = 0; r < s; ++r) {
    Constraint con;
    con.coeffs.assign(1 + n, 0.0);
    for (std::size_t j = 0; j < n; ++j) con.coeffs[1 + j] = panel.output(r, j);
    con.rel = Relation::GreaterEqual;
    con.rhs = panel.output(r, o);
    program.constraints.push_back(std::move(con));
  }
  if (variant == Variant::BCC) {
    Constraint con;
    con.coeffs.assign(1 + n, 0.0);
    for (std::size_t j = 0; j < n; ++j) con.coeffs[1 + j] = 1.0;
    con.rel = Relation::Equal;
    con.rhs = 1.0;
    program.constraints.push_back(std::move(con));
  }
  return program;
}

LinearProgram build_slack_phase(const Panel& panel, std::size_t o,
                                double theta_star, Variant variant,
                                const Tolerances& tol) {
  check_index(panel, o);
  if (!(theta_star > 0.0) || theta_star > 1.0 + tol.unit_score) {
    throw InputError("theta_star " + std::to_string(theta_star) +
                     " outside (0, 1]");
  }
  const std::size_t n = panel.num_dmus();
  const std::size_t m = panel.num_inputs();
  const std::size_t s = panel.num_outputs();

  LinearProgram program;
  program.sense = Sense::Maximize;
  program.objective.assign(n + m + s, 0.0);
  for (std::size_t k = n; k < n + m + s; ++k) program.objective[k] = 1.0;

  for (std::size_t i = 0; i < m; ++i) {
    Constraint con;  // X lambda + s_minus = theta* x_o
    con.coeffs.assign(n + m + s, 0.0);
    for (std::size_t j = 0; j < n; ++j) con.coeffs[j] = panel.input(i, j);
    con.coeffs[n + i] = 1.0;
    con.rel = Relation::Equal;
    con.rhs = theta_star * panel.input(i, o);
    program.constraints.push_back(std::move(con));
  }
  for (std::size_t r = 0; r < s; ++r) {
    Constraint con;  // Y lambda - s_plus = y_o
    con.coeffs.assign(n + m + s, 0.0);
    for (std::size_t j = 0; j < n; ++j) con.coeffs[j] = panel.output(r, j);
    con.coeffs[n + m + r] = -1.0;
    con.rel = Relation::Equal;
    con.rhs = panel.output(r, o);
    program.constraints.push_back(std::move(con));
  }
  if (variant == Variant::BCC) {
    Constraint con;
    con.coeffs.assign(n + m + s, 0.0);
    for (std::size_t j = 0; j < n; ++j) con.coeffs[j] = 1.0;
    con.rel = Relation::Equal;
    con.rhs = 1.0;
    program.constraints.push_back(std::move(con));
  }
  return program;
}

LinearProgram build_multiplier(const Panel& panel, std::size_t o,
                               Variant variant) {
  check_index(panel, o);
  const std::size_t n = panel.num_dmus();
  const std::size_t m = panel.num_inputs();
  const std::size_t s = panel.num_outputs();
  const bool bcc = variant == Variant::BCC;
  const std::size_t vars = m + s + (bcc ? 1 : 0);

  LinearProgram program;
  program.sense = Sense::Maximize;
  program.objective.assign(vars, 0.0);
  for (std::size_t r = 0; r < s; ++r) program.objective[m + r] = panel.output(r, o);
  program.bounds.assign(vars, VarBound::NonNegative);
  if (bcc) {
    program.objective[m + s] = -1.0;
    program.bounds[m + s] = VarBound::Free;
  }

  Constraint norm;  // v . x_o = 1
  norm.coeffs.assign(vars, 0.0);
  for (std::size_t i = 0; i < m; ++i) norm.coeffs[i] = panel.input(i, o);
  norm.rel = Relation::Equal;
  norm.rhs = 1.0;
  program.constraints.push_back(std::move(norm));

  for (std::size_t j = 0; j < n; ++j) {
    Constraint con;  // -v . x_j + u . y_j (- u0) <= 0
    con.coeffs.assign(vars, 0.0);
    for (std::size_t i = 0; i < m; ++i) con.coeffs[i] = -panel.input(i, j);
    for (std::size_t r = 0; r < s; ++r) con.coeffs[m + r] = panel.output(r, j);
    if (bcc) con.coeffs[m + s] = -1.0;
    con.rel = Relation::LessEqual;
    con.rhs = 0.0;
    program.constraints.push_back(std::move(con));
  }
  return program;
}

LinearProgram build_rts_program(const Panel& panel, std::size_t o,
                                RtsBranch branch) {
  check_index(panel, o);
  const std::size_t n = panel.num_dmus();
  const std::size_t m = panel.num_inputs();
  const std::size_t s = panel.num_outputs();
  const std::size_t vars = m + s + 1;
  const std::size_t u0 = m + s;

  LinearProgram program;
  program.sense =
      branch == RtsBranch::NonpositiveU0 ? Sense::Maximize : Sense::Minimize;
  program.objective.assign(vars, 0.0);
  program.objective[u0] = 1.0;
  program.bounds.assign(vars, VarBound::NonNegative);
  program.bounds[u0] = VarBound::Free;

  Constraint norm;  // v . x_o = 1
  norm.coeffs.assign(vars, 0.0);
  for (std::size_t i = 0; i < m; ++i) norm.coeffs[i] = panel.input(i, o);
  norm.rel = Relation::Equal;
  norm.rhs = 1.0;
  program.constraints.push_back(std::move(norm));

  Constraint eff;  // u . y_o - u0 = 1 pins the DMU to the efficient face
  eff.coeffs.assign(vars, 0.0);
  for (std::size_t r = 0; r < s; ++r) eff.coeffs[m + r] = panel.output(r, o);
  eff.coeffs[u0] = -1.0;
  eff.rel = Relation::Equal;
  eff.rhs = 1.0;
  program.constraints.push_back(std::move(eff));

  for (std::size_t j = 0; j < n; ++j) {
    Constraint con;
    con.coeffs.assign(vars, 0.0);
    for (std::size_t i = 0; i < m; ++i) con.coeffs[i] = -panel.input(i, j);
    for (std::size_t r = 0; r < s; ++r) con.coeffs[m + r] = panel.output(r, j);
    con.coeffs[u0] = -1.0;
    con.rel = Relation::LessEqual;
    con.rhs = 0.0;
    program.constraints.push_back(std::move(con));
  }

  Constraint sign;
  sign.coeffs.assign(vars, 0.0);
  sign.coeffs[u0] = 1.0;
  sign.rel = branch == RtsBranch::NonpositiveU0 ? Relation::LessEqual
                                                : Relation::GreaterEqual;
  sign.rhs = 0.0;
  program.constraints.push_back(std::move(sign));
  return program;
}

DmuSolve solve_dmu(const Panel& panel, std::size_t o, Variant variant,
                   const Tolerances& tol) {
  check_index(panel, o);
  panel.check_semipositive();
  const std::string& dmu = panel.name(o);
  const std::size_t n = panel.num_dmus();
  const std::size_t m = panel.num_inputs();
  const std::size_t s = panel.num_outputs();

  const LpSolution radial = solve_expect_optimal(
      build_envelopment(panel, o, variant), tol, "envelopment program", dmu);
  if (!(radial.objective_value > 0.0)) {
    throw NumericalError("DMU '" + dmu + "': nonpositive radial score " +
                         std::to_string(radial.objective_value));
  }

  DmuSolve result;
  result.envelopment.variant = variant;
  result.envelopment.theta_star = clamp_score(radial.objective_value);
  result.envelopment.lambda.assign(radial.primal.begin() + 1, radial.primal.end());

  const LpSolution slack = solve_expect_optimal(
      build_slack_phase(panel, o, result.envelopment.theta_star, variant, tol),
      tol, "max-slack program", dmu);
  result.slack.lambda.assign(slack.primal.begin(), slack.primal.begin() + n);
  result.slack.s_minus.resize(m);
  result.slack.s_plus.resize(s);
  for (std::size_t i = 0; i < m; ++i) {
    result.slack.s_minus[i] = std::max(0.0, slack.primal[n + i]);
  }
  for (std::size_t r = 0; r < s; ++r) {
    result.slack.s_plus[r] = std::max(0.0, slack.primal[n + m + r]);
  }
  result.slack.total_slack = std::max(0.0, slack.objective_value);

  const bool unit = result.envelopment.theta_star >= 1.0 - tol.unit_score;
  result.efficient = unit && result.slack.total_slack <= tol.slack_zero;
  result.weakly_efficient = unit && result.slack.total_slack > tol.slack_zero;
  return result;
}

MultiplierResult solve_multiplier(const Panel& panel, std::size_t o,
                                  Variant variant, const Tolerances& tol) {
  check_index(panel, o);
  panel.check_semipositive();
  const std::size_t m = panel.num_inputs();
  const std::size_t s = panel.num_outputs();
  const LpSolution sol = solve_expect_optimal(
      build_multiplier(panel, o, variant), tol, "multiplier program",
      panel.name(o));

  MultiplierResult result;
  result.v.assign(sol.primal.begin(), sol.primal.begin() + m);
  result.u.assign(sol.primal.begin() + m, sol.primal.begin() + m + s);
  if (variant == Variant::BCC) result.u0 = sol.primal[m + s];
  result.objective = sol.objective_value;
  return result;
}

std::vector<std::string> reference_set(const SlackResult& slack,
                                       const std::vector<std::string>& names,
                                       const Tolerances& tol) {
  if (slack.lambda.size() != names.size()) {
    throw InputError("lambda length does not match the name list");
  }
  std::vector<std::string> peers;
  for (std::size_t j = 0; j < names.size(); ++j) {
    if (slack.lambda[j] > tol.strict_positivity) peers.push_back(names[j]);
  }
  return peers;
}

Rts classify_rts(const Panel& panel, std::size_t o, const Tolerances& tol) {
  check_index(panel, o);
  const DmuSolve bcc = solve_dmu(panel, o, Variant::BCC, tol);
  if (!bcc.efficient) {
    throw InputError("DMU '" + panel.name(o) +
                     "' is not BCC-efficient; returns to scale are undefined");
  }
  return classify_rts_unchecked(panel, o, tol);
}

double scale_efficiency(double te, double pte, const Tolerances& tol) {
  if (!(pte > 0.0)) throw InputError("pte must be positive");
  if (!(te > 0.0)) throw InputError("te must be positive");
  if (te > pte + tol.unit_score) {
    throw InputError("te " + std::to_string(te) + " exceeds pte " +
                     std::to_string(pte));
  }
  return std::min(te / pte, 1.0);
}

std::vector<DmuReport> analyze(const Panel& panel, const Tolerances& tol,
                               unsigned workers) {
  panel.check_semipositive();
  const std::size_t n = panel.num_dmus();
  std::vector<DmuReport> reports(n);

  const unsigned used =
      std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  if (used == 1) {
    for (std::size_t o = 0; o < n; ++o) reports[o] = analyze_one(panel, o, tol);
    return reports;
  }

  std::vector<std::exception_ptr> failures(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    while (true) {
      const std::size_t o = next.fetch_add(1);
      if (o >= n) return;
      try {
        reports[o] = analyze_one(panel, o, tol);
      } catch (...) {
        failures[o] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(used);
  for (unsigned t = 0; t < used; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  std::string joined;
  for (std::size_t o = 0; o < n; ++o) {
    if (!failures[o]) continue;
    try {
      std::rethrow_exception(failures[o]);
    } catch (const std::exception& e) {
      if (!joined.empty()) joined += "; ";
      joined += e.what();
    }
  }
  if (!joined.empty()) throw NumericalError(joined);
  return reports;
}

FrontierPartition frontier2d(const Panel& panel, const Tolerances& tol) {
  const std::size_t m = panel.num_inputs();
  const std::size_t s = panel.num_outputs();
  if (!((m == 1 && s == 2) || (m == 2 && s == 1))) {
    throw InputError("frontier2d supports 1 input x 2 outputs or "
                     "2 inputs x 1 output, got m=" +
                     std::to_string(m) + " s=" + std::to_string(s));
  }
  panel.check_semipositive();

  FrontierPartition part;
  for (std::size_t o = 0; o < panel.num_dmus(); ++o) {
    const DmuSolve sol = solve_dmu(panel, o, Variant::CCR, tol);
    if (sol.efficient) {
      part.efficient.push_back(panel.name(o));
    } else if (sol.weakly_efficient) {
      part.weakly_efficient.push_back(panel.name(o));
    } else {
      part.enveloped.push_back(panel.name(o));
    }
  }
  return part;
}

}  // namespace dea
