// CCR/BCC efficiency analysis: program builders, per-DMU classification,
// returns to scale and the scale-efficiency decomposition.

#ifndef DEA_DEA_HPP
#define DEA_DEA_HPP

#include <optional>
#include <string>
#include <vector>

#include "dea/lp.hpp"
#include "dea/panel.hpp"

namespace dea {

enum class Variant { CCR, BCC };

// Returns to scale at a BCC-efficient activity.
enum class Rts { CRS, IRS, DRS };

std::string to_string(Variant variant);
std::string to_string(Rts rts);

// Which sign branch of the returns-to-scale program to solve; must match the
// sign of u0 from the first multiplier solve.
enum class RtsBranch { NonpositiveU0, NonnegativeU0 };

struct EnvelopmentResult {
  double theta_star = 0.0;            // radial input contraction, in (0, 1]
  std::vector<double> lambda;         // intensity weights, one per DMU
  Variant variant = Variant::CCR;
};

struct SlackResult {
  std::vector<double> s_minus;        // input excess at the projection
  std::vector<double> s_plus;         // output shortfall at the projection
  std::vector<double> lambda;         // max-slack intensities
  double total_slack = 0.0;
};

struct MultiplierResult {
  std::vector<double> v;              // input weights
  std::vector<double> u;              // output weights
  std::optional<double> u0;           // present for BCC only
  double objective = 0.0;
};

struct DmuSolve {
  EnvelopmentResult envelopment;
  SlackResult slack;
  bool efficient = false;             // theta* = 1 and zero total slack
  bool weakly_efficient = false;      // theta* = 1 but positive slack
};

// One row of the final report. Scores are clamped to (0, 1].
struct DmuReport {
  std::string name;
  double theta_ccr = 0.0;             // technical efficiency (TE)
  double theta_bcc = 0.0;             // pure technical efficiency (PTE)
  double scale_efficiency = 0.0;      // TE / PTE
  bool ccr_efficient = false;
  bool bcc_efficient = false;
  bool weakly_efficient_ccr = false;
  bool weakly_efficient_bcc = false;
  std::optional<Rts> rts;             // set iff bcc_efficient
  std::vector<std::string> reference_set_ccr;
  std::vector<std::string> reference_set_bcc;

  bool operator==(const DmuReport&) const = default;
};

struct FrontierPartition {
  std::vector<std::string> efficient;
  std::vector<std::string> weakly_efficient;
  std::vector<std::string> enveloped;

  bool operator==(const FrontierPartition&) const = default;
};

// --- program builders ------------------------------------------------------
// Variable layouts (relied on by callers when reading primal vectors):
//   envelopment:  [theta (free), lambda_0 .. lambda_{n-1}]
//   slack phase:  [lambda (n), s_minus (m), s_plus (s)]
//   multiplier:   [v (m), u (s)] and, for BCC, u0 (free) appended
//   rts program:  [v (m), u (s), u0 (free)] with an explicit u0 sign row

lp::LinearProgram build_envelopment(const Panel& panel, std::size_t o,
                                    Variant variant);

lp::LinearProgram build_slack_phase(const Panel& panel, std::size_t o,
                                    double theta_star, Variant variant,
                                    const lp::Tolerances& tol = {});

lp::LinearProgram build_multiplier(const Panel& panel, std::size_t o,
                                   Variant variant);

lp::LinearProgram build_rts_program(const Panel& panel, std::size_t o,
                                    RtsBranch branch);

// --- solves ----------------------------------------------------------------

// Radial solve plus max-slack phase; decides strong/weak efficiency.
DmuSolve solve_dmu(const Panel& panel, std::size_t o, Variant variant,
                   const lp::Tolerances& tol = {});

MultiplierResult solve_multiplier(const Panel& panel, std::size_t o,
                                  Variant variant,
                                  const lp::Tolerances& tol = {});

// Peers with positive intensity in the max-slack solution, in panel order.
std::vector<std::string> reference_set(const SlackResult& slack,
                                       const std::vector<std::string>& names,
                                       const lp::Tolerances& tol = {});

// Two-step returns-to-scale classification. The DMU must be BCC-efficient;
// calling this on any other DMU is a contract violation (InputError).
Rts classify_rts(const Panel& panel, std::size_t o,
                 const lp::Tolerances& tol = {});

// TE / PTE, clamped to (0, 1]. Throws InputError when pte <= 0 or when
// te exceeds pte by more than the unit-score tolerance.
double scale_efficiency(double te, double pte, const lp::Tolerances& tol = {});

// Full per-DMU classification; one report per DMU in panel order.
// `workers` > 1 fans the independent per-DMU solves across threads; the
// result is identical to the sequential one.
std::vector<DmuReport> analyze(const Panel& panel,
                               const lp::Tolerances& tol = {},
                               unsigned workers = 1);

// Partition of a two-dimensional panel (one input and two outputs, or two
// inputs and one output) into frontier classes under the CCR model.
FrontierPartition frontier2d(const Panel& panel, const lp::Tolerances& tol = {});

}  // namespace dea

#endif  // DEA_DEA_HPP
