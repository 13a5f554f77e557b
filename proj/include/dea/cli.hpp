// Command-line front end: analyze / validate / frontier over a CSV panel.

#ifndef DEA_CLI_HPP
#define DEA_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dea/report.hpp"

namespace dea::cli {

enum class Subcommand { Analyze, Validate, Frontier };
enum class Model { Ccr, Bcc, Both };

struct CliConfig {
  Subcommand subcommand = Subcommand::Analyze;
  std::string csv_path;
  std::string schema_path;        // empty: classify by input:/output: prefixes
  Model model = Model::Both;      // analyze only; ccr/bcc skip half the solves
  std::optional<double> tolerance;  // rescales every solver tolerance
  ReportFormat format = ReportFormat::Table;
  // column -> transform text ("log", "scale:<c>", "identity")
  std::vector<std::pair<std::string, std::string>> transform_overrides;
  unsigned max_workers = 0;       // 0: DEA_MAX_WORKERS env or hardware
};

inline constexpr int kExitOk = 0;          // success
inline constexpr int kExitValidation = 1;  // validation errors (report printed)
inline constexpr int kExitUsage = 2;       // usage or input errors

// Runs one subcommand. The requested artifact goes to `out`; every warning
// and diagnostic goes to `err`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

// argv entry point: parses flags into a CliConfig and calls run.
int run_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace dea::cli

#endif  // DEA_CLI_HPP
