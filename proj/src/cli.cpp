#include "dea/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "dea/dataset.hpp"
#include "dea/dea.hpp"
#include "dea/errors.hpp"

namespace dea::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string strip_direction_prefix(const std::string& name) {
  if (name.rfind("input:", 0) == 0) return name.substr(6);
  if (name.rfind("output:", 0) == 0) return name.substr(7);
  return name;
}

void apply_overrides(std::vector<ColumnSpec>& schema,
                     const std::vector<std::pair<std::string, std::string>>& overrides) {
  for (const auto& [column, text] : overrides) {
    const Transform transform = Transform::parse(text);
    ColumnSpec* exact = nullptr;
    std::vector<ColumnSpec*> stripped;
    for (auto& spec : schema) {
      if (spec.name == column) exact = &spec;
      if (strip_direction_prefix(spec.name) == column) stripped.push_back(&spec);
    }
    if (exact != nullptr) {
      exact->transform = transform;
    } else if (stripped.size() == 1) {
      stripped.front()->transform = transform;
    } else if (stripped.empty()) {
      throw InputError("--transform column '" + column + "' not in the schema");
    } else {
      throw InputError("--transform column '" + column +
                       "' is ambiguous; use the full header name");
    }
  }
}

unsigned worker_count(const CliConfig& config, std::size_t dmus) {
  unsigned workers = config.max_workers;
  if (workers == 0) {
    if (const char* env = std::getenv("DEA_MAX_WORKERS")) {
      const long parsed = std::strtol(env, nullptr, 10);
      if (parsed > 0) workers = static_cast<unsigned>(parsed);
    }
  }
  if (workers == 0) {
    workers = std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
  }
  return static_cast<unsigned>(std::min<std::size_t>(workers, dmus));
}

// Per-DMU pipeline when only one variant is requested; the joint columns
// (SE, RTS) need both models and stay suppressed.
std::vector<DmuReport> analyze_single(const Panel& panel, Variant variant,
                                      const lp::Tolerances& tol) {
  std::vector<DmuReport> reports;
  for (std::size_t o = 0; o < panel.num_dmus(); ++o) {
    const DmuSolve sol = solve_dmu(panel, o, variant, tol);
    DmuReport r;
    r.name = panel.name(o);
    const double score = std::min(sol.envelopment.theta_star, 1.0);
    const auto peers = reference_set(sol.slack, panel.names(), tol);
    if (variant == Variant::CCR) {
      r.theta_ccr = score;
      r.ccr_efficient = sol.efficient;
      r.weakly_efficient_ccr = sol.weakly_efficient;
      r.reference_set_ccr = peers;
    } else {
      r.theta_bcc = score;
      r.bcc_efficient = sol.efficient;
      r.weakly_efficient_bcc = sol.weakly_efficient;
      r.reference_set_bcc = peers;
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

int run_checked(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const std::string csv = read_file(config.csv_path);

  std::vector<ColumnSpec> schema = config.schema_path.empty()
                                       ? infer_schema(csv)
                                       : schema_from_json(read_file(config.schema_path));
  apply_overrides(schema, config.transform_overrides);

  lp::Tolerances tol;
  if (config.tolerance) tol = tol.scaled_to(*config.tolerance);

  const Panel panel = apply_transforms(parse_panel(csv, schema), schema);
  const ValidationReport validation = validate(panel);

  if (config.subcommand == Subcommand::Validate) {
    out << render_validation(validation.errors, validation.warnings, config.format).body;
    return validation.ok() ? kExitOk : kExitValidation;
  }

  for (const auto& w : validation.warnings) err << "warning: " << w << "\n";
  if (!validation.ok()) {
    for (const auto& e : validation.errors) err << "error: " << e << "\n";
    return kExitValidation;
  }

  if (config.subcommand == Subcommand::Frontier) {
    out << render_frontier(frontier2d(panel, tol), config.format).body;
    return kExitOk;
  }

  if (config.model == Model::Both) {
    const auto ranked = rank(analyze(panel, tol, worker_count(config, panel.num_dmus())));
    out << render(ranked, config.format, ReportColumns::Both).body;
  } else {
    const Variant variant = config.model == Model::Ccr ? Variant::CCR : Variant::BCC;
    const auto ranked = rank_single(analyze_single(panel, variant, tol), variant);
    out << render(ranked, config.format,
                  variant == Variant::CCR ? ReportColumns::CcrOnly
                                          : ReportColumns::BccOnly)
               .body;
  }
  return kExitOk;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return run_checked(config, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "error: solver failure: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CliConfig config;
  std::string format_text = "table";
  std::string model_text = "both";
  std::vector<std::string> transform_texts;
  double tolerance = 0.0;

  CLI::App app{"Input-oriented efficiency analysis over a CSV of DMUs"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("csv", config.csv_path, "CSV with a dmu column and metric columns")
        ->required();
    sub->add_option("--schema", config.schema_path,
                    "JSON file mapping column -> {direction, transform}");
    sub->add_option("--format", format_text, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--tolerance", tolerance,
                    "unit-score/slack tolerance; solver tolerances scale with it");
    sub->add_option("--transform", transform_texts,
                    "column=log|scale:<c>|identity (repeatable)");
    sub->add_option("--workers", config.max_workers,
                    "max parallel DMU solves (default: DEA_MAX_WORKERS or hardware)");
  };

  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "rank every DMU by efficiency scores");
  add_common(analyze_cmd);
  analyze_cmd->add_option("--model", model_text, "ccr, bcc or both")
      ->check(CLI::IsMember({"ccr", "bcc", "both"}));

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check the panel and print findings");
  add_common(validate_cmd);

  CLI::App* frontier_cmd = app.add_subcommand(
      "frontier", "partition a 2-D panel into frontier classes");
  add_common(frontier_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (analyze_cmd->parsed()) config.subcommand = Subcommand::Analyze;
  if (validate_cmd->parsed()) config.subcommand = Subcommand::Validate;
  if (frontier_cmd->parsed()) config.subcommand = Subcommand::Frontier;

  config.model = model_text == "ccr"   ? Model::Ccr
                 : model_text == "bcc" ? Model::Bcc
                                       : Model::Both;
  if (tolerance != 0.0) config.tolerance = tolerance;

  try {
    config.format = parse_format(format_text);
    for (const auto& text : transform_texts) {
      const auto eq = text.rfind('=');
      if (eq == std::string::npos || eq == 0) {
        throw InputError("--transform expects column=transform, got '" + text + "'");
      }
      config.transform_overrides.emplace_back(text.substr(0, eq), text.substr(eq + 1));
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  return run(config, out, err);
}

}  // namespace dea::cli
