// CSV ingestion, column transforms and DEA-precondition validation.

#ifndef DEA_DATASET_HPP
#define DEA_DATASET_HPP

#include <string>
#include <string_view>
#include <vector>

#include "dea/panel.hpp"

namespace dea {

enum class Direction { Input, Output };

std::string to_string(Direction direction);

// Whole-column cell transform: identity, natural log, or multiplication by a
// positive constant.
struct Transform {
  enum class Kind { Identity, Log, Scale };
  Kind kind = Kind::Identity;
  double factor = 1.0;  // Scale only

  // Throws InputError for log of a value <= 1 (the result would no longer be
  // positive) and for a non-positive scale factor.
  double apply(double value, const std::string& context) const;

  // Accepts "identity", "log" or "scale:<c>".
  static Transform parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const Transform&) const = default;
};

struct ColumnSpec {
  std::string name;  // exact CSV header name
  Direction direction = Direction::Input;
  Transform transform;

  bool operator==(const ColumnSpec&) const = default;
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  bool ok() const { return errors.empty(); }
};

// Builds a schema from `input:` / `output:` header prefixes. Every column
// except `dmu` must carry a prefix.
std::vector<ColumnSpec> infer_schema(std::string_view csv_text);

// Parses a JSON schema: {"col": {"direction": "input", "transform": "log"}}.
std::vector<ColumnSpec> schema_from_json(std::string_view json_text);

// Reads the CSV into a panel whose rows follow the schema order. Transforms
// are NOT applied here. Throws ParseError carrying row/column locations.
Panel parse_panel(std::string_view csv_text, const std::vector<ColumnSpec>& schema);

// Returns the panel with every column transform applied; identity columns
// are bit-identical.
Panel apply_transforms(const Panel& panel, const std::vector<ColumnSpec>& schema);

// Reports (never throws): semipositivity violations and negative cells as
// errors, the DMU-count rule of thumb (n >= 2*(m+s)) and constant columns as
// warnings.
ValidationReport validate(const Panel& panel);

// Serializes with prefixed headers at full precision, so
// parse_panel(to_csv(p), infer_schema(to_csv(p))) == p.
std::string to_csv(const Panel& panel);

}  // namespace dea

#endif  // DEA_DATASET_HPP
