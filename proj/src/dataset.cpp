#include "dea/dataset.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "dea/errors.hpp"

namespace dea {

namespace {

constexpr std::string_view kInputPrefix = "input:";
constexpr std::string_view kOutputPrefix = "output:";

std::string strip_prefix(std::string_view name) {
  if (name.starts_with(kInputPrefix)) return std::string(name.substr(kInputPrefix.size()));
  if (name.starts_with(kOutputPrefix)) return std::string(name.substr(kOutputPrefix.size()));
  return std::string(name);
}

struct CsvTable {
  std::vector<std::vector<std::string>> records;
  std::vector<std::size_t> line_of;  // 1-based source line of each record
};

CsvTable read_csv(std::string_view text) {
  CsvTable table;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t line = 1;
  std::size_t record_line = 1;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    table.records.push_back(std::move(record));
    table.line_of.push_back(record_line);
    record.clear();
    record_line = line;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) {
          throw ParseError("line " + std::to_string(line) +
                           ": quote in the middle of a field");
        }
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        end_field();
        field_started = true;  // a following empty field still counts
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;  // swallow
        [[fallthrough]];
      case '\n':
        ++line;
        if (!record.empty() || !field.empty() || field_started) {
          end_record();
          record_line = line;
        }
        break;
      default:
        field.push_back(c);
        field_started = true;
        break;
    }
  }
  if (in_quotes) throw ParseError("unterminated quoted field at end of input");
  if (!record.empty() || !field.empty() || field_started) end_record();
  return table;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

double parse_cell(const std::string& raw, std::size_t line, const std::string& column) {
  const std::string cell = trim(raw);
  auto fail = [&] {
    throw ParseError("row at line " + std::to_string(line) + ", column '" + column +
                     "': non-numeric value '" + raw + "'");
  };
  if (cell.empty()) fail();
  double value = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) fail();
  return value;
}

std::string format_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

const std::vector<std::string>& header_of(const CsvTable& table) {
  if (table.records.empty()) throw ParseError("empty CSV: no header row");
  return table.records.front();
}

void check_unique_names(const std::vector<ColumnSpec>& schema) {
  std::unordered_set<std::string> seen;
  for (const auto& spec : schema) {
    if (!seen.insert(spec.name).second) {
      throw InputError("duplicate schema column '" + spec.name + "'");
    }
  }
}

}  // namespace

std::string to_string(Direction direction) {
  return direction == Direction::Input ? "input" : "output";
}

double Transform::apply(double value, const std::string& context) const {
  switch (kind) {
    case Kind::Identity:
      return value;
    case Kind::Log:
      if (!(value > 1.0)) {
        throw InputError("log transform requires values > 1; " + context +
                         " has " + format_full(value));
      }
      return std::log(value);
    case Kind::Scale:
      if (!(factor > 0.0) || !std::isfinite(factor)) {
        throw InputError("scale factor must be positive and finite");
      }
      return factor * value;
  }
  return value;
}

Transform Transform::parse(std::string_view text) {
  if (text == "identity") return {};
  if (text == "log") return {Kind::Log, 1.0};
  if (text.starts_with("scale:")) {
    const std::string num(text.substr(6));
    char* end = nullptr;
    const double c = std::strtod(num.c_str(), &end);
    if (end != num.c_str() + num.size() || num.empty() || !std::isfinite(c) || c <= 0.0) {
      throw InputError("bad scale factor '" + num + "' (need a positive number)");
    }
    return {Kind::Scale, c};
  }
  throw InputError("unknown transform '" + std::string(text) +
                   "' (expected identity, log or scale:<c>)");
}

std::string Transform::to_string() const {
  switch (kind) {
    case Kind::Identity: return "identity";
    case Kind::Log: return "log";
    case Kind::Scale: return "scale:" + format_full(factor);
  }
  return "identity";
}

std::vector<ColumnSpec> infer_schema(std::string_view csv_text) {
  const CsvTable table = read_csv(csv_text);
  const auto& header = header_of(table);
  std::vector<ColumnSpec> schema;
  for (const auto& raw : header) {
    const std::string name = trim(raw);
    if (name == "dmu") continue;
    ColumnSpec spec;
    spec.name = name;
    if (name.starts_with(kInputPrefix)) {
      spec.direction = Direction::Input;
    } else if (name.starts_with(kOutputPrefix)) {
      spec.direction = Direction::Output;
    } else {
      throw ParseError("column '" + name +
                       "' has no direction; use an input:/output: prefix or a schema file");
    }
    schema.push_back(std::move(spec));
  }
  check_unique_names(schema);
  return schema;
}

std::vector<ColumnSpec> schema_from_json(std::string_view json_text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("schema is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("schema must be a JSON object");

  std::vector<ColumnSpec> schema;
  for (const auto& [name, entry] : doc.items()) {
    if (!entry.is_object() || !entry.contains("direction")) {
      throw ParseError("schema column '" + name +
                       "' must be an object with a 'direction'");
    }
    ColumnSpec spec;
    spec.name = name;
    const std::string dir = entry.at("direction").get<std::string>();
    if (dir == "input") {
      spec.direction = Direction::Input;
    } else if (dir == "output") {
      spec.direction = Direction::Output;
    } else {
      throw ParseError("schema column '" + name + "': unknown direction '" + dir + "'");
    }
    if (entry.contains("transform")) {
      spec.transform = Transform::parse(entry.at("transform").get<std::string>());
    }
    schema.push_back(std::move(spec));
  }
  check_unique_names(schema);
  return schema;
}

Panel parse_panel(std::string_view csv_text, const std::vector<ColumnSpec>& schema) {
  check_unique_names(schema);
  const CsvTable table = read_csv(csv_text);
  const auto& header = header_of(table);

  std::unordered_map<std::string, std::size_t> col_index;
  for (std::size_t c = 0; c < header.size(); ++c) col_index.emplace(trim(header[c]), c);

  const auto dmu_it = col_index.find("dmu");
  if (dmu_it == col_index.end()) throw ParseError("missing required column 'dmu'");
  const std::size_t dmu_col = dmu_it->second;

  struct Placed {
    std::size_t csv_col;
    std::size_t row;  // row inside the input or output matrix
    Direction direction;
    std::string name;
  };
  std::vector<Placed> placed;
  std::size_t m = 0, s = 0;
  std::vector<std::string> input_labels, output_labels;
  for (const auto& spec : schema) {
    const auto it = col_index.find(spec.name);
    if (it == col_index.end()) {
      throw ParseError("schema column '" + spec.name + "' not found in the CSV header");
    }
    if (spec.direction == Direction::Input) {
      placed.push_back({it->second, m++, spec.direction, spec.name});
      input_labels.push_back(strip_prefix(spec.name));
    } else {
      placed.push_back({it->second, s++, spec.direction, spec.name});
      output_labels.push_back(strip_prefix(spec.name));
    }
  }

  if (m == 0) throw ParseError("schema declares no input column");
  if (s == 0) throw ParseError("schema declares no output column");
  const std::size_t n = table.records.size() - 1;
  if (n == 0) throw ParseError("CSV has a header but no data rows");

  std::vector<std::string> names;
  names.reserve(n);
  Matrix inputs(m, n);
  Matrix outputs(s, n);
  std::unordered_map<std::string, std::size_t> seen;

  for (std::size_t r = 1; r < table.records.size(); ++r) {
    const auto& rec = table.records[r];
    const std::size_t line = table.line_of[r];
    if (rec.size() != header.size()) {
      throw ParseError("row at line " + std::to_string(line) + " has " +
                       std::to_string(rec.size()) + " fields, header has " +
                       std::to_string(header.size()));
    }
    const std::string name = trim(rec[dmu_col]);
    if (name.empty()) {
      throw ParseError("row at line " + std::to_string(line) + ": empty DMU name");
    }
    const auto [it, inserted] = seen.emplace(name, line);
    if (!inserted) {
      throw ParseError("duplicate DMU name '" + name + "' at line " +
                       std::to_string(line) + " (first seen at line " +
                       std::to_string(it->second) + ")");
    }
    names.push_back(name);
    for (const auto& p : placed) {
      const double v = parse_cell(rec[p.csv_col], line, p.name);
      if (p.direction == Direction::Input) {
        inputs.at(p.row, r - 1) = v;
      } else {
        outputs.at(p.row, r - 1) = v;
      }
    }
  }
  return Panel(std::move(names), std::move(inputs), std::move(outputs),
               std::move(input_labels), std::move(output_labels));
}

Panel apply_transforms(const Panel& panel, const std::vector<ColumnSpec>& schema) {
  Matrix inputs = panel.inputs();
  Matrix outputs = panel.outputs();

  auto row_of = [&](const ColumnSpec& spec) -> std::size_t {
    const std::string label = strip_prefix(spec.name);
    const auto& labels = spec.direction == Direction::Input
                             ? panel.input_labels()
                             : panel.output_labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == label) return i;
    }
    throw InputError("schema column '" + spec.name + "' not present in the panel");
  };

  for (const auto& spec : schema) {
    if (spec.transform.kind == Transform::Kind::Identity) continue;
    const std::size_t row = row_of(spec);
    Matrix& target = spec.direction == Direction::Input ? inputs : outputs;
    for (std::size_t j = 0; j < panel.num_dmus(); ++j) {
      const std::string context =
          "column '" + spec.name + "', DMU '" + panel.name(j) + "'";
      target.at(row, j) = spec.transform.apply(target.at(row, j), context);
    }
  }
  return Panel(panel.names(), std::move(inputs), std::move(outputs),
               panel.input_labels(), panel.output_labels());
}

ValidationReport validate(const Panel& panel) {
  ValidationReport report;
  const std::size_t n = panel.num_dmus();
  const std::size_t m = panel.num_inputs();
  const std::size_t s = panel.num_outputs();

  for (std::size_t j = 0; j < n; ++j) {
    bool input_pos = false, output_pos = false;
    for (std::size_t i = 0; i < m; ++i) {
      const double v = panel.input(i, j);
      if (v < 0) {
        report.errors.push_back("DMU '" + panel.name(j) + "': negative input '" +
                                panel.input_labels()[i] + "' = " + format_full(v));
      }
      if (v > 0) input_pos = true;
    }
    for (std::size_t r = 0; r < s; ++r) {
      const double v = panel.output(r, j);
      if (v < 0) {
        report.errors.push_back("DMU '" + panel.name(j) + "': negative output '" +
                                panel.output_labels()[r] + "' = " + format_full(v));
      }
      if (v > 0) output_pos = true;
    }
    if (!input_pos) {
      report.errors.push_back("DMU '" + panel.name(j) +
                              "' is not semipositive: no positive input");
    }
    if (!output_pos) {
      report.errors.push_back("DMU '" + panel.name(j) +
                              "' is not semipositive: no positive output");
    }
  }

  if (n < 2 * (m + s)) {
    report.warnings.push_back(
        "only " + std::to_string(n) + " DMUs for " + std::to_string(m) +
        " inputs + " + std::to_string(s) + " outputs; the rule of thumb asks for at least " +
        std::to_string(2 * (m + s)));
  }
  auto warn_constant = [&](const Matrix& mat, const std::vector<std::string>& labels,
                           const char* kind) {
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      bool constant = true;
      for (std::size_t j = 1; j < mat.cols() && constant; ++j) {
        constant = mat.at(i, j) == mat.at(i, 0);
      }
      if (constant && n > 1) {
        report.warnings.push_back(std::string(kind) + " '" + labels[i] +
                                  "' is constant across all DMUs");
      }
    }
  };
  warn_constant(panel.inputs(), panel.input_labels(), "input");
  warn_constant(panel.outputs(), panel.output_labels(), "output");
  return report;
}

std::string to_csv(const Panel& panel) {
  std::string out = "dmu";
  for (const auto& label : panel.input_labels()) {
    out += "," + csv_quote(std::string(kInputPrefix) + label);
  }
  for (const auto& label : panel.output_labels()) {
    out += "," + csv_quote(std::string(kOutputPrefix) + label);
  }
  out += "\n";
  for (std::size_t j = 0; j < panel.num_dmus(); ++j) {
    out += csv_quote(panel.name(j));
    for (std::size_t i = 0; i < panel.num_inputs(); ++i) {
      out += "," + format_full(panel.input(i, j));
    }
    for (std::size_t r = 0; r < panel.num_outputs(); ++r) {
      out += "," + format_full(panel.output(r, j));
    }
    out += "\n";
  }
  return out;
}

}  // namespace dea
