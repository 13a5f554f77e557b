#include "dea/report.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "dea/errors.hpp"

namespace dea {

namespace {

std::string fmt3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
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

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

const char* rts_arrow(Rts rts) {
  switch (rts) {
    case Rts::CRS: return "→";  // right arrow
    case Rts::DRS: return "↓";  // down arrow
    case Rts::IRS: return "↑";  // up arrow
  }
  return "?";
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::string table_body(const std::vector<DmuReport>& reports, ReportColumns columns) {
  const bool ccr = columns != ReportColumns::BccOnly;
  const bool bcc = columns != ReportColumns::CcrOnly;
  const bool both = columns == ReportColumns::Both;

  std::size_t name_w = 3;
  for (const auto& r : reports) name_w = std::max(name_w, r.name.size());

  std::string out = pad_right("DMU", name_w);
  if (ccr) out += "  " + pad_left("CCR", 5);
  if (bcc) out += "  " + pad_left("BCC", 5);
  if (both) out += "  " + pad_left("SE", 5);
  if (ccr) out += "  " + pad_left("CCR eff.", 8);
  if (bcc) out += "  " + pad_left("BCC eff.", 8);
  if (both) out += "  RTS";
  out += "\n";

  for (const auto& r : reports) {
    std::string row = pad_right(r.name, name_w);
    if (ccr) row += "  " + pad_left(fmt3(r.theta_ccr), 5);
    if (bcc) row += "  " + pad_left(fmt3(r.theta_bcc), 5);
    if (both) row += "  " + pad_left(fmt3(r.scale_efficiency), 5);
    if (ccr) row += "  " + pad_left(r.ccr_efficient ? "+" : "", 8);
    if (bcc) row += "  " + pad_left(r.bcc_efficient ? "+" : "", 8);
    if (both) row += "  " + std::string(r.rts ? rts_arrow(*r.rts) : "");
    out += rstrip(std::move(row)) + "\n";
  }
  return out;
}

std::string csv_body(const std::vector<DmuReport>& reports, ReportColumns columns) {
  const bool ccr = columns != ReportColumns::BccOnly;
  const bool bcc = columns != ReportColumns::CcrOnly;
  const bool both = columns == ReportColumns::Both;

  std::vector<std::string> header = {"name"};
  if (ccr) header.push_back("theta_ccr");
  if (bcc) header.push_back("theta_bcc");
  if (both) header.push_back("scale_efficiency");
  if (ccr) header.push_back("ccr_efficient");
  if (bcc) header.push_back("bcc_efficient");
  if (ccr) header.push_back("weakly_efficient_ccr");
  if (bcc) header.push_back("weakly_efficient_bcc");
  if (both) header.push_back("rts");
  if (ccr) header.push_back("reference_set_ccr");
  if (bcc) header.push_back("reference_set_bcc");

  std::string out = join(header, ",") + "\n";
  for (const auto& r : reports) {
    std::vector<std::string> row = {csv_quote(r.name)};
    if (ccr) row.push_back(fmt3(r.theta_ccr));
    if (bcc) row.push_back(fmt3(r.theta_bcc));
    if (both) row.push_back(fmt3(r.scale_efficiency));
    if (ccr) row.push_back(r.ccr_efficient ? "true" : "false");
    if (bcc) row.push_back(r.bcc_efficient ? "true" : "false");
    if (ccr) row.push_back(r.weakly_efficient_ccr ? "true" : "false");
    if (bcc) row.push_back(r.weakly_efficient_bcc ? "true" : "false");
    if (both) row.push_back(r.rts ? to_string(*r.rts) : "");
    if (ccr) row.push_back(csv_quote(join(r.reference_set_ccr, ";")));
    if (bcc) row.push_back(csv_quote(join(r.reference_set_bcc, ";")));
    out += join(row, ",") + "\n";
  }
  return out;
}

std::string json_body(const std::vector<DmuReport>& reports, ReportColumns columns) {
  const bool ccr = columns != ReportColumns::BccOnly;
  const bool bcc = columns != ReportColumns::CcrOnly;
  const bool both = columns == ReportColumns::Both;

  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json row;
    row["name"] = r.name;
    if (ccr) row["theta_ccr"] = r.theta_ccr;
    if (bcc) row["theta_bcc"] = r.theta_bcc;
    if (both) row["scale_efficiency"] = r.scale_efficiency;
    if (ccr) row["ccr_efficient"] = r.ccr_efficient;
    if (bcc) row["bcc_efficient"] = r.bcc_efficient;
    if (ccr) row["weakly_efficient_ccr"] = r.weakly_efficient_ccr;
    if (bcc) row["weakly_efficient_bcc"] = r.weakly_efficient_bcc;
    if (both) {
      if (r.rts) {
        row["rts"] = to_string(*r.rts);
      } else {
        row["rts"] = nullptr;
      }
    }
    if (ccr) row["reference_set_ccr"] = r.reference_set_ccr;
    if (bcc) row["reference_set_bcc"] = r.reference_set_bcc;
    arr.push_back(std::move(row));
  }
  return arr.dump(2) + "\n";
}

}  // namespace

ReportFormat parse_format(std::string_view text) {
  if (text == "table") return ReportFormat::Table;
  if (text == "csv") return ReportFormat::Csv;
  if (text == "json") return ReportFormat::Json;
  throw InputError("unknown format '" + std::string(text) +
                   "' (expected table, csv or json)");
}

std::vector<DmuReport> rank(std::vector<DmuReport> reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const DmuReport& a, const DmuReport& b) {
                     if (a.theta_bcc != b.theta_bcc) return a.theta_bcc > b.theta_bcc;
                     if (a.bcc_efficient != b.bcc_efficient) return a.bcc_efficient;
                     return a.theta_ccr > b.theta_ccr;
                   });
  return reports;
}

std::vector<DmuReport> rank_single(std::vector<DmuReport> reports, Variant variant) {
  const bool use_ccr = variant == Variant::CCR;
  std::stable_sort(reports.begin(), reports.end(),
                   [use_ccr](const DmuReport& a, const DmuReport& b) {
                     const double sa = use_ccr ? a.theta_ccr : a.theta_bcc;
                     const double sb = use_ccr ? b.theta_ccr : b.theta_bcc;
                     if (sa != sb) return sa > sb;
                     const bool ea = use_ccr ? a.ccr_efficient : a.bcc_efficient;
                     const bool eb = use_ccr ? b.ccr_efficient : b.bcc_efficient;
                     if (ea != eb) return ea;
                     return false;
                   });
  return reports;
}

RenderedReport render(const std::vector<DmuReport>& reports, ReportFormat format,
                      ReportColumns columns) {
  RenderedReport rendered;
  rendered.format = format;
  switch (format) {
    case ReportFormat::Table: rendered.body = table_body(reports, columns); break;
    case ReportFormat::Csv: rendered.body = csv_body(reports, columns); break;
    case ReportFormat::Json: rendered.body = json_body(reports, columns); break;
  }
  return rendered;
}

RenderedReport render_frontier(const FrontierPartition& partition,
                               ReportFormat format) {
  RenderedReport rendered;
  rendered.format = format;
  switch (format) {
    case ReportFormat::Table:
      rendered.body = "efficient: " + join(partition.efficient, ", ") + "\n" +
                      "weakly efficient: " + join(partition.weakly_efficient, ", ") +
                      "\n" + "enveloped: " + join(partition.enveloped, ", ") + "\n";
      break;
    case ReportFormat::Csv: {
      std::string out = "name,class\n";
      for (const auto& n : partition.efficient) {
        out += csv_quote(n) + ",efficient\n";
      }
      for (const auto& n : partition.weakly_efficient) {
        out += csv_quote(n) + ",weakly_efficient\n";
      }
      for (const auto& n : partition.enveloped) {
        out += csv_quote(n) + ",enveloped\n";
      }
      rendered.body = std::move(out);
      break;
    }
    case ReportFormat::Json: {
      nlohmann::ordered_json doc;
      doc["efficient"] = partition.efficient;
      doc["weakly_efficient"] = partition.weakly_efficient;
      doc["enveloped"] = partition.enveloped;
      rendered.body = doc.dump(2) + "\n";
      break;
    }
  }
  return rendered;
}

RenderedReport render_validation(const std::vector<std::string>& errors,
                                 const std::vector<std::string>& warnings,
                                 ReportFormat format) {
  RenderedReport rendered;
  rendered.format = format;
  if (format == ReportFormat::Json) {
    nlohmann::ordered_json doc;
    doc["errors"] = errors;
    doc["warnings"] = warnings;
    rendered.body = doc.dump(2) + "\n";
    return rendered;
  }
  std::string out;
  for (const auto& e : errors) out += "error: " + e + "\n";
  for (const auto& w : warnings) out += "warning: " + w + "\n";
  if (out.empty()) out = "ok\n";
  rendered.body = std::move(out);
  return rendered;
}

}  // namespace dea
