// Ranking and rendering of DMU reports.

#ifndef DEA_REPORT_HPP
#define DEA_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "dea/dea.hpp"

namespace dea {

enum class ReportFormat { Table, Csv, Json };

// Accepts "table", "csv" or "json"; throws InputError otherwise.
ReportFormat parse_format(std::string_view text);

// Which variant columns to emit (mirrors the CLI's --model flag; the scale
// and returns-to-scale columns need both models, so single-variant output
// drops them).
enum class ReportColumns { Both, CcrOnly, BccOnly };

struct RenderedReport {
  ReportFormat format = ReportFormat::Table;
  std::string body;
};

// Stable sort: theta_bcc descending, bcc_efficient before weakly efficient
// ties, then theta_ccr descending; remaining ties keep input order.
std::vector<DmuReport> rank(std::vector<DmuReport> reports);

// Ordering when only one variant was computed: that variant's score
// descending, efficient rows first among ties, then input order.
std::vector<DmuReport> rank_single(std::vector<DmuReport> reports, Variant variant);

// Table output shows name, scores at three decimals, '+' efficiency marks
// and an RTS arrow for BCC-efficient rows. Csv adds the weak flags and
// reference sets at the same precision; json carries full-precision scores.
RenderedReport render(const std::vector<DmuReport>& reports, ReportFormat format,
                      ReportColumns columns = ReportColumns::Both);

RenderedReport render_frontier(const FrontierPartition& partition,
                               ReportFormat format);

RenderedReport render_validation(const std::vector<std::string>& errors,
                                 const std::vector<std::string>& warnings,
                                 ReportFormat format);

}  // namespace dea

#endif  // DEA_REPORT_HPP
