// Tiny hand-checked panels reused across suites.

#ifndef DEA_TESTS_FIXTURES_HPP
#define DEA_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "dea/dea.hpp"
#include "dea/panel.hpp"

namespace fixtures {

inline dea::Panel make_panel(std::vector<std::string> names,
                             std::vector<std::vector<double>> input_rows,
                             std::vector<std::vector<double>> output_rows) {
  const std::size_t n = names.size();
  dea::Matrix in(input_rows.size(), n);
  dea::Matrix out(output_rows.size(), n);
  for (std::size_t i = 0; i < input_rows.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) in.at(i, j) = input_rows[i][j];
  }
  for (std::size_t r = 0; r < output_rows.size(); ++r) {
    for (std::size_t j = 0; j < n; ++j) out.at(r, j) = output_rows[r][j];
  }
  std::vector<std::string> in_labels, out_labels;
  for (std::size_t i = 0; i < input_rows.size(); ++i) {
    in_labels.push_back("x" + std::to_string(i + 1));
  }
  for (std::size_t r = 0; r < output_rows.size(); ++r) {
    out_labels.push_back("y" + std::to_string(r + 1));
  }
  return dea::Panel(std::move(names), std::move(in), std::move(out),
                    std::move(in_labels), std::move(out_labels));
}

// Single input and output; A sets the best ratio, B is far inside, C is a
// BCC vertex but CCR-inefficient.
inline dea::Panel ratio_ladder() {
  return make_panel({"A", "B", "C"}, {{2, 4, 8}}, {{2, 2, 6}});
}

// Two inputs, one output; C is radially efficient but dominated by A in the
// second input (the weak-efficiency case).
inline dea::Panel weak_point_panel() {
  return make_panel({"A", "B", "C"}, {{1, 2, 1}, {2, 1, 3}}, {{1, 1, 1}});
}

// Single input and output with a concave frontier: A (small), B (best
// ratio), C (large). Exercises IRS / CRS / DRS.
inline dea::Panel vrs_ladder() {
  return make_panel({"A", "B", "C"}, {{1, 2, 4}}, {{1, 3, 4}});
}

// One input, two outputs; R is enveloped by the P-Q segment.
inline dea::Panel two_output_panel() {
  return make_panel({"P", "Q", "R"}, {{1, 1, 1}}, {{2, 1, 1}, {1, 2, 1}});
}

inline dea::Panel single_dmu() {
  return make_panel({"only"}, {{1}}, {{1}});
}

// Golden ranking fixture: published efficiency scores for 24 language-model
// configurations, in their correctly ranked order. rts is one of "CRS",
// "DRS" or "" (not BCC-efficient).
struct BenchmarkRow {
  const char* name;
  double ccr;
  double bcc;
  double se;
  bool ccr_eff;
  bool bcc_eff;
  const char* rts;
};

inline const std::vector<BenchmarkRow>& benchmark_rows() {
  static const std::vector<BenchmarkRow> rows = {
      {"glove-50-linear", 1.000, 1.000, 1.000, true, true, "CRS"},
      {"tfidf-1000-linear", 1.000, 1.000, 1.000, true, true, "CRS"},
      {"roberta-base, lr=1e-4", 0.501, 1.000, 0.501, false, true, "DRS"},
      {"distilroberta-base, lr=1e-5", 0.499, 1.000, 0.499, false, true, "DRS"},
      {"tfidf-10000-linear", 0.999, 1.000, 0.999, false, false, ""},
      {"tfidf-5000-linear", 0.999, 1.000, 0.999, false, false, ""},
      {"tfidf-500-linear", 0.999, 1.000, 0.999, false, false, ""},
      {"tfidf-15000-linear", 0.999, 1.000, 0.999, false, false, ""},
      {"glove-100-linear", 0.952, 0.961, 0.990, false, false, ""},
      {"roberta-base, lr=1e-5", 0.460, 0.919, 0.500, false, false, ""},
      {"bert-base-uncased, lr=1e-4", 0.486, 0.913, 0.533, false, false, ""},
      {"distilroberta-base, lr=1e-4", 0.479, 0.863, 0.555, false, false, ""},
      {"glove-200-linear", 0.841, 0.845, 0.996, false, false, ""},
      {"distilbert-base-uncased, lr=1e-5", 0.460, 0.842, 0.546, false, false, ""},
      {"bert-base-uncased, lr=1e-5", 0.437, 0.841, 0.519, false, false, ""},
      {"bert-large-uncased, lr=1e-5", 0.385, 0.835, 0.461, false, false, ""},
      {"glove-300-linear", 0.827, 0.834, 0.991, false, false, ""},
      {"distilbert-base-uncased, lr=1e-3", 0.466, 0.819, 0.569, false, false, ""},
      {"distilbert-base-uncased, lr=1e-4", 0.473, 0.803, 0.588, false, false, ""},
      {"bert-large-uncased, lr=1e-4", 0.411, 0.741, 0.554, false, false, ""},
      {"distilroberta-base, lr=1e-3", 0.452, 0.679, 0.665, false, false, ""},
      {"roberta-base, lr=1e-3", 0.436, 0.654, 0.666, false, false, ""},
      {"bert-base-uncased, lr=1e-3", 0.410, 0.543, 0.756, false, false, ""},
      {"bert-large-uncased, lr=1e-3", 0.225, 0.312, 0.721, false, false, ""},
  };
  return rows;
}

inline dea::DmuReport report_from(const BenchmarkRow& row) {
  dea::DmuReport r;
  r.name = row.name;
  r.theta_ccr = row.ccr;
  r.theta_bcc = row.bcc;
  r.scale_efficiency = row.se;
  r.ccr_efficient = row.ccr_eff;
  r.bcc_efficient = row.bcc_eff;
  r.weakly_efficient_ccr = !row.ccr_eff && row.ccr >= 1.0 - 1e-6;
  r.weakly_efficient_bcc = !row.bcc_eff && row.bcc >= 1.0 - 1e-6;
  if (row.rts == std::string("CRS")) r.rts = dea::Rts::CRS;
  if (row.rts == std::string("DRS")) r.rts = dea::Rts::DRS;
  if (row.rts == std::string("IRS")) r.rts = dea::Rts::IRS;
  return r;
}

}  // namespace fixtures

#endif  // DEA_TESTS_FIXTURES_HPP
