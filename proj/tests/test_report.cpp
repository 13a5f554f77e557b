#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include <json.hpp>

#include "dea/errors.hpp"
#include "dea/report.hpp"
#include "fixtures.hpp"

using namespace dea;

namespace {

std::vector<DmuReport> benchmark_reports() {
  std::vector<DmuReport> reports;
  for (const auto& row : fixtures::benchmark_rows()) {
    reports.push_back(fixtures::report_from(row));
  }
  return reports;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> lines_of(const std::string& body) {
  std::vector<std::string> out;
  std::istringstream in(body);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("rank reproduces the published row order") {
  const auto ranked = rank(benchmark_reports());
  const auto& rows = fixtures::benchmark_rows();
  REQUIRE(ranked.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(ranked[i].name == rows[i].name);
  }
}

TEST_CASE("rank sorts shuffled input by score then efficiency") {
  auto reports = benchmark_reports();
  std::reverse(reports.begin(), reports.end());
  const auto ranked = rank(reports);
  for (std::size_t i = 1; i < ranked.size(); ++i) {
    const auto& hi = ranked[i - 1];
    const auto& lo = ranked[i];
    const bool ordered =
        hi.theta_bcc > lo.theta_bcc ||
        (hi.theta_bcc == lo.theta_bcc &&
         (hi.bcc_efficient > lo.bcc_efficient ||
          (hi.bcc_efficient == lo.bcc_efficient && hi.theta_ccr >= lo.theta_ccr)));
    INFO(hi.name, " vs ", lo.name);
    CHECK(ordered);
  }
}

TEST_CASE("rank of an empty list is empty") {
  CHECK(rank({}).empty());
}

TEST_CASE("rank is a stable permutation") {
  auto reports = benchmark_reports();
  const auto once = rank(reports);
  CHECK(rank(once) == once);  // idempotent
  CHECK(once.size() == reports.size());
  for (const auto& r : reports) {
    CHECK(std::count_if(once.begin(), once.end(), [&](const DmuReport& x) {
            return x.name == r.name;
          }) == 1);
  }

  // fully tied rows keep their input order
  DmuReport a = fixtures::report_from(fixtures::benchmark_rows()[0]);
  DmuReport b = a;
  a.name = "first";
  b.name = "second";
  const auto tied = rank({a, b});
  CHECK(tied[0].name == "first");
  CHECK(tied[1].name == "second");
}

TEST_CASE("table rows carry scores, marks and arrows") {
  const auto ranked = rank(benchmark_reports());
  const auto body = render(ranked, ReportFormat::Table).body;
  const auto lines = lines_of(body);
  REQUIRE(lines.size() == ranked.size() + 1);

  const auto first = tokens(lines[1]);
  CHECK(first == std::vector<std::string>{"glove-50-linear", "1.000", "1.000",
                                          "1.000", "+", "+", "→"});

  // the third row: BCC-efficient only, decreasing returns
  const auto third = tokens(lines[3]);
  REQUIRE(third.size() >= 5);
  const std::vector<std::string> tail(third.end() - 5, third.end());
  CHECK(tail == std::vector<std::string>{"0.501", "1.000", "0.501", "+", "↓"});

  // weakly efficient rows get no marks and no arrow
  const auto fifth = tokens(lines[5]);
  CHECK(fifth == std::vector<std::string>{"tfidf-10000-linear", "0.999",
                                          "1.000", "0.999"});
}

TEST_CASE("csv round-trips at three-decimal precision") {
  const auto ranked = rank(benchmark_reports());
  const auto body = render(ranked, ReportFormat::Csv).body;
  const auto lines = lines_of(body);
  REQUIRE(lines.size() == ranked.size() + 1);
  CHECK(lines[0] ==
        "name,theta_ccr,theta_bcc,scale_efficiency,ccr_efficient,bcc_efficient,"
        "weakly_efficient_ccr,weakly_efficient_bcc,rts,reference_set_ccr,"
        "reference_set_bcc");

  // parse a quoted row back: name with a comma stays one field
  const std::string& row = lines[3];
  CHECK(row.find("\"roberta-base, lr=1e-4\"") == 0);
  CHECK(row.find(",0.501,1.000,0.501,false,true,false,false,DRS,") != std::string::npos);
}

TEST_CASE("empty csv render is header-only") {
  const auto body = render({}, ReportFormat::Csv).body;
  const auto lines = lines_of(body);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].find("name,") == 0);
}

TEST_CASE("json carries full precision and reference sets") {
  DmuReport r = fixtures::report_from(fixtures::benchmark_rows()[2]);
  r.theta_ccr = 0.5014321234567;
  r.reference_set_ccr = {"glove-50-linear", "tfidf-1000-linear"};
  r.reference_set_bcc = {"roberta-base, lr=1e-4"};
  const auto body = render({r}, ReportFormat::Json).body;
  const auto doc = nlohmann::json::parse(body);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["name"] == "roberta-base, lr=1e-4");
  CHECK(doc[0]["theta_ccr"].get<double>() == 0.5014321234567);
  CHECK(doc[0]["rts"] == "DRS");
  CHECK(doc[0]["reference_set_ccr"].size() == 2);
  CHECK(doc[0]["weakly_efficient_ccr"] == false);

  DmuReport plain = fixtures::report_from(fixtures::benchmark_rows()[10]);
  const auto body2 = render({plain}, ReportFormat::Json).body;
  CHECK(nlohmann::json::parse(body2)[0]["rts"].is_null());
}

TEST_CASE("single-variant columns drop the joint fields") {
  const auto reports = benchmark_reports();
  const auto csv = render(reports, ReportFormat::Csv, ReportColumns::CcrOnly).body;
  CHECK(lines_of(csv)[0] ==
        "name,theta_ccr,ccr_efficient,weakly_efficient_ccr,reference_set_ccr");
  const auto jsonned =
      nlohmann::json::parse(render(reports, ReportFormat::Json, ReportColumns::BccOnly).body);
  CHECK_FALSE(jsonned[0].contains("theta_ccr"));
  CHECK(jsonned[0].contains("theta_bcc"));
  CHECK_FALSE(jsonned[0].contains("scale_efficiency"));

  const auto ranked = rank_single(reports, Variant::CCR);
  for (std::size_t i = 1; i < ranked.size(); ++i) {
    CHECK(ranked[i - 1].theta_ccr >= ranked[i].theta_ccr);
  }
}

TEST_CASE("frontier rendering") {
  FrontierPartition part;
  part.efficient = {"A", "B"};
  part.weakly_efficient = {"C"};
  const auto table = render_frontier(part, ReportFormat::Table).body;
  CHECK(table == "efficient: A, B\nweakly efficient: C\nenveloped: \n");
  const auto doc = nlohmann::json::parse(render_frontier(part, ReportFormat::Json).body);
  CHECK(doc["efficient"] == nlohmann::json::array({"A", "B"}));
  CHECK(doc["enveloped"].empty());
  const auto csv = render_frontier(part, ReportFormat::Csv).body;
  CHECK(csv == "name,class\nA,efficient\nB,efficient\nC,weakly_efficient\n");
}

TEST_CASE("unknown format is rejected") {
  CHECK_THROWS_AS(parse_format("yaml"), InputError);
  CHECK(parse_format("json") == ReportFormat::Json);
}
