#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dea/dataset.hpp"
#include "dea/errors.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace dea;

namespace {

const char* kTinyCsv =
    "dmu,input:x,output:y\n"
    "A,2,2\n"
    "B,4,2\n"
    "C,8,6\n";

Panel parse_prefixed(std::string_view csv) {
  return parse_panel(csv, infer_schema(csv));
}

}  // namespace

TEST_CASE("parse a prefixed three-row table") {
  const Panel p = parse_prefixed(kTinyCsv);
  CHECK(p.num_dmus() == 3);
  CHECK(p.num_inputs() == 1);
  CHECK(p.num_outputs() == 1);
  CHECK(p.names() == std::vector<std::string>{"A", "B", "C"});
  CHECK(p.input_labels() == std::vector<std::string>{"x"});
  CHECK(p.output_labels() == std::vector<std::string>{"y"});
  CHECK(p.input(0, 2) == 8.0);
  CHECK(p.output(0, 2) == 6.0);
}

TEST_CASE("duplicate DMU names are rejected with their line") {
  const char* csv =
      "dmu,input:x,output:y\n"
      "A,1,1\n"
      "A,2,2\n";
  CHECK_THROWS_WITH_AS(parse_prefixed(csv), doctest::Contains("line 3"),
                       ParseError);
}

TEST_CASE("non-numeric and non-finite cells are rejected with a location") {
  const char* nan_csv =
      "dmu,input:x,output:y\n"
      "A,NaN,1\n";
  CHECK_THROWS_WITH_AS(parse_prefixed(nan_csv), doctest::Contains("input:x"),
                       ParseError);
  const char* word_csv =
      "dmu,input:x,output:y\n"
      "A,fast,1\n";
  CHECK_THROWS_AS(parse_prefixed(word_csv), ParseError);
  const char* inf_csv =
      "dmu,input:x,output:y\n"
      "A,inf,1\n";
  CHECK_THROWS_AS(parse_prefixed(inf_csv), ParseError);
}

TEST_CASE("structural CSV errors") {
  CHECK_THROWS_WITH_AS(parse_prefixed(""), doctest::Contains("empty"), ParseError);
  CHECK_THROWS_AS(parse_prefixed("dmu,input:x,output:y\n"), ParseError);

  // missing dmu column
  std::vector<ColumnSpec> schema = {{"input:x", Direction::Input, {}},
                                    {"output:y", Direction::Output, {}}};
  CHECK_THROWS_WITH_AS(parse_panel("input:x,output:y\n1,1\n", schema),
                       doctest::Contains("dmu"), ParseError);

  // schema column absent from the header
  schema.push_back({"input:z", Direction::Input, {}});
  CHECK_THROWS_WITH_AS(parse_panel(kTinyCsv, schema),
                       doctest::Contains("input:z"), ParseError);

  // ragged row
  CHECK_THROWS_AS(parse_prefixed("dmu,input:x,output:y\nA,1\n"), ParseError);

  // unprefixed column without a schema
  CHECK_THROWS_AS(infer_schema("dmu,x,output:y\nA,1,1\n"), ParseError);
}

TEST_CASE("quoted names may contain commas and quotes") {
  const char* csv =
      "dmu,input:x,output:y\n"
      "\"roberta-base, lr=1e-4\",2,1\n"
      "\"say \"\"hi\"\"\",3,1\n";
  const Panel p = parse_prefixed(csv);
  CHECK(p.name(0) == "roberta-base, lr=1e-4");
  CHECK(p.name(1) == "say \"hi\"");

  const std::string round = to_csv(p);
  CHECK(parse_panel(round, infer_schema(round)) == p);
}

TEST_CASE("schema files pick and order columns") {
  const char* csv =
      "dmu,params,runtime,score\n"
      "A,10,100,0.5\n"
      "B,20,50,0.6\n";
  const char* schema_json = R"({
    "runtime": {"direction": "input", "transform": "scale:0.001"},
    "params":  {"direction": "input", "transform": "log"},
    "score":   {"direction": "output"}
  })";
  const auto schema = schema_from_json(schema_json);
  const Panel p = parse_panel(csv, schema);
  CHECK(p.num_inputs() == 2);
  CHECK(p.num_outputs() == 1);
  // columns follow schema order, not CSV order
  CHECK(p.input_labels() == std::vector<std::string>{"runtime", "params"});
  CHECK(p.input(0, 0) == 100.0);
  CHECK(p.input(1, 0) == 10.0);
}

TEST_CASE("schema JSON errors") {
  CHECK_THROWS_AS(schema_from_json("not json"), ParseError);
  CHECK_THROWS_AS(schema_from_json(R"({"c": {"direction": "sideways"}})"), ParseError);
  CHECK_THROWS_AS(schema_from_json(R"({"c": "input"})"), ParseError);
  CHECK_THROWS_AS(schema_from_json(R"({"c": {"direction": "input", "transform": "exp"}})"),
                  InputError);
  CHECK_THROWS_AS(schema_from_json(R"({"c": {"direction": "input", "transform": "scale:-2"}})"),
                  InputError);
}

TEST_CASE("transform arithmetic") {
  const double e2 = std::exp(2.0);
  CHECK(Transform::parse("log").apply(e2, "t") == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(Transform::parse("log").apply(82119169.0, "t") ==
        doctest::Approx(18.224).epsilon(1e-4));
  CHECK(Transform::parse("scale:0.001").apply(4011.6, "t") ==
        doctest::Approx(4.0116).epsilon(1e-12));
  CHECK(Transform::parse("identity").apply(-3.5, "t") == -3.5);
  CHECK_THROWS_AS(Transform::parse("log").apply(1.0, "t"), InputError);
  CHECK_THROWS_AS(Transform::parse("log").apply(0.5, "t"), InputError);
}

TEST_CASE("apply_transforms rewrites the declared columns only") {
  const char* csv =
      "dmu,input:params,input:runtime,output:score\n"
      "A,7389.056098930651,4011.6,0.5\n"
      "B,22026.465794806718,5658.1,0.6\n";
  auto schema = infer_schema(csv);
  schema[0].transform = Transform::parse("log");
  schema[1].transform = Transform::parse("scale:0.001");
  const Panel raw = parse_panel(csv, schema);
  const Panel cooked = apply_transforms(raw, schema);
  CHECK(cooked.input(0, 0) == doctest::Approx(std::log(7389.056098930651)));
  CHECK(cooked.input(1, 0) == doctest::Approx(4.0116));
  CHECK(cooked.output(0, 0) == raw.output(0, 0));

  // identity-only schemas are a no-op
  const auto plain = infer_schema(csv);
  CHECK(apply_transforms(raw, plain) == raw);

  // per-column transforms commute
  auto reversed = schema;
  std::swap(reversed[0], reversed[1]);
  CHECK(apply_transforms(raw, reversed) == cooked);
}

TEST_CASE("log transform failure names the cell") {
  const char* csv =
      "dmu,input:params,output:score\n"
      "A,0.5,1\n";
  auto schema = infer_schema(csv);
  schema[0].transform = Transform::parse("log");
  const Panel raw = parse_panel(csv, schema);
  CHECK_THROWS_WITH_AS(apply_transforms(raw, schema), doctest::Contains("'A'"),
                       InputError);
}

TEST_CASE("validate: rule-of-thumb warning thresholds") {
  std::mt19937 rng(99);
  auto data = generators::random_panel_data(rng, 24, 24, 1, 1);
  // reshape to m=2, s=2
  std::vector<std::vector<double>> ins = {data.inputs[0], data.inputs[0]};
  std::vector<std::vector<double>> outs = {data.outputs[0], data.outputs[0]};
  const Panel big = fixtures::make_panel(data.names, ins, outs);
  CHECK(validate(big).ok());
  bool has_rule_warning = false;
  for (const auto& w : validate(big).warnings) {
    has_rule_warning |= w.find("rule of thumb") != std::string::npos;
  }
  CHECK_FALSE(has_rule_warning);

  const Panel tiny = fixtures::make_panel(
      {"A", "B", "C"}, {{1, 2, 3}, {1, 2, 3}}, {{1, 2, 3}, {3, 2, 1}});
  const auto report = validate(tiny);
  CHECK(report.ok());
  REQUIRE(!report.warnings.empty());
  CHECK(report.warnings.front().find("rule of thumb") != std::string::npos);
}

TEST_CASE("validate: semipositivity and negativity errors") {
  const Panel zero_out = fixtures::make_panel({"A", "Z"}, {{1, 1}}, {{1, 0}});
  const auto report = validate(zero_out);
  CHECK_FALSE(report.ok());
  CHECK(report.errors.front().find("'Z'") != std::string::npos);

  const Panel negative = fixtures::make_panel({"A", "N"}, {{1, -2}}, {{1, 1}});
  CHECK_FALSE(validate(negative).ok());
}

TEST_CASE("validate: constant column warning") {
  const Panel p = fixtures::make_panel({"A", "B"}, {{3, 3}}, {{1, 2}});
  bool warned = false;
  for (const auto& w : validate(p).warnings) {
    warned |= w.find("constant") != std::string::npos;
  }
  CHECK(warned);
}

TEST_CASE("serialize/parse round-trips exactly") {
  std::mt19937 rng(123);
  for (int k = 0; k < 10; ++k) {
    auto data = generators::random_panel_data(rng, 2, 9);
    const Panel p = fixtures::make_panel(data.names, data.inputs, data.outputs);
    const std::string csv = to_csv(p);
    CHECK(parse_panel(csv, infer_schema(csv)) == p);
  }
}
