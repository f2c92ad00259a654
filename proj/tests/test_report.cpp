#include <doctest.h>

#include <fstream>

#include "dscsib/classify.hpp"
#include "dscsib/embed.hpp"
#include "dscsib/parser.hpp"
#include "dscsib/report.hpp"

using namespace dscsib;

namespace {

nlohmann::json load_schema() {
  std::ifstream in(std::string(DSCSIB_SOURCE_DIR) + "/docs/report.schema.json");
  REQUIRE(in.good());
  nlohmann::json schema;
  in >> schema;
  return schema;
}

}  // namespace

TEST_CASE("classification reports match the published schema") {
  const nlohmann::json schema = load_schema();
  const DscDescription d = parse_dsc("aleph0*w");
  const SibResult r = classify_countable(d);

  nlohmann::json report = report_skeleton("classify", {to_string(d)});
  report["mode"] = "countable";
  report["result"] = {{"kind", "sibling_count"}, {"count", to_json(r.count)}};
  report["certificate"] = to_json(r.certificate);
  report["exit_code"] = 0;

  std::string why;
  CHECK_MESSAGE(matches_schema(report, schema, &why), why);
  CHECK(report["certificate"]["rule"] == "Sibincreasingunbounded");
  CHECK(report["certificate"]["statement"].get<std::string>().size() > 10);
}

TEST_CASE("embedding reports serialize the assignment") {
  const nlohmann::json schema = load_schema();
  const DscDescription a = parse_dsc("C^2 + C^2");
  const DscDescription b = parse_dsc("w + C^2");
  const EmbedResult r = dsc_embeds(a, b);
  REQUIRE(r.embeds);
  REQUIRE(r.assignment.has_value());

  nlohmann::json report = report_skeleton("embeds", {to_string(a), to_string(b)});
  report["result"] = {{"kind", "boolean"},
                      {"value", true},
                      {"assignment", to_json(*r.assignment)}};
  std::string why;
  CHECK_MESSAGE(matches_schema(report, schema, &why), why);
  CHECK(report["result"]["assignment"]["transfers"].size() >= 2);
}

TEST_CASE("family and verification reports match the schema") {
  const nlohmann::json schema = load_schema();

  nlohmann::json family_report = report_skeleton("witnesses", {"aleph0*w"});
  family_report["result"] = {{"kind", "sibling_family"},
                             {"members", {"A^1 + aleph0*w", "A^2 + aleph0*w"}}};
  std::string why;
  CHECK_MESSAGE(matches_schema(family_report, schema, &why), why);

  SuiteResult suite;
  suite.name = "oracle-equivalence";
  suite.cases = 10;
  nlohmann::json verify_report = report_skeleton("verify", {"oracle-equivalence"});
  verify_report["result"] = {{"kind", "verification"},
                             {"suites", nlohmann::json::array({to_json(suite)})}};
  CHECK_MESSAGE(matches_schema(verify_report, schema, &why), why);
}

TEST_CASE("error reports match the schema") {
  const nlohmann::json schema = load_schema();
  const nlohmann::json report = error_report("classify", "ParseError", "boom");
  std::string why;
  CHECK_MESSAGE(matches_schema(report, schema, &why), why);
  CHECK(report["exit_code"] == 1);
}

TEST_CASE("the mini validator rejects bad documents") {
  const nlohmann::json schema = load_schema();
  nlohmann::json report = report_skeleton("classify", {"w"});
  report.erase("command");
  std::string why;
  CHECK_FALSE(matches_schema(report, schema, &why));
  CHECK(why.find("command") != std::string::npos);

  nlohmann::json wrong_type = report_skeleton("classify", {"w"});
  wrong_type["exit_code"] = "zero";
  CHECK_FALSE(matches_schema(wrong_type, schema));

  nlohmann::json bad_command = report_skeleton("sideways", {"w"});
  CHECK_FALSE(matches_schema(bad_command, schema));
}

TEST_CASE("range verdicts map to exit code 2 by contract") {
  const SibResult r = classify_countable(parse_dsc("w + aleph0*C^2"));
  CHECK(r.count.is_range());
  // the CLI maps ranges to exit code 2; mirrored here for the report field
  const int exit_code = r.count.is_range() ? 2 : 0;
  CHECK(exit_code == 2);
}
