#include <doctest.h>

#include <json.hpp>

#include "cubicmaps/formatting.hpp"

using namespace cubicmaps;

TEST_CASE("parsing format and kind names") {
  CHECK(parse_output_format("csv") == OutputFormat::kCsv);
  CHECK(parse_output_format("json") == OutputFormat::kJson);
  CHECK(parse_output_format("markdown") == OutputFormat::kMarkdown);
  CHECK_FALSE(parse_output_format("xml").has_value());
  CHECK(parse_count_kind("sensed") == CountKind::kSensed);
  CHECK_FALSE(parse_count_kind("signed").has_value());
  CHECK(to_string(CountKind::kUnsensed) == "unsensed");
}

TEST_CASE("count output") {
  const auto s = SurfaceClass::orientable_surface(2);
  CHECK(format_count(s, CountKind::kUnsensed, 8, OutputFormat::kMarkdown) == "8\n");
  CHECK(format_count(s, CountKind::kUnsensed, 8, OutputFormat::kCsv) == "8\n");
  const auto doc = nlohmann::json::parse(format_count(s, CountKind::kUnsensed, 8, OutputFormat::kJson));
  CHECK(doc["value"] == "8");
  CHECK(doc["genus"] == 2);
  CHECK(doc["surface"] == "orientable");
  CHECK(doc["kind"] == "unsensed");
}

TEST_CASE("census csv") {
  const std::vector<CensusRow> orientable{{1, 1, BigCount(1), 1}};
  CHECK(format_census_table(true, orientable, OutputFormat::kCsv) == "g,rooted,sensed,unsensed\n1,1,1,1\n");
  const std::vector<CensusRow> nonorientable{{2, 6, std::nullopt, 2}, {3, 128, std::nullopt, 11}};
  CHECK(format_census_table(false, nonorientable, OutputFormat::kCsv) == "g,rooted,unsensed\n2,6,2\n3,128,11\n");
}

TEST_CASE("census markdown") {
  const std::vector<CensusRow> rows{{2, 105, BigCount(9), 8}};
  CHECK(format_census_table(true, rows, OutputFormat::kMarkdown) ==
        "| g | rooted | sensed | unsensed |\n|---|---|---|---|\n| 2 | 105 | 9 | 8 |\n");
}

TEST_CASE("census json keeps big counts as strings") {
  BigCount big("5189463083084174721816125584");
  const std::vector<CensusRow> rows{{10, big, big, big}};
  const auto doc = nlohmann::json::parse(format_census_table(true, rows, OutputFormat::kJson));
  REQUIRE(doc.is_array());
  CHECK(doc[0]["g"] == 10);
  CHECK(doc[0]["unsensed"].is_string());
  CHECK(doc[0]["unsensed"] == "5189463083084174721816125584");
  const auto nonorientable = nlohmann::json::parse(
      format_census_table(false, {{2, 6, std::nullopt, 2}}, OutputFormat::kJson));
  CHECK_FALSE(nonorientable[0].contains("sensed"));
}

TEST_CASE("orbifold listings") {
  const std::vector<OrbifoldListing> rows{{2, {2, 1, 1, 0, 2}}, {3, {3, 1, 0, 1, 0}}};
  CHECK(format_orbifolds(rows, OutputFormat::kCsv) == "g,l,genus,ns,nv,epsilon\n2,2,1,1,0,2\n3,3,1,0,1,0\n");
  const auto md = format_orbifolds(rows, OutputFormat::kMarkdown);
  CHECK(md.find("| 3 | 3 | 1 | 0 | 1 | 0 * |") != std::string::npos);
  CHECK(md.find("| 2 | 2 | 1 | 1 | 0 | 2 |") != std::string::npos);
  const auto doc = nlohmann::json::parse(format_orbifolds(rows, OutputFormat::kJson));
  CHECK(doc[0]["zero"] == false);
  CHECK(doc[1]["zero"] == true);
  CHECK(doc[1]["epsilon"] == "0");
}

TEST_CASE("output is deterministic") {
  const std::vector<CensusRow> rows{{2, 105, BigCount(9), 8}, {3, 50050, BigCount(1726), 927}};
  for (auto f : {OutputFormat::kJson, OutputFormat::kCsv, OutputFormat::kMarkdown}) {
    CHECK(format_census_table(true, rows, f) == format_census_table(true, rows, f));
  }
}
