#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "fuzzywin/io.hpp"

using namespace fuzzywin;

namespace {

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

struct Rendered {
  std::vector<AttributedRecord> records;
  LedgerSummary summary;
};

Rendered evaluate_fixture(const char* name, const DerivationRule& rule) {
  const auto parsed = io::parse_deal_csv(fixtures::read(name));
  auto run = run_ledger(rule, parsed.records);
  const auto summary = summarize(run.attributed);
  return {std::move(run.attributed), summary};
}

}  // namespace

TEST_CASE("parse minimal file") {
  const auto parsed = io::parse_deal_csv("label,reference_price\na,1.5\nb,2\n");
  REQUIRE(parsed.records.size() == 2);
  CHECK(parsed.records[0].label == "a");
  CHECK(parsed.records[0].reference_price == 1.5);
  CHECK(!parsed.records[0].cost_price);
  CHECK(!parsed.records[0].settled_price);
  CHECK(parsed.records[1].reference_price == 2);
  CHECK(parsed.warnings.empty());
}

TEST_CASE("parse details") {
  SUBCASE("columns by name, unknown ignored with warning") {
    const auto parsed = io::parse_deal_csv("source,settled_price,label,cost_price\nx,3,\"a, b\",1\r\n\r\n");
    REQUIRE(parsed.records.size() == 1);
    CHECK(parsed.records[0].label == "a, b");
    CHECK(parsed.records[0].settled_price == 3);
    CHECK(parsed.records[0].cost_price == 1);
    REQUIRE(parsed.warnings.size() == 1);
    CHECK(parsed.warnings[0].find("source") != std::string::npos);
  }
  SUBCASE("negative values and BOM") {
    const auto parsed = io::parse_deal_csv("\xEF\xBB\xBFlabel,cost_price\nz,-45\n");
    REQUIRE(parsed.records.size() == 1);
    CHECK(parsed.records[0].cost_price == -45);
  }
  SUBCASE("quoted label with embedded quote") {
    const auto parsed = io::parse_deal_csv("label\n\"say \"\"hi\"\"\"\n");
    CHECK(parsed.records.at(0).label == "say \"hi\"");
  }
}

TEST_CASE("parse errors") {
  auto expect = [](std::string_view text, const char* fragment) {
    try {
      io::parse_deal_csv(text);
      FAIL("expected parse error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::parse_error);
      CAPTURE(e.what());
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  expect("", "empty");
  expect("\n\n", "empty");
  expect("cost_price\n1\n", "label");
  expect("label,cost_price\na,1\nb,1.2.3\n", "line 3, column 'cost_price'");
  expect("label,cost_price\na,1,000\n", "line 2");
  expect("label,settled_price\na,nan\n", "settled_price");
  expect("label\n\"open\n", "unterminated");
}

TEST_CASE("shipped fixtures") {
  const auto oil = io::parse_deal_csv(fixtures::read(fixtures::kOil));
  REQUIRE(oil.records.size() == 50);
  CHECK(oil.records[0].label == "Dec 30");
  CHECK(oil.records[0].reference_price == 68.44);
  CHECK(oil.records.back().label == "Nov 30");

  const auto ore = io::parse_deal_csv(fixtures::read(fixtures::kIronOre));
  REQUIRE(ore.records.size() == 7);
  for (const auto& r : ore.records) {
    CHECK(r.cost_price);
    CHECK(r.reference_price);
    CHECK(r.settled_price);
  }
}

TEST_CASE("json record schema") {
  const auto single = evaluate_record(DerivationRule::columns(), {"one", 10, 60, 35});
  const auto s = summarize(std::span(&single, 1));
  const auto doc = nlohmann::json::parse(io::render_output(std::span(&single, 1), s, io::Format::json));
  CHECK(doc.at("schema_version") == 1);
  const auto& rec = doc.at("records").at(0);
  for (const char* key : {"label", "swp_raw", "swp_percent", "bwp_raw", "bwp_percent", "zone", "attribution"}) {
    CHECK_MESSAGE(rec.contains(key), key);
  }
  CHECK(rec.at("label") == "one");
  CHECK(rec.at("swp_raw") == 0.5);
  CHECK(rec.at("swp_percent") == 50);
  CHECK(rec.at("zone") == "fuzzy_win_win");
  CHECK(rec.at("attribution") == "tie");
  CHECK(doc.at("summary").at("tie_count") == 1);
}

TEST_CASE("text rendering of the iron ore ledger") {
  const auto r = evaluate_fixture(fixtures::kIronOre, DerivationRule::columns());
  const std::string text = io::render_output(r.records, r.summary, io::Format::text);
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  REQUIRE(lines.size() == 1 + 7 + 1 + 1);
  const std::string& avg = lines[8];
  CHECK(avg.rfind("AVG", 0) == 0);
  CHECK(avg.find("61% 39%") != std::string::npos);
  CHECK(lines[1].find("54% 46%") != std::string::npos);
  // Columns align: every table row has the SWP column ending at the same offset.
  const auto pos = lines[0].find("SWP");
  for (std::size_t i = 1; i <= 8; ++i) CHECK(lines[i].at(pos + 2) == '%');
}

TEST_CASE("csv rendering of the oil ledger") {
  const auto r = evaluate_fixture(fixtures::kOil, DerivationRule::offset(10.57, -16));
  const std::string csv = io::render_output(r.records, r.summary, io::Format::csv);
  CHECK(count_lines(csv) == 1 + 51);
  CHECK(csv.find("\nAVG,") != std::string::npos);
  CHECK(csv.find("\nAVG,,,,,,,45,,55,,,27,28\n") != std::string::npos);
}

TEST_CASE("render, re-parse round trip is lossless") {
  for (const char* name : {fixtures::kOil, fixtures::kIronOre}) {
    CAPTURE(name);
    const auto original = io::parse_deal_csv(fixtures::read(name)).records;
    const auto r = evaluate_fixture(name, DerivationRule::columns());
    const auto reparsed = io::parse_deal_csv(io::render_output(r.records, r.summary, io::Format::csv));
    CHECK(reparsed.records == original);
  }
}

TEST_CASE("full-precision decimals survive the csv round trip") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  std::vector<DealRecord> records;
  for (int i = 0; i < 500; ++i) {
    const double lo = u(rng);
    const double hi = lo + std::abs(u(rng)) + 1e-3;
    records.push_back({"r" + std::to_string(i), lo, hi, u(rng)});
  }
  const auto run = run_ledger(DerivationRule::columns(), records);
  REQUIRE(run.attributed.size() == records.size());
  const auto csv = io::render_output(run.attributed, summarize(run.attributed), io::Format::csv);
  CHECK(io::parse_deal_csv(csv).records == records);
}

TEST_CASE("rendering is deterministic") {
  for (auto format : {io::Format::text, io::Format::csv, io::Format::json}) {
    const auto a = evaluate_fixture(fixtures::kOil, DerivationRule::offset(10.57, -16));
    const auto b = evaluate_fixture(fixtures::kOil, DerivationRule::offset(10.57, -16));
    CHECK(io::render_output(a.records, a.summary, format) == io::render_output(b.records, b.summary, format));
  }
}

TEST_CASE("format names") {
  CHECK(io::parse_format("json") == io::Format::json);
  CHECK_THROWS_AS(io::parse_format("xml"), Error);
  CHECK(io::format_number(46.2) == "46.2");
  CHECK(io::format_number(-16) == "-16");
}
