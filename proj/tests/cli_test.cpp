// Copyright 2026 The pfg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pfg/commands.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace pfg::cli {
namespace {

using Q = ExactRational;
using ojson = nlohmann::ordered_json;

const std::string kData = PFG_TEST_DATA_DIR;

ojson as_json(const CommandResult& result, unsigned precision = 4) {
  return ojson::parse(report::render_json(result.record, precision));
}

TEST(TableCommandTest, ReproducesElevenPlayerTable) {
  const std::vector<double> expected = {0.0226, 0.0252, 0.0285, 0.0326,
                                        0.0378, 0.0446, 0.0539, 0.0672,
                                        0.0865, 0.1111, 0.25};
  const auto result = cmd_table(11, "uniform", false, {});
  EXPECT_EQ(result.exit_code, kExitOk);
  const auto rows = as_json(result)["results"]["rows"];
  ASSERT_EQ(rows.size(), 11u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i]["s"], i + 1);
    const double shown = std::stod(rows[i]["nu"]["decimal"].get<std::string>());
    EXPECT_NEAR(shown, expected[i], 5e-5);
  }
  EXPECT_EQ(rows[10]["nu"]["decimal"], "0.2500");
  EXPECT_EQ(rows[0]["nu"]["decimal"], "0.0226");
}

TEST(TableCommandTest, SmallMarkets) {
  const auto rows = as_json(cmd_table(3, "uniform", false, {}))["results"]["rows"];
  EXPECT_EQ(rows[0]["nu"]["decimal"], "0.0865");
  EXPECT_THROW(cmd_table(1, "uniform", false, {}), UsageError);
  EXPECT_THROW(cmd_table(4, "nonsense", false, {}), UsageError);
}

TEST(TableCommandTest, SecondTableWithShift) {
  const std::vector<std::string> expected = {"0.0865", "0.0672", "0.0539", "0.0446",
                                             "0.0378", "0.0326", "0.0285", "0.0252"};
  const auto result = cmd_table(0, "uniform", true, {});
  EXPECT_EQ(result.exit_code, kExitOk);
  const auto doc = as_json(result);
  EXPECT_EQ(doc["results"]["summary"]["shift_consistent"], true);
  const auto rows = doc["results"]["rows"];
  ASSERT_EQ(rows.size(), 8u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i]["n"], i + 3);
    EXPECT_EQ(rows[i]["nu_singleton"]["decimal"], expected[i]);
    EXPECT_EQ(rows[i]["shift_s"], 12 - static_cast<int>(i + 3));
    EXPECT_EQ(rows[i]["shift_equal"], true);
  }
}

TEST(TableCommandTest, MarketParametersScaleWorth) {
  GlobalOptions options;
  options.a = "5";
  options.c = "1/2";
  const auto rows = as_json(cmd_table(2, "uniform", false, options))["results"]["rows"];
  EXPECT_EQ(rows[0]["nu"]["exact"], "1/9");
  EXPECT_EQ(rows[0]["v"]["exact"], "9/4");
  options.c = "5";
  EXPECT_THROW(cmd_table(2, "uniform", false, options), DomainError);
}

TEST(TableCommandTest, BeliefFile) {
  const auto rows =
      as_json(cmd_table(4, "file:" + kData + "/belief_n4.json", false, {}))["results"]["rows"];
  ASSERT_EQ(rows.size(), 4u);
  // s = 2 weights 3/4, 1/4: h = 3/8 + 1/12 = 11/24, nu = (11/35)^2.
  EXPECT_EQ(rows[1]["nu"]["exact"], "121/1225");
  EXPECT_THROW(cmd_table(5, "file:" + kData + "/belief_n4.json", false, {}),
               ValidationError);
  EXPECT_THROW(cmd_table(4, "file:" + kData + "/missing.json", false, {}), ParseError);
}

TEST(ScanCommandTest, Verdicts) {
  const auto empty = as_json(cmd_scan(3, 10, "uniform", {}));
  for (const auto& row : empty["results"]["rows"]) EXPECT_EQ(row["core"], "empty");
  EXPECT_EQ(empty["results"]["summary"]["empty_count"], 8);

  const auto full = as_json(cmd_scan(11, 30, "uniform", {}));
  for (const auto& row : full["results"]["rows"]) {
    EXPECT_EQ(row["core"], "nonempty");
    EXPECT_TRUE(row["violating_sizes"].empty());
    EXPECT_EQ(row["margins"].size(), row["n"].get<std::size_t>());
  }
  const auto gamma = as_json(cmd_scan(2, 2, "gamma", {}));
  EXPECT_EQ(gamma["results"]["rows"][0]["core"], "nonempty");

  EXPECT_THROW(cmd_scan(2, 201, "uniform", {}), SizeLimitError);
  EXPECT_THROW(cmd_scan(1, 5, "uniform", {}), UsageError);
}

TEST(CompareCommandTest, Dominance) {
  const auto a = as_json(cmd_compare(11, "uniform", "gamma", {}));
  EXPECT_EQ(a["results"]["summary"]["dominates"], true);
  EXPECT_EQ(a["results"]["summary"]["consistency"], "ok");
  EXPECT_EQ(a["results"]["rows"].size(), 11u);
  EXPECT_EQ(a["results"]["rows"][0]["h_z"]["exact"], "1/11");
  EXPECT_EQ(as_json(cmd_compare(11, "gamma", "uniform", {}))["results"]["summary"]["dominates"],
            false);
  EXPECT_EQ(as_json(cmd_compare(11, "uniform", "uniform", {}))["results"]["summary"]["dominates"],
            false);
}

TEST(CheckAllocationCommandTest, Verdicts) {
  const auto in = cmd_check_allocation(11, "uniform", kData + "/equal_split_11.json", {});
  EXPECT_EQ(in.exit_code, kExitOk);
  EXPECT_EQ(as_json(in)["results"]["summary"]["in_core"], true);

  const auto out = cmd_check_allocation(5, "uniform", kData + "/equal_split_5.json", {});
  EXPECT_EQ(out.exit_code, kExitCheckFailed);
  const auto summary = as_json(out)["results"]["summary"];
  EXPECT_EQ(summary["in_core"], false);
  EXPECT_EQ(summary["violating_size"], 1);
  EXPECT_EQ(parse_rational(summary["deficit"]["exact"].get<std::string>()),
            build_game(5, uniform_family()).nu(1) - Q(1, 20));

  EXPECT_THROW(cmd_check_allocation(5, "uniform", kData + "/not_efficient_5.json", {}),
               EfficiencyError);
  EXPECT_THROW(cmd_check_allocation(5, "uniform", kData + "/malformed_payoffs.json", {}),
               ParseError);
  EXPECT_THROW(cmd_check_allocation(4, "uniform", kData + "/equal_split_5.json", {}),
               AllocationLengthError);
}

TEST(VerifyCommandTest, SuitesPass) {
  const auto result = cmd_verify(10, {});
  EXPECT_EQ(result.exit_code, kExitOk);
  const auto rows = as_json(result)["results"]["rows"];
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& row : rows) {
    EXPECT_EQ(row["status"], "pass") << row["suite"];
    EXPECT_GT(row["checks"].get<long long>(), 0);
  }
  EXPECT_THROW(cmd_verify(20, {}), SizeLimitError);
}

// Splits CSV lines after the header into cells.
std::vector<std::vector<std::string>> csv_rows(const std::string& csv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.starts_with("#")) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream fields(line);
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    if (line.ends_with(",")) cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

TEST(OutputTest, CsvAndJsonCarryTheSameNumbers) {
  const auto result = cmd_table(11, "uniform", false, {});
  const auto json_rows = as_json(result, 6)["results"]["rows"];
  const auto rows = csv_rows(report::render_csv(result.record, 6));
  ASSERT_EQ(rows.size(), json_rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ASSERT_EQ(rows[i].size(), 5u);
    EXPECT_EQ(rows[i][0], std::to_string(json_rows[i]["s"].get<int>()));
    EXPECT_EQ(rows[i][1], json_rows[i]["nu"]["decimal"]);
    EXPECT_EQ(rows[i][2], json_rows[i]["nu"]["exact"]);
    EXPECT_EQ(rows[i][3], json_rows[i]["v"]["decimal"]);
    EXPECT_EQ(rows[i][4], json_rows[i]["v"]["exact"]);
  }
}

TEST(OutputTest, DecimalsRoundTripFromExactField) {
  for (unsigned precision : {0u, 2u, 4u, 9u}) {
    const auto rows = as_json(cmd_table(13, "uniform", false, {}), precision)["results"]["rows"];
    for (const auto& row : rows) {
      const Q exact = parse_rational(row["nu"]["exact"].get<std::string>());
      EXPECT_EQ(to_decimal(exact, precision), row["nu"]["decimal"]);
    }
  }
}

TEST(OutputTest, Deterministic) {
  for (auto format : {report::Format::kJson, report::Format::kCsv, report::Format::kTable}) {
    const std::string a = report::render(cmd_scan(2, 25, "uniform", {}).record, format, 4);
    const std::string b = report::render(cmd_scan(2, 25, "uniform", {}).record, format, 4);
    EXPECT_EQ(a, b);
  }
}

}  // namespace
}  // namespace pfg::cli
