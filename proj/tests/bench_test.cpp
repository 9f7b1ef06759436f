// Copyright 2026 The rsscred Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "rsscred/bench.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "rsscred/bls12_381.hpp"
#include "rsscred/errors.hpp"
#include "rsscred/mock_backend.hpp"

namespace rsscred::bench {
namespace {

BenchConfig quick(std::vector<std::uint32_t> n, std::vector<double> ratios) {
  BenchConfig c;
  c.message_lengths = std::move(n);
  c.keep_ratios = std::move(ratios);
  c.warmup = 1;
  return c;
}

TEST(BenchConfigTest, Validation) {
  BenchConfig c;
  EXPECT_NO_THROW(c.validate());
  c.iterations = 0;
  EXPECT_THROW(c.validate(), ConfigError);
  c.iterations = kMinIterations - 1;
  EXPECT_THROW(c.validate(), ConfigError);
  c = BenchConfig{};
  c.message_lengths = {0};
  EXPECT_THROW(c.validate(), ConfigError);
  c = BenchConfig{};
  c.keep_ratios = {0.0};
  EXPECT_THROW(c.validate(), ConfigError);
  c.keep_ratios = {1.5};
  EXPECT_THROW(c.validate(), ConfigError);
  c = BenchConfig{};
  c.iterations = 0;
  EXPECT_THROW(run_bench<MockBackend>(c), ConfigError);
}

TEST(BenchTest, FiveCategoriesAndScenarioKeepCount) {
  const auto reports = run_bench<Bls12381>(quick({5}, {0.4}));
  ASSERT_EQ(reports.size(), 1u);
  const auto& r = reports[0];
  EXPECT_EQ(r.backend, "bls12-381");
  EXPECT_EQ(r.n, 5u);
  EXPECT_EQ(r.kept, 2u);
  EXPECT_GE(r.iterations, kMinIterations);
  ASSERT_EQ(r.rows.size(), kCategories.size());
  for (std::size_t k = 0; k < kCategories.size(); ++k) {
    EXPECT_EQ(r.rows[k].category, kCategories[k]);
    EXPECT_GT(r.rows[k].mean_ms, 0.0);
  }
  EXPECT_FALSE(r.row("verifying signature").size_bytes.has_value());
  EXPECT_EQ(r.row("signature").size_bytes, r.row("derived signature").size_bytes);
  EXPECT_THROW(r.row("nonsense"), std::out_of_range);
}

TEST(BenchTest, DerivedSizeIsEqualAcrossRatios) {
  const auto reports = run_bench<MockBackend>(quick({5}, {0.2, 0.4, 0.6, 1.0}));
  ASSERT_EQ(reports.size(), 4u);
  EXPECT_EQ(reports[0].kept, 1u);
  EXPECT_EQ(reports[3].kept, 5u);
  for (const auto& r : reports) {
    EXPECT_EQ(r.row("derived signature").size_bytes,
              reports[0].row("derived signature").size_bytes);
  }
}

TEST(BenchTest, PublicKeyGrowsAndSignatureStaysConstant) {
  const auto reports = run_bench<Bls12381>(quick({2, 4, 8}, {0.5}));
  ASSERT_EQ(reports.size(), 3u);
  for (std::size_t k = 1; k < reports.size(); ++k) {
    EXPECT_GT(*reports[k].row("public key").size_bytes,
              *reports[k - 1].row("public key").size_bytes);
    EXPECT_EQ(reports[k].row("derived signature").size_bytes,
              reports[0].row("derived signature").size_bytes);
    EXPECT_EQ(reports[k].row("private key").size_bytes,
              reports[0].row("private key").size_bytes);
  }
}

TEST(BenchTest, SizesAreDeterministicUnderASeed) {
  const auto a = run_bench<MockBackend>(quick({3, 6}, {0.5}));
  const auto b = run_bench<MockBackend>(quick({3, 6}, {0.5}));
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (std::size_t j = 0; j < a[k].rows.size(); ++j) {
      EXPECT_EQ(a[k].rows[j].size_bytes, b[k].rows[j].size_bytes);
    }
  }
}

TEST(BenchTest, DeriveMedianDoesNotDecreaseWithN) {
  // Loose sanity check: 10% noise band on medians of 30 runs.
  const auto reports = run_bench<Bls12381>(quick({2, 8, 16}, {0.5}));
  for (std::size_t k = 1; k < reports.size(); ++k) {
    EXPECT_GE(reports[k].row("derived signature").median_ms,
              0.9 * reports[k - 1].row("derived signature").median_ms)
        << "n=" << reports[k].n;
  }
}

class EmitTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    report_ = new BenchReport(run_bench<MockBackend>(quick({4}, {0.5}))[0]);
  }
  static void TearDownTestSuite() { delete report_; }
  static BenchReport* report_;
};
BenchReport* EmitTest::report_ = nullptr;

TEST_F(EmitTest, TextHasPaperColumnsAndRowLabels) {
  const auto text = emit_table(*report_, Format::kText);
  EXPECT_NE(text.find("Category"), std::string::npos);
  EXPECT_NE(text.find("Runtime (ms)"), std::string::npos);
  EXPECT_NE(text.find("Size (bytes)"), std::string::npos);
  for (auto c : kCategories) EXPECT_NE(text.find(c), std::string::npos) << c;
  EXPECT_NE(text.find("N/A"), std::string::npos);
}

TEST_F(EmitTest, CsvHasFourColumnsAndRoundTrips) {
  const auto csv = emit_table(*report_, Format::kCsv);
  std::istringstream in(csv);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 3) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 6);  // header + five categories
  EXPECT_EQ(report_from_csv(csv), *report_);
}

TEST_F(EmitTest, JsonRoundTrips) {
  const auto json = emit_table(*report_, Format::kJson);
  EXPECT_EQ(report_from_json(nlohmann::json::parse(json)), *report_);
  EXPECT_THROW(report_from_json(nlohmann::json::object()), ConfigError);
}

TEST_F(EmitTest, MultipleTablesAndFormatNames) {
  std::vector<BenchReport> two = {*report_, *report_};
  const auto json = nlohmann::json::parse(emit_tables(two, Format::kJson));
  EXPECT_EQ(json.size(), 2u);
  EXPECT_EQ(parse_format("text"), Format::kText);
  EXPECT_EQ(parse_format("csv"), Format::kCsv);
  EXPECT_EQ(parse_format("json"), Format::kJson);
  EXPECT_THROW(parse_format("xml"), ConfigError);
}

TEST(SignificantTest, RoundsToTwoFigures) {
  EXPECT_EQ(significant(588.22), "590");
  EXPECT_EQ(significant(7.01), "7.0");
  EXPECT_EQ(significant(0.012345), "0.012");
  EXPECT_EQ(significant(310.77, 3), "311");
}

}  // namespace
}  // namespace rsscred::bench
