// Copyright 2026 The diffuse Authors
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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "diffuse/error.hpp"
#include "diffuse/io.hpp"
#include "diffuse/oracles.hpp"
#include "support/generators.hpp"

namespace diffuse {
namespace {

class TempFile {
 public:
  explicit TempFile(const std::string& contents)
      : path_(std::filesystem::temp_directory_path() /
              ("diffuse_io_" + std::to_string(counter_++) + ".txt")) {
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

TEST(LoadGraph, SpecOrFile) {
  EXPECT_EQ(load_graph("wheel:6"), generate(Family::kWheel, {6}));
  TempFile f("6 10\n0 1\n0 2\n0 4\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n3 4\n");
  EXPECT_EQ(load_graph(f.path()), testing::worked_example_graph());
}

TEST(ParseConfiguration, TextAndJson) {
  EXPECT_EQ(parse_configuration("6 10 5 0 4 8\n"), testing::worked_example_start());
  EXPECT_EQ(parse_configuration(" [1, -2, 3] "), (ChipConfiguration{1, -2, 3}));
  EXPECT_THROW(parse_configuration("1 two 3"), Error);
  EXPECT_THROW(parse_configuration("[1, 2.5]"), Error);
  EXPECT_THROW(parse_configuration("[1, 2"), Error);
}

TEST(LoadConfiguration, Presets) {
  const Graph p4 = generate(Family::kPath, {4});
  EXPECT_EQ(load_configuration("full-degree", p4), (ChipConfiguration{1, 2, 2, 1}));
  EXPECT_EQ(load_configuration("millpond:2", p4), (ChipConfiguration{0, 0, 1, 0}));
  EXPECT_EQ(load_configuration("qf:1", p4), (ChipConfiguration{1, -2, 1, 0}));
  EXPECT_EQ(load_configuration("zero", p4), ChipConfiguration::constant(4, 0));
  EXPECT_EQ(load_configuration("const:-3", p4), ChipConfiguration::constant(4, -3));
  EXPECT_EQ(load_configuration("random:1..200", p4, 5), random_config(p4, 1, 200, 5));
  EXPECT_EQ(load_configuration("[4,3,2,1]", p4), (ChipConfiguration{4, 3, 2, 1}));
  TempFile f("1 1 1 1");
  EXPECT_EQ(load_configuration(f.path(), p4), ChipConfiguration::constant(4, 1));
}

TEST(LoadConfiguration, Errors) {
  const Graph p4 = generate(Family::kPath, {4});
  auto code = [&](const std::string& spec) {
    try {
      load_configuration(spec, p4);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kParseError;
  };
  EXPECT_EQ(code("[1,2,3]"), ErrorCode::kLengthMismatch);
  EXPECT_EQ(code("millpond:9"), ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(code("random:5..1"), ErrorCode::kInvalidRange);
  EXPECT_THROW(load_configuration("no-such-preset", p4), Error);
  EXPECT_THROW(load_configuration("const:", p4), Error);
}

TEST(ChipRange, Parse) {
  EXPECT_EQ(parse_chip_range("1..200"), (std::pair<Chips, Chips>{1, 200}));
  EXPECT_EQ(parse_chip_range("-10..-2"), (std::pair<Chips, Chips>{-10, -2}));
  EXPECT_THROW(parse_chip_range("1-200"), Error);
  EXPECT_THROW(parse_chip_range("9..1"), Error);
}

TEST(Json, PeriodReport) {
  const auto doc = to_json(detect_period(testing::worked_example_graph(), testing::worked_example_start()));
  EXPECT_EQ(doc.dump(),
            R"({"schema":"diffuse.period/1","pre_period":9,"period":2,)"
            R"("class":"tight_period2","steps_used":11})");
  const auto ex = to_json(detect_period(generate(Family::kPath, {3}), {0, 0, 3}, 1));
  EXPECT_EQ(ex["class"], "budget_exhausted");
  EXPECT_EQ(ex["last"], nlohmann::ordered_json::parse("[0,1,2]"));
}

TEST(Json, TrialSummary) {
  const auto s = run_trials(generate(Family::kPath, {3}), "path:3", 0, 3, 4, 1);
  const auto doc = to_json(s);
  EXPECT_EQ(doc["schema"], "diffuse.trials/1");
  EXPECT_EQ(doc["per_trial"].size(), 4u);
  EXPECT_EQ(doc["all_tight"], true);
  EXPECT_FALSE(to_json(s, false).contains("per_trial"));
  // Byte-identical across runs.
  EXPECT_EQ(doc.dump(), to_json(run_trials(generate(Family::kPath, {3}), "path:3", 0, 3, 4, 1)).dump());
}

TEST(Json, StateGraphAndCsv) {
  const auto r = build_state_graph(generate(Family::kPath, {2}), ConfigWindow::nonnegative(2));
  const auto doc = to_json(r);
  EXPECT_EQ(doc["schema"], "diffuse.stategraph/1");
  EXPECT_EQ(doc["node_count"], 3);
  EXPECT_EQ(doc["conjecture_holds"], true);
  EXPECT_EQ(doc["cycle_length_histogram"]["1"], 1);
  std::ostringstream csv;
  write_successor_csv(csv, r);
  EXPECT_EQ(csv.str(),
            "source,target\n\"(0,2)\",\"(1,1)\"\n\"(1,1)\",\"(1,1)\"\n\"(2,0)\",\"(1,1)\"\n");
}

TEST(Json, OracleReport) {
  OracleReport r;
  r.suite = "qf";
  r.cases_checked = 3;
  r.mismatches = 1;
  r.counterexamples = {"x"};
  const auto doc = to_json(r);
  EXPECT_EQ(doc["schema"], "diffuse.oracle/1");
  EXPECT_EQ(doc["passed"], false);
  EXPECT_EQ(doc["counterexamples"][0], "x");
}

}  // namespace
}  // namespace diffuse
