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

#include <algorithm>
#include <cctype>
#include <string>

#include "diffuse/error.hpp"
#include "diffuse/graph.hpp"
#include "diffuse/verify.hpp"

namespace diffuse {
namespace {

TEST(Verify, SuiteNames) {
  const auto names = suite_names();
  for (const char* expected : {"path-full-degree", "millpond", "qf", "star-bound",
                               "two-value-kn", "bounds:deg2_edge", "bounds:twin_pair",
                               "bounds:twin_lock", "bounds:wheel_rim", "bounds:wheel_hub"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), expected), names.end()) << expected;
  }
}

TEST(Verify, UnknownSuite) {
  try {
    verify_oracle("bounds:nothing");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownSuite);
  }
  EXPECT_THROW(verify_oracle("fourier"), Error);
}

class EverySuite : public ::testing::TestWithParam<std::string> {};

TEST_P(EverySuite, PassesWithSmallParameters) {
  SuiteParams p;
  p.seed = 3;
  p.cases = 20;
  p.max_vertices = 16;
  p.max_n = 24;
  p.steps = 40;
  const auto r = verify_oracle(GetParam(), p);
  EXPECT_TRUE(r.passed()) << (r.counterexamples.empty() ? "" : r.counterexamples.front());
  EXPECT_GT(r.cases_checked, 0u);
  EXPECT_EQ(r.suite, GetParam());
}

INSTANTIATE_TEST_SUITE_P(Suites, EverySuite, ::testing::ValuesIn(suite_names()),
                         [](const auto& info) {
                           std::string name = info.param;
                           for (char& ch : name) {
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           }
                           return name;
                         });

TEST(Verify, PathFullDegreeFullRange) {
  SuiteParams p;
  p.min_n = 3;
  p.max_n = 64;
  EXPECT_TRUE(verify_oracle("path-full-degree", p).passed());
}

TEST(Verify, MillpondOnTrees) {
  SuiteParams p;
  p.cases = 100;
  p.max_vertices = 30;
  EXPECT_TRUE(verify_oracle("millpond", p).passed());
}

TEST(Verify, Deg2EdgeOnGivenCycle) {
  SuiteParams p;
  p.graph = generate(Family::kCycle, {12});
  p.cases = 50;
  const auto r = verify_oracle("bounds:deg2_edge", p);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cases_checked, 50u);
}

TEST(Verify, BoundOnUnsuitableGraphIsAnError) {
  SuiteParams p;
  p.graph = generate(Family::kComplete, {5});
  EXPECT_THROW(verify_oracle("bounds:deg2_edge", p), Error);
}

}  // namespace
}  // namespace diffuse
