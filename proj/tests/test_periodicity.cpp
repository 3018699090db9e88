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

#include <variant>

#include "diffuse/dynamics.hpp"
#include "diffuse/error.hpp"
#include "diffuse/graph.hpp"
#include "diffuse/oracles.hpp"
#include "diffuse/periodicity.hpp"
#include "support/generators.hpp"

namespace diffuse {
namespace {

PeriodReport report_of(const Graph& g, const ChipConfiguration& c,
                       std::size_t budget = kDefaultBudget) {
  auto outcome = detect_period(g, c, budget);
  if (!std::holds_alternative<PeriodReport>(outcome)) {
    ADD_FAILURE() << "budget exhausted for " << testing::describe(g, c);
    return {};
  }
  return std::get<PeriodReport>(outcome);
}

TEST(DetectPeriod, WorkedExample) {
  const auto r = report_of(testing::worked_example_graph(), testing::worked_example_start(), 100);
  EXPECT_EQ(r.pre_period, 9u);
  EXPECT_EQ(r.period, 2u);
  EXPECT_EQ(r.classification, PeriodClass::kTightPeriod2);
  EXPECT_EQ(r.steps_used, 11u);
}

TEST(DetectPeriod, ConstantIsFixed) {
  const auto r = report_of(generate(Family::kWheel, {7}), ChipConfiguration::constant(7, 4), 10);
  EXPECT_EQ(r.pre_period, 0u);
  EXPECT_EQ(r.period, 1u);
  EXPECT_EQ(r.classification, PeriodClass::kFixed);
  EXPECT_TRUE(r.tight());
}

TEST(DetectPeriod, CliqueWithPendants) {
  const Graph g = generate(Family::kCliqueWithPendants, {4, 4});
  const auto r = report_of(g, full_degree_config(g), 100);
  EXPECT_EQ(r.pre_period, 1u);
  EXPECT_EQ(r.period, 2u);
}

TEST(DetectPeriod, BudgetExhaustedCarriesLastState) {
  const Graph g = testing::worked_example_graph();
  const auto outcome = detect_period(g, testing::worked_example_start(), 5);
  ASSERT_TRUE(std::holds_alternative<BudgetExhausted>(outcome));
  const auto& ex = std::get<BudgetExhausted>(outcome);
  EXPECT_EQ(ex.steps_used, 5u);
  EXPECT_EQ(ex.last, trajectory(g, testing::worked_example_start(), 5).back());
  // Resuming from `last` finishes the job.
  const auto resumed = report_of(g, ex.last);
  EXPECT_EQ(resumed.pre_period, 4u);
  EXPECT_EQ(resumed.period, 2u);
}

TEST(DetectPeriod, ExactBudgetSuffices) {
  // The revisit of c_9 happens at step 11.
  EXPECT_TRUE(std::holds_alternative<PeriodReport>(
      detect_period(testing::worked_example_graph(), testing::worked_example_start(), 11)));
  EXPECT_TRUE(std::holds_alternative<BudgetExhausted>(
      detect_period(testing::worked_example_graph(), testing::worked_example_start(), 10)));
}

TEST(DetectPeriod, ZeroBudgetRejected) {
  EXPECT_THROW(detect_period(generate(Family::kPath, {2}), {0, 0}, 0), Error);
}

TEST(DetectPeriod, MatchesBruteForceDefinition) {
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const Graph g = testing::any_graph(rng, 12);
    const auto c = testing::any_config(g, rng, -6, 6);
    const auto r = report_of(g, c);
    const auto traj = trajectory(g, c, r.pre_period + r.period);
    ASSERT_EQ(traj[r.pre_period], traj[r.pre_period + r.period]);
    // No earlier pair (s, s + q) with q <= period repeats.
    for (std::size_t s = 0; s <= r.pre_period; ++s) {
      for (std::size_t q = 1; s + q < r.pre_period + r.period; ++q) {
        ASSERT_NE(traj[s], traj[s + q]) << testing::describe(g, c);
      }
    }
  }
}

TEST(DetectPeriod, ShiftInvariantAndDeterministic) {
  Rng rng(8);
  for (int i = 0; i < 300; ++i) {
    const Graph g = testing::any_graph(rng, 15);
    const auto c = testing::any_config(g, rng, -10, 10);
    const auto r = report_of(g, c);
    EXPECT_EQ(report_of(g, c), r);
    EXPECT_EQ(report_of(g, shift(c, rng.uniform(-500, 500))), r);
  }
}

TEST(IsFixed, Examples) {
  EXPECT_TRUE(is_fixed(generate(Family::kPath, {5}), ChipConfiguration::constant(5, 2)));
  EXPECT_FALSE(is_fixed(generate(Family::kPath, {3}), {0, 1, 3}));
  EXPECT_TRUE(is_fixed(generate(Family::kPath, {2}), {3, 3}));
  // Disconnected: constant per component is enough.
  EXPECT_TRUE(is_fixed(Graph::from_edge_list(4, {{0, 1}, {2, 3}}), {1, 1, 5, 5}));
  EXPECT_THROW(is_fixed(generate(Family::kPath, {3}), {1}), Error);
}

TEST(PropertyPlus, Examples) {
  EXPECT_TRUE(has_property_plus(generate(Family::kCycle, {5}), ChipConfiguration::constant(5, 1)));
  EXPECT_TRUE(has_property_plus(generate(Family::kPath, {4}), {1, 2, 2, 1}));
  EXPECT_FALSE(has_property_plus(generate(Family::kPath, {3}), {0, 0, 3}));
}

TEST(PropertyPlus, FirstTime) {
  const Graph p6 = generate(Family::kPath, {6});
  EXPECT_EQ(first_property_plus_time(p6, full_degree_config(p6), 10), 1u);
  EXPECT_EQ(first_property_plus_time(generate(Family::kPath, {3}), {4, 4, 4}, 10), 0u);
  EXPECT_EQ(
      first_property_plus_time(testing::worked_example_graph(), testing::worked_example_start(), 100),
      9u);
  EXPECT_EQ(
      first_property_plus_time(testing::worked_example_graph(), testing::worked_example_start(), 8),
      std::nullopt);
}

TEST(PropertyPlus, SoundAndCompleteOnRandomInstances) {
  Rng rng(9);
  for (int i = 0; i < 500; ++i) {
    const Graph g = testing::any_graph(rng, 20);
    const auto c = testing::any_config(g, rng, -10, 10);
    const auto r = report_of(g, c);
    const auto traj = trajectory(g, c, r.pre_period + 2);
    // Soundness along the whole prefix.
    for (std::size_t t = 0; t <= r.pre_period; ++t) {
      if (has_property_plus(g, traj[t])) {
        ASSERT_EQ(fire(g, fire(g, traj[t])), traj[t]) << testing::describe(g, c);
      }
    }
    if (r.tight()) {
      ASSERT_TRUE(has_property_plus(g, traj[r.pre_period])) << testing::describe(g, c);
      const auto first = first_property_plus_time(g, c, r.pre_period);
      ASSERT_TRUE(first.has_value());
      EXPECT_LE(*first, r.pre_period);
    }
  }
}

}  // namespace
}  // namespace diffuse
