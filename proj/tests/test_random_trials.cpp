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

#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "diffuse/error.hpp"
#include "diffuse/graph.hpp"
#include "diffuse/parallel.hpp"
#include "diffuse/random.hpp"
#include "diffuse/trials.hpp"

namespace diffuse {
namespace {

TEST(Rng, PinnedStream) {
  // mt19937_64 output is fixed by the standard; these pin our derivations.
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(trial_seed(42, 0), splitmix64(42 + 0x9e3779b97f4a7c15ULL));
  EXPECT_EQ(trial_seed(42, 3), splitmix64(42 + 4 * 0x9e3779b97f4a7c15ULL));
  Rng a(5489);
  EXPECT_EQ(a.next(), 14514284786278117030ULL);
}

TEST(Rng, UniformStaysInRangeAndHitsEnds) {
  Rng rng(1);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 10000; ++i) {
    const auto x = rng.uniform(-3, 3);
    ASSERT_GE(x, -3);
    ASSERT_LE(x, 3);
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), 7u);
  EXPECT_EQ(rng.uniform(9, 9), 9);
  const auto extreme = rng.uniform(std::numeric_limits<std::int64_t>::min(),
                                   std::numeric_limits<std::int64_t>::max());
  (void)extreme;
  for (int i = 0; i < 1000; ++i) ASSERT_LT(rng.below(13), 13u);
}

TEST(RandomConfig, Examples) {
  const Graph g = generate(Family::kPath, {3});
  EXPECT_EQ(random_config(g, 5, 5, 123), (ChipConfiguration{5, 5, 5}));
  EXPECT_EQ(random_config(g, 0, 9, 77), random_config(g, 0, 9, 77));
  EXPECT_THROW(random_config(g, 2, 1, 0), Error);
}

TEST(RandomConfig, RangeOverManySeeds) {
  const Graph g = generate(Family::kPath, {3});
  std::size_t differ = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto a = random_config(g, 0, 9, seed);
    for (Chips v : a) {
      ASSERT_GE(v, 0);
      ASSERT_LE(v, 9);
    }
    if (a != random_config(g, 0, 9, seed + 1)) ++differ;
  }
  EXPECT_GT(differ, 980u);
}

TEST(RandomGraphs, ConnectedBipartite) {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = random_connected_bipartite(40, rng);
    ASSERT_GE(g.order(), 2u);
    ASSERT_LE(g.order(), 40u);
    ASSERT_TRUE(is_connected(g));
    ASSERT_TRUE(is_bipartite(g));
  }
  EXPECT_THROW(random_connected_bipartite(1, rng), Error);
}

TEST(RandomGraphs, TreeShape) {
  Rng rng(4);
  for (std::size_t n = 1; n < 50; ++n) {
    const Graph t = random_tree(n, rng);
    EXPECT_EQ(t.size(), n - 1);
    EXPECT_TRUE(is_connected(t));
  }
}

TEST(Parallel, CoversEveryIndexOnceAndPropagatesErrors) {
  std::vector<int> hits(1001, 0);
  parallel_for(hits.size(), 4, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) ++hits[i];
  });
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10, 3,
                            [](std::size_t b, std::size_t) {
                              if (b == 0) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
  parallel_for(0, 4, [](std::size_t, std::size_t) { FAIL(); });
}

TEST(Parallel, EnvironmentCapsWorkers) {
  ASSERT_EQ(setenv("DIFFUSE_THREADS", "1", 1), 0);
  EXPECT_EQ(worker_count(), 1u);
  ASSERT_EQ(unsetenv("DIFFUSE_THREADS"), 0);
  EXPECT_GE(worker_count(), 1u);
}

TEST(Trials, SingleVertexIsFixed) {
  const auto s = run_trials(generate(Family::kPath, {1}), "path:1", -5, 5, 5, 9);
  EXPECT_TRUE(s.all_tight);
  EXPECT_EQ(s.period_histogram, (std::map<std::size_t, std::size_t>{{1, 5}}));
  EXPECT_EQ(s.pre_period_histogram, (std::map<std::size_t, std::size_t>{{0, 5}}));
}

TEST(Trials, IndependentOfWorkerCount) {
  const Graph g = generate(Family::kGrid, {4, 5});
  TrialOptions one{kDefaultBudget, 1};
  TrialOptions many{kDefaultBudget, 7};
  const auto a = run_trials(g, "grid:4x5", 1, 50, 23, 42, one);
  const auto b = run_trials(g, "grid:4x5", 1, 50, 23, 42, many);
  ASSERT_EQ(a.results.size(), b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    EXPECT_EQ(a.results[i].seed, b.results[i].seed);
    EXPECT_EQ(a.results[i].report, b.results[i].report);
  }
  EXPECT_EQ(a.period_histogram, b.period_histogram);
  EXPECT_EQ(a.pre_period_histogram, b.pre_period_histogram);
}

TEST(Trials, TrialDependsOnlyOnSeedAndIndex) {
  const Graph g = generate(Family::kCycle, {9});
  const auto small = run_trials(g, "cycle:9", -9, 9, 5, 7);
  const auto large = run_trials(g, "cycle:9", -9, 9, 20, 7);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(small.results[i].report, large.results[i].report);
  }
}

TEST(Trials, ExhaustionIsRecordedNotFatal) {
  const auto s = run_trials(generate(Family::kPath, {30}), "path:30", 0, 100, 4, 1,
                            TrialOptions{2, 1});
  EXPECT_EQ(s.exhausted, 4u);
  EXPECT_FALSE(s.all_tight);
  for (const auto& r : s.results) {
    EXPECT_FALSE(r.report.has_value());
    EXPECT_EQ(r.steps_used, 2u);
  }
}

TEST(Trials, RejectsBadParameters) {
  const Graph g = generate(Family::kPath, {3});
  EXPECT_THROW(run_trials(g, "p", 0, 1, 0, 1), Error);
  EXPECT_THROW(run_trials(g, "p", 1, 0, 3, 1), Error);
}

TEST(Trials, SmallGridIsTight) {
  const auto s = run_trials(generate(Family::kGrid, {10, 20}), "grid:10x20", 1, 200, 10, 42);
  EXPECT_TRUE(s.all_tight);
  EXPECT_EQ(s.exhausted, 0u);
}

}  // namespace
}  // namespace diffuse
