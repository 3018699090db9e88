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

#ifndef DIFFUSE_TRIALS_HPP_
#define DIFFUSE_TRIALS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diffuse/dynamics.hpp"
#include "diffuse/graph.hpp"
#include "diffuse/periodicity.hpp"

namespace diffuse {

struct TrialResult {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::optional<PeriodReport> report;  // empty when the budget ran out
  std::size_t steps_used = 0;
};

struct TrialSummary {
  std::string graph;
  Chips lo = 0;
  Chips hi = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  std::vector<TrialResult> results;
  std::map<std::size_t, std::size_t> period_histogram;
  std::map<std::size_t, std::size_t> pre_period_histogram;
  std::size_t exhausted = 0;
  bool all_tight = true;  // every trial finished with period 1 or 2
};

struct TrialOptions {
  std::size_t budget = kDefaultBudget;
  std::size_t workers = 0;  // 0: worker_count()
};

// Trial i starts from random_config(g, lo, hi, trial_seed(seed, i)). The
// summary does not depend on the worker count. Throws kInvalidParams for
// zero trials, kInvalidRange for lo > hi.
TrialSummary run_trials(const Graph& g, const std::string& graph_label, Chips lo, Chips hi,
                        std::size_t trials, std::uint64_t seed,
                        const TrialOptions& options = {});

}  // namespace diffuse

#endif  // DIFFUSE_TRIALS_HPP_
