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

#include "diffuse/trials.hpp"

#include <variant>

#include "diffuse/error.hpp"
#include "diffuse/parallel.hpp"
#include "diffuse/random.hpp"

namespace diffuse {

TrialSummary run_trials(const Graph& g, const std::string& graph_label, Chips lo, Chips hi,
                        std::size_t trials, std::uint64_t seed,
                        const TrialOptions& options) {
  if (trials == 0) throw Error(ErrorCode::kInvalidParams, "need at least one trial");
  if (lo > hi) throw Error(ErrorCode::kInvalidRange, "chip range lo > hi");

  TrialSummary summary;
  summary.graph = graph_label;
  summary.lo = lo;
  summary.hi = hi;
  summary.trials = trials;
  summary.seed = seed;
  summary.budget = options.budget;
  summary.results.resize(trials);

  const std::size_t workers = options.workers == 0 ? worker_count() : options.workers;
  parallel_for(trials, workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      TrialResult& r = summary.results[i];
      r.index = i;
      r.seed = trial_seed(seed, i);
      const auto outcome = detect_period(g, random_config(g, lo, hi, r.seed), options.budget);
      if (const auto* report = std::get_if<PeriodReport>(&outcome)) {
        r.report = *report;
        r.steps_used = report->steps_used;
      } else {
        r.steps_used = std::get<BudgetExhausted>(outcome).steps_used;
      }
    }
  });

  for (const auto& r : summary.results) {
    if (!r.report) {
      ++summary.exhausted;
      summary.all_tight = false;
      continue;
    }
    ++summary.period_histogram[r.report->period];
    ++summary.pre_period_histogram[r.report->pre_period];
    if (!r.report->tight()) summary.all_tight = false;
  }
  return summary;
}

}  // namespace diffuse
