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

#ifndef DIFFUSE_PERIODICITY_HPP_
#define DIFFUSE_PERIODICITY_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>

#include "diffuse/dynamics.hpp"
#include "diffuse/graph.hpp"

namespace diffuse {

inline constexpr std::size_t kDefaultBudget = 1'000'000;

enum class PeriodClass { kFixed, kTightPeriod2, kOtherPeriodic };

std::string_view to_string(PeriodClass cls);

// c_{pre_period} == c_{pre_period + period}, both minimal.
struct PeriodReport {
  std::size_t pre_period = 0;
  std::size_t period = 1;
  PeriodClass classification = PeriodClass::kFixed;
  std::size_t steps_used = 0;

  bool tight() const noexcept { return classification != PeriodClass::kOtherPeriodic; }
  friend bool operator==(const PeriodReport&, const PeriodReport&) = default;
};

// No repeat within the budget. `last` is c_{steps_used}, so a caller can
// resume from it (time indices then restart at zero).
struct BudgetExhausted {
  ChipConfiguration last;
  std::size_t steps_used = 0;
};

using PeriodOutcome = std::variant<PeriodReport, BudgetExhausted>;

// Records every visited configuration with its first-visit time; the first
// revisit ends the search. Throws kInvalidParams for budget 0.
PeriodOutcome detect_period(const Graph& g, const ChipConfiguration& c0,
                            std::size_t budget = kDefaultBudget);

bool is_fixed(const Graph& g, const ChipConfiguration& c);

// For every edge uv: c(u) < c(v) implies c'(u) > c'(v), and c(u) == c(v)
// implies c'(u) == c'(v), where c' = fire(g, c).
bool has_property_plus(const Graph& g, const ChipConfiguration& c);

// Smallest t <= budget with property plus at c_t. Every positive answer is
// cross-checked against c_{t+2} == c_t (std::logic_error on failure).
std::optional<std::size_t> first_property_plus_time(const Graph& g,
                                                    const ChipConfiguration& c0,
                                                    std::size_t budget = kDefaultBudget);

}  // namespace diffuse

#endif  // DIFFUSE_PERIODICITY_HPP_
