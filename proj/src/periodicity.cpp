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

#include "diffuse/periodicity.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

#include "diffuse/error.hpp"

namespace diffuse {

std::string_view to_string(PeriodClass cls) {
  switch (cls) {
    case PeriodClass::kFixed: return "fixed";
    case PeriodClass::kTightPeriod2: return "tight_period2";
    case PeriodClass::kOtherPeriodic: return "other_periodic";
  }
  return "unknown";
}

PeriodOutcome detect_period(const Graph& g, const ChipConfiguration& c0,
                            std::size_t budget) {
  if (budget == 0) throw Error(ErrorCode::kInvalidParams, "budget must be at least 1");
  if (c0.size() != g.order()) {
    throw Error(ErrorCode::kLengthMismatch, "configuration/graph size differ");
  }

  std::unordered_map<ChipConfiguration, std::size_t, ConfigurationHash> first_visit;
  first_visit.emplace(c0, 0);
  ChipConfiguration current = c0;
  ChipConfiguration next;
  for (std::size_t step = 1; step <= budget; ++step) {
    fire_into(g, current, next);
    std::swap(current, next);
    auto [it, inserted] = first_visit.try_emplace(current, step);
    if (!inserted) {
      PeriodReport report;
      report.pre_period = it->second;
      report.period = step - it->second;
      report.steps_used = step;
      report.classification = report.period == 1   ? PeriodClass::kFixed
                              : report.period == 2 ? PeriodClass::kTightPeriod2
                                                   : PeriodClass::kOtherPeriodic;
      return report;
    }
  }
  return BudgetExhausted{std::move(current), budget};
}

bool is_fixed(const Graph& g, const ChipConfiguration& c) {
  const DeltaVector d = delta(g, c);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != 0) return false;
  }
  return true;
}

bool has_property_plus(const Graph& g, const ChipConfiguration& c) {
  const ChipConfiguration next = fire(g, c);
  for (auto [u, v] : g.edges()) {
    if (c[u] == c[v]) {
      if (next[u] != next[v]) return false;
    } else {
      // Orient the edge so that a is the strictly poorer endpoint.
      const Vertex a = c[u] < c[v] ? u : v;
      const Vertex b = a == u ? v : u;
      if (!(next[a] > next[b])) return false;
    }
  }
  return true;
}

std::optional<std::size_t> first_property_plus_time(const Graph& g,
                                                    const ChipConfiguration& c0,
                                                    std::size_t budget) {
  ChipConfiguration current = c0;
  for (std::size_t t = 0; t <= budget; ++t) {
    if (has_property_plus(g, current)) {
      if (fire(g, fire(g, current)) != current) {
        throw std::logic_error("property plus at t=" + std::to_string(t) +
                               " but c_{t+2} != c_t");
      }
      return t;
    }
    if (t < budget) current = fire(g, current);
  }
  return std::nullopt;
}

}  // namespace diffuse
