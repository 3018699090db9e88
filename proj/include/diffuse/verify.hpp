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

// Oracle-versus-engine suites. Each suite runs a closed form from oracles.hpp
// against the simulation over a parameter grid and lists counterexamples.
//
//   path-full-degree  P_n for n in [min_n, max_n], every t <= n
//   millpond          random connected bipartite graphs, every source,
//                     t <= 2 ecc + 4, plus pre-period <= ecc - 1
//   qf                as millpond, for sources where the QF prediction applies
//   star-bound        random stars, pre-period <= bound and tight
//   two-value-kn      K_n with two initial values, t <= 3 n + 10
//   bounds:<id>       check_bound over random trajectories on the families
//                     the bound is stated for (or on `graph` when given)

#ifndef DIFFUSE_VERIFY_HPP_
#define DIFFUSE_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diffuse/dynamics.hpp"
#include "diffuse/graph.hpp"

namespace diffuse {

struct SuiteParams {
  std::uint64_t seed = 1;
  std::optional<std::size_t> cases;         // suite-specific default
  std::optional<std::size_t> max_vertices;  // suite-specific default
  std::size_t min_n = 3;
  std::size_t max_n = 64;
  std::size_t steps = 100;
  Chips chip_lo = -20;
  Chips chip_hi = 20;
  std::optional<Graph> graph;  // bounds:<id> only
};

struct OracleReport {
  std::string suite;
  std::size_t cases_checked = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> counterexamples;  // first few, human readable

  bool passed() const noexcept { return mismatches == 0; }
};

std::vector<std::string> suite_names();

// Throws kUnknownSuite.
OracleReport verify_oracle(std::string_view suite, const SuiteParams& params = {});

}  // namespace diffuse

#endif  // DIFFUSE_VERIFY_HPP_
