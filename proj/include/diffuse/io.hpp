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

// Text and JSON formats shared by the CLI and the tests. Every JSON document
// carries a "schema" field of the form "diffuse.<kind>/<version>".

#ifndef DIFFUSE_IO_HPP_
#define DIFFUSE_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "diffuse/dynamics.hpp"
#include "diffuse/graph.hpp"
#include "diffuse/periodicity.hpp"
#include "diffuse/state_graph.hpp"
#include "diffuse/trials.hpp"
#include "diffuse/verify.hpp"

namespace diffuse {

inline constexpr std::string_view kPeriodSchema = "diffuse.period/1";
inline constexpr std::string_view kTrialsSchema = "diffuse.trials/1";
inline constexpr std::string_view kStateGraphSchema = "diffuse.stategraph/1";
inline constexpr std::string_view kOracleSchema = "diffuse.oracle/1";
inline constexpr std::string_view kSimulationSchema = "diffuse.simulation/1";

// A path to an edge-list file, or a family spec such as "grid:10x20".
Graph load_graph(std::string_view spec);

// Whitespace-separated integers, or a JSON array.
ChipConfiguration parse_configuration(std::string_view text);

// Preset ("full-degree", "millpond:v", "qf:v", "zero", "const:k",
// "random:lo..hi"), inline JSON array, or a file in either text format.
// `seed` feeds the random preset. Throws kLengthMismatch when the result does
// not match the graph.
ChipConfiguration load_configuration(std::string_view spec, const Graph& g,
                                     std::uint64_t seed = 0);

// "LO..HI".
std::pair<Chips, Chips> parse_chip_range(std::string_view text);

nlohmann::ordered_json to_json(const ChipConfiguration& c);
nlohmann::ordered_json to_json(const PeriodOutcome& outcome);
nlohmann::ordered_json to_json(const TrialSummary& summary, bool include_trials = true);
nlohmann::ordered_json to_json(const StateGraphReport& report);
nlohmann::ordered_json to_json(const OracleReport& report);

// "source,target" rows; target is "escaped" for arcs leaving the window.
void write_successor_csv(std::ostream& out, const StateGraphReport& report);

}  // namespace diffuse

#endif  // DIFFUSE_IO_HPP_
