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

// The configuration digraph: one node per configuration with a fixed chip
// total, one arc to its firing image. Over the integers it is infinite, so we
// enumerate a box [lo, hi]^n and mark arcs that leave the box as escaped.

#ifndef DIFFUSE_STATE_GRAPH_HPP_
#define DIFFUSE_STATE_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "diffuse/dynamics.hpp"
#include "diffuse/graph.hpp"

namespace diffuse {

inline constexpr std::size_t kDefaultWindowCap = 10'000'000;

struct ConfigWindow {
  Chips total = 0;
  Chips lo = 0;
  Chips hi = 0;

  // lo = 0, hi = total.
  static ConfigWindow nonnegative(Chips total) { return {total, 0, total}; }

  bool contains(const ChipConfiguration& c) const;
};

// Number of vectors of length n in [lo, hi]^n summing to total, saturating at
// UINT64_MAX.
std::uint64_t window_size(std::size_t n, const ConfigWindow& w);

// All members in lexicographic order. Throws kEmptyWindow, kWindowTooLarge,
// kInvalidRange (lo > hi).
std::vector<ChipConfiguration> enumerate_window(const Graph& g, const ConfigWindow& w,
                                                std::size_t cap = kDefaultWindowCap);

struct StateCycle {
  std::size_t entry = 0;   // node index where the walk closed the cycle
  std::size_t length = 0;
};

struct StateGraphReport {
  ConfigWindow window;
  std::vector<ChipConfiguration> nodes;              // lexicographic
  std::vector<std::optional<std::size_t>> successor;  // empty = escaped
  std::map<std::size_t, std::size_t> in_degree_histogram;
  std::vector<StateCycle> cycles;
  std::size_t escaped_count = 0;

  std::size_t node_count() const noexcept { return nodes.size(); }
  // Index of c, or empty if c is not a node.
  std::optional<std::size_t> index_of(const ChipConfiguration& c) const;
};

// Successors are computed in parallel (see worker_count()); cycle search runs
// on the finished map.
StateGraphReport build_state_graph(const Graph& g, const ConfigWindow& w,
                                   std::size_t cap = kDefaultWindowCap);

// Every window member whose firing image is c, lexicographic.
std::vector<ChipConfiguration> parents_of(const Graph& g, const ChipConfiguration& c,
                                          const ConfigWindow& w,
                                          std::size_t cap = kDefaultWindowCap);

struct CycleCensus {
  std::map<std::size_t, std::size_t> lengths;  // cycle length -> count
  bool conjecture_holds = true;                // every length is 1 or 2
  std::size_t escaped_count = 0;               // inconclusive nodes
};

CycleCensus cycle_census(const StateGraphReport& report);

}  // namespace diffuse

#endif  // DIFFUSE_STATE_GRAPH_HPP_
