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

// Reproducible randomness. The stream is std::mt19937_64 (its output is fixed
// by the standard) and bounded draws use our own rejection sampling rather
// than std::uniform_int_distribution, whose algorithm is implementation
// defined. Together that makes every seeded result portable.
//
// Sub-seeds: trial i of a run with master seed S uses
//     splitmix64(S + (i + 1) * 0x9e3779b97f4a7c15)
// so a trial's stream depends only on (S, i).

#ifndef DIFFUSE_RANDOM_HPP_
#define DIFFUSE_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

#include "diffuse/dynamics.hpp"
#include "diffuse/graph.hpp"

namespace diffuse {

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) noexcept;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi]; requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  // Uniform on [0, n); requires n >= 1.
  std::size_t below(std::size_t n);
  // True with probability num / den.
  bool chance(std::uint64_t num, std::uint64_t den);

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Each entry uniform on [lo, hi]. Throws kInvalidRange for lo > hi.
ChipConfiguration random_config(const Graph& g, Chips lo, Chips hi, std::uint64_t seed);
ChipConfiguration random_config(std::size_t n, Chips lo, Chips hi, Rng& rng);

// Vertex i > 0 attaches to a uniformly chosen earlier vertex.
Graph random_tree(std::size_t n, Rng& rng);

// Erdos-Renyi G(n, p) with p = num / den.
Graph random_gnp(std::size_t n, std::uint64_t num, std::uint64_t den, Rng& rng);

// Connected bipartite graph with at most max_vertices (>= 2) vertices, drawn
// from a mix of trees, paths, stars, even cycles, grids, complete bipartite
// graphs and trees with extra cross edges.
Graph random_connected_bipartite(std::size_t max_vertices, Rng& rng);

}  // namespace diffuse

#endif  // DIFFUSE_RANDOM_HPP_
