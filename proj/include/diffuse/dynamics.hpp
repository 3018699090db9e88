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

#ifndef DIFFUSE_DYNAMICS_HPP_
#define DIFFUSE_DYNAMICS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "diffuse/graph.hpp"

namespace diffuse {

using Chips = std::int64_t;

// Chip count per vertex, indexed like the graph it is paired with. Entries
// may be negative.
class ChipConfiguration {
 public:
  ChipConfiguration() = default;
  explicit ChipConfiguration(std::vector<Chips> values) : values_(std::move(values)) {}
  ChipConfiguration(std::initializer_list<Chips> values) : values_(values) {}

  static ChipConfiguration constant(std::size_t n, Chips value) {
    return ChipConfiguration(std::vector<Chips>(n, value));
  }

  std::size_t size() const noexcept { return values_.size(); }
  Chips operator[](std::size_t i) const { return values_[i]; }
  Chips& operator[](std::size_t i) { return values_[i]; }
  std::span<const Chips> values() const noexcept { return values_; }

  // Exact sum; throws kIntegerOverflow if it does not fit in Chips.
  Chips total() const;

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const ChipConfiguration&, const ChipConfiguration&) = default;
  friend auto operator<=>(const ChipConfiguration&, const ChipConfiguration&) = default;

 private:
  std::vector<Chips> values_;
};

// "(1,2,-3)".
std::string to_string(const ChipConfiguration& c);

struct ConfigurationHash {
  std::size_t operator()(const ChipConfiguration& c) const noexcept;
};

// Counts of strictly richer (plus) and strictly poorer (minus) neighbours.
struct DeltaVector {
  std::vector<std::uint32_t> plus;
  std::vector<std::uint32_t> minus;

  std::int64_t operator[](std::size_t i) const {
    return static_cast<std::int64_t>(plus[i]) - static_cast<std::int64_t>(minus[i]);
  }
  std::size_t size() const noexcept { return plus.size(); }
};

// Throws kLengthMismatch.
DeltaVector delta(const Graph& g, const ChipConfiguration& c);

// One synchronous firing. Throws kLengthMismatch, kIntegerOverflow.
ChipConfiguration fire(const Graph& g, const ChipConfiguration& c);

// Same as fire(), writing into `out` (resized as needed) to reuse storage.
void fire_into(const Graph& g, const ChipConfiguration& c, ChipConfiguration& out);

// [c0, c1, ..., c_steps].
std::vector<ChipConfiguration> trajectory(const Graph& g, const ChipConfiguration& c0,
                                          std::size_t steps);

// Adds k to every entry. Throws kIntegerOverflow.
ChipConfiguration shift(const ChipConfiguration& c, Chips k);

}  // namespace diffuse

#endif  // DIFFUSE_DYNAMICS_HPP_
