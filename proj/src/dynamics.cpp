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

#include "diffuse/dynamics.hpp"

#include <stdexcept>
#include <string>

#include "diffuse/error.hpp"

namespace diffuse {

namespace {

void require_length(const Graph& g, const ChipConfiguration& c) {
  if (c.size() != g.order()) {
    throw Error(ErrorCode::kLengthMismatch, "configuration has " +
                                                std::to_string(c.size()) +
                                                " entries, graph has " +
                                                std::to_string(g.order()) + " vertices");
  }
}

Chips checked_add(Chips a, Chips b) {
  Chips out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kIntegerOverflow,
                std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

}  // namespace

Chips ChipConfiguration::total() const {
  Chips sum = 0;
  for (Chips v : values_) sum = checked_add(sum, v);
  return sum;
}

std::string to_string(const ChipConfiguration& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(c[i]);
  }
  return out + ")";
}

std::size_t ConfigurationHash::operator()(const ChipConfiguration& c) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ c.size();
  for (Chips v : c) {
    std::uint64_t x = static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    h ^= x ^ (x >> 31);
  }
  return static_cast<std::size_t>(h);
}

DeltaVector delta(const Graph& g, const ChipConfiguration& c) {
  require_length(g, c);
  DeltaVector d;
  d.plus.assign(g.order(), 0);
  d.minus.assign(g.order(), 0);
  for (std::size_t i = 0; i < g.order(); ++i) {
    const Chips own = c[i];
    for (Vertex j : g.neighbours(static_cast<Vertex>(i))) {
      if (c[j] > own) ++d.plus[i];
      else if (c[j] < own) ++d.minus[i];
    }
  }
  return d;
}

void fire_into(const Graph& g, const ChipConfiguration& c, ChipConfiguration& out) {
  require_length(g, c);
  if (&out == &c) throw std::invalid_argument("fire_into: output aliases input");
  if (out.size() != g.order()) out = ChipConfiguration::constant(g.order(), 0);
  std::int64_t net = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const Chips own = c[i];
    std::int64_t change = 0;
    for (Vertex j : g.neighbours(static_cast<Vertex>(i))) {
      change += (c[j] > own) - (c[j] < own);
    }
    out[i] = checked_add(own, change);
    net += change;
  }
  // Every transfer is counted once as +1 and once as -1.
  if (net != 0) throw std::logic_error("fire: chip total not conserved");
}

ChipConfiguration fire(const Graph& g, const ChipConfiguration& c) {
  ChipConfiguration out;
  fire_into(g, c, out);
  return out;
}

std::vector<ChipConfiguration> trajectory(const Graph& g, const ChipConfiguration& c0,
                                          std::size_t steps) {
  require_length(g, c0);
  std::vector<ChipConfiguration> out;
  out.reserve(steps + 1);
  out.push_back(c0);
  for (std::size_t t = 0; t < steps; ++t) out.push_back(fire(g, out.back()));
  return out;
}

ChipConfiguration shift(const ChipConfiguration& c, Chips k) {
  ChipConfiguration out = c;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(out[i], k);
  return out;
}

}  // namespace diffuse
