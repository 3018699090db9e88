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

#include "diffuse/state_graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "diffuse/error.hpp"
#include "diffuse/parallel.hpp"

namespace diffuse {

namespace {

__extension__ typedef __int128 Wide;  // GCC and Clang; exact for products of two int64 values
using boost::multiprecision::cpp_int;

void validate(std::size_t n, const ConfigWindow& w) {
  if (w.lo > w.hi) {
    throw Error(ErrorCode::kInvalidRange,
                "lo " + std::to_string(w.lo) + " > hi " + std::to_string(w.hi));
  }
  const Wide total = w.total;
  if (static_cast<Wide>(n) * w.lo > total || static_cast<Wide>(n) * w.hi < total) {
    throw Error(ErrorCode::kEmptyWindow,
                "no " + std::to_string(n) + "-vector in [" + std::to_string(w.lo) + ", " +
                    std::to_string(w.hi) + "] sums to " + std::to_string(w.total));
  }
}

cpp_int binomial(cpp_int top, std::uint64_t k) {
  cpp_int out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out *= top - k + i;
    out /= i;
  }
  return out;
}

void require_within_cap(std::size_t n, const ConfigWindow& w, std::size_t cap) {
  validate(n, w);
  const std::uint64_t count = window_size(n, w);
  if (count > cap) {
    throw Error(ErrorCode::kWindowTooLarge, std::to_string(count) + " configurations exceed cap " +
                                                std::to_string(cap));
  }
}

}  // namespace

bool ConfigWindow::contains(const ChipConfiguration& c) const {
  Wide sum = 0;
  for (Chips v : c) {
    if (v < lo || v > hi) return false;
    sum += v;
  }
  return sum == total;
}

std::uint64_t window_size(std::size_t n, const ConfigWindow& w) {
  if (w.lo > w.hi) return 0;
  const Wide width = static_cast<Wide>(w.hi) - w.lo;  // H
  Wide excess = static_cast<Wide>(w.total) - static_cast<Wide>(n) * w.lo;  // S
  if (excess < 0 || excess > static_cast<Wide>(n) * width) return 0;
  if (width == 0 || n == 1) return 1;
  // Count is symmetric under x -> H - x.
  excess = std::min(excess, static_cast<Wide>(n) * width - excess);

  // Inclusion-exclusion over coordinates forced above H:
  //   sum_j (-1)^j C(n, j) C(S - j(H+1) + n - 1, n - 1)
  cpp_int count = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    const Wide rest = excess - static_cast<Wide>(j) * (width + 1);
    if (rest < 0) break;
    const auto small = static_cast<std::uint64_t>(std::min<Wide>(rest, n - 1));
    const cpp_int top = cpp_int(static_cast<std::uint64_t>(rest)) + (n - 1);
    cpp_int term = binomial(cpp_int(n), j) * binomial(top, small);
    if (j % 2 == 0) count += term;
    else count -= term;
  }
  if (count > std::numeric_limits<std::uint64_t>::max()) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return count.convert_to<std::uint64_t>();
}

std::vector<ChipConfiguration> enumerate_window(const Graph& g, const ConfigWindow& w,
                                                std::size_t cap) {
  const std::size_t n = g.order();
  require_within_cap(n, w, cap);

  std::vector<ChipConfiguration> out;
  out.reserve(static_cast<std::size_t>(window_size(n, w)));
  std::vector<Chips> current(n, w.lo);

  // Depth-first in lexicographic order; remaining[i] is what positions
  // i..n-1 must sum to.
  std::vector<Wide> remaining(n + 1, 0);
  remaining[0] = w.total;
  auto lower = [&](std::size_t i) {
    const Wide slack = remaining[i] - static_cast<Wide>(n - i - 1) * w.hi;
    return static_cast<Chips>(std::max<Wide>(w.lo, slack));
  };
  auto upper = [&](std::size_t i) {
    const Wide slack = remaining[i] - static_cast<Wide>(n - i - 1) * w.lo;
    return static_cast<Chips>(std::min<Wide>(w.hi, slack));
  };

  auto fill_from = [&](std::size_t first) {
    for (std::size_t i = first; i < n; ++i) {
      current[i] = lower(i);
      remaining[i + 1] = remaining[i] - current[i];
    }
  };

  fill_from(0);
  while (true) {
    out.emplace_back(current);
    // The last position is forced, so advance the deepest free one.
    std::size_t i = n - 1;
    while (i > 0 && current[i - 1] >= upper(i - 1)) --i;
    if (i == 0) return out;
    ++current[i - 1];
    remaining[i] = remaining[i - 1] - current[i - 1];
    fill_from(i);
  }
}

std::optional<std::size_t> StateGraphReport::index_of(const ChipConfiguration& c) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), c);
  if (it == nodes.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - nodes.begin());
}

StateGraphReport build_state_graph(const Graph& g, const ConfigWindow& w, std::size_t cap) {
  StateGraphReport r;
  r.window = w;
  r.nodes = enumerate_window(g, w, cap);
  const std::size_t count = r.nodes.size();
  r.successor.assign(count, std::nullopt);

  parallel_for(count, worker_count(), [&](std::size_t begin, std::size_t end) {
    ChipConfiguration image;
    for (std::size_t i = begin; i < end; ++i) {
      fire_into(g, r.nodes[i], image);
      r.successor[i] = r.index_of(image);
    }
  });

  std::vector<std::size_t> in_degree(count, 0);
  for (const auto& s : r.successor) {
    if (s) ++in_degree[*s];
    else ++r.escaped_count;
  }
  for (std::size_t d : in_degree) ++r.in_degree_histogram[d];

  // Functional-graph walk: 0 = unseen, 1 = on the current walk, 2 = finished.
  std::vector<std::uint8_t> colour(count, 0);
  std::vector<std::size_t> walk;
  for (std::size_t start = 0; start < count; ++start) {
    if (colour[start] != 0) continue;
    walk.clear();
    std::optional<std::size_t> at = start;
    while (at && colour[*at] == 0) {
      colour[*at] = 1;
      walk.push_back(*at);
      at = r.successor[*at];
    }
    if (at && colour[*at] == 1) {
      const auto pos = std::find(walk.begin(), walk.end(), *at);
      r.cycles.push_back({*at, static_cast<std::size_t>(walk.end() - pos)});
    }
    for (std::size_t v : walk) colour[v] = 2;
  }
  return r;
}

std::vector<ChipConfiguration> parents_of(const Graph& g, const ChipConfiguration& c,
                                          const ConfigWindow& w, std::size_t cap) {
  if (c.size() != g.order()) {
    throw Error(ErrorCode::kLengthMismatch, "configuration/graph size differ");
  }
  std::vector<ChipConfiguration> out;
  ChipConfiguration image;
  for (const auto& candidate : enumerate_window(g, w, cap)) {
    fire_into(g, candidate, image);
    if (image == c) out.push_back(candidate);
  }
  return out;
}

CycleCensus cycle_census(const StateGraphReport& report) {
  CycleCensus census;
  census.escaped_count = report.escaped_count;
  for (const auto& cycle : report.cycles) {
    ++census.lengths[cycle.length];
    if (cycle.length > 2) census.conjecture_holds = false;
  }
  return census;
}

}  // namespace diffuse
