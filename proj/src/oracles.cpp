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

#include "diffuse/oracles.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "diffuse/error.hpp"

namespace diffuse {

namespace {

Chips abs_diff(Chips a, Chips b) { return a > b ? a - b : b - a; }

void require_length(const Graph& g, const ChipConfiguration& c) {
  if (c.size() != g.order()) {
    throw Error(ErrorCode::kLengthMismatch, "configuration/graph size differ");
  }
}

void require_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw Error(ErrorCode::kIndexOutOfRange, "vertex " + std::to_string(v));
}

// Word builder for the path predictor; digits only.
class Word {
 public:
  Word& operator<<(std::string_view digits) {
    for (char ch : digits) values_.push_back(ch - '0');
    return *this;
  }
  Word& repeat(std::string_view digits, std::size_t times) {
    for (std::size_t i = 0; i < times; ++i) *this << digits;
    return *this;
  }
  Word& fill(Chips value, std::size_t times) {
    values_.insert(values_.end(), times, value);
    return *this;
  }
  Word& append_reversed(const std::vector<Chips>& other) {
    values_.insert(values_.end(), other.rbegin(), other.rend());
    return *this;
  }
  std::vector<Chips> take() { return std::move(values_); }

 private:
  std::vector<Chips> values_;
};

bool is_standard_wheel(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 4 || g.size() != 2 * (n - 1) || g.degree(0) != n - 1) return false;
  const std::size_t rim = n - 1;
  for (std::size_t i = 0; i < rim; ++i) {
    if (!g.adjacent(static_cast<Vertex>(1 + i), static_cast<Vertex>(1 + (i + 1) % rim))) {
      return false;
    }
  }
  return true;
}

std::vector<Edge> rim_edges(const Graph& g) {
  std::vector<Edge> out;
  const std::size_t rim = g.order() - 1;
  for (std::size_t i = 0; i < rim; ++i) {
    out.emplace_back(static_cast<Vertex>(1 + i), static_cast<Vertex>(1 + (i + 1) % rim));
  }
  return out;
}

}  // namespace

ChipConfiguration full_degree_config(const Graph& g) {
  std::vector<Chips> values(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    values[v] = static_cast<Chips>(g.degree(static_cast<Vertex>(v)));
  }
  return ChipConfiguration(std::move(values));
}

ChipConfiguration millpond_config(const Graph& g, Vertex v) {
  require_vertex(g, v);
  auto c = ChipConfiguration::constant(g.order(), 0);
  c[v] = 1;
  return c;
}

ChipConfiguration qf_config(const Graph& g, Vertex v) {
  require_vertex(g, v);
  auto c = ChipConfiguration::constant(g.order(), 0);
  c[v] = -static_cast<Chips>(g.degree(v));
  for (Vertex x : g.neighbours(v)) c[x] = 1;
  return c;
}

ChipConfiguration millpond_predict(const LayerDecomposition& d, const Graph& g,
                                   std::size_t t) {
  if (d.distance.size() != g.order() || d.source >= g.order()) {
    throw Error(ErrorCode::kLengthMismatch, "layer decomposition does not match graph");
  }
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "mill-pond needs a connected graph");
  if (!is_bipartite(g)) throw Error(ErrorCode::kNotBipartite, "mill-pond oracle needs a bipartite graph");

  auto c = ChipConfiguration::constant(g.order(), 0);
  for (std::size_t x = 0; x < g.order(); ++x) {
    const std::size_t i = d.distance[x];
    if (i == 0) {
      c[x] = t % 2 == 0 ? 1 : 1 - static_cast<Chips>(g.degree(d.source));
    } else if (t < i) {
      c[x] = 0;
    } else if ((t - i) % 2 == 0) {
      c[x] = static_cast<Chips>(d.deg_up[x]);
    } else {
      c[x] = -static_cast<Chips>(d.deg_down[x]);
    }
  }
  return c;
}

bool qf_prediction_applies(const LayerDecomposition& d, const Graph& g) {
  for (Vertex x : g.neighbours(d.source)) {
    if (d.deg_down.at(x) == 0) return false;
  }
  return true;
}

ChipConfiguration qf_predict(const LayerDecomposition& d, const Graph& g, std::size_t t) {
  ChipConfiguration c = millpond_predict(d, g, t + 1);
  if (!qf_prediction_applies(d, g)) {
    throw Error(ErrorCode::kInvalidParams,
                "a neighbour of the source has no neighbour farther out");
  }
  c[d.source] -= 1;
  return c;
}

std::size_t path_table_time(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::kInvalidSize, "path predictor needs n >= 3");
  return (n - 3) / 2;
}

ChipConfiguration path_full_degree_predict(std::size_t n, std::size_t t) {
  const std::size_t table_time = path_table_time(n);

  if (t < table_time) {
    // Each end still looks like the one-way infinite path.
    Word end;
    if (t % 2 == 0) {
      end.repeat("13", t / 2) << "1";
    } else {
      (end << "2").repeat("13", t / 2) << "1";
    }
    std::vector<Chips> left = end.take();
    Word full;
    for (Chips v : left) full.fill(v, 1);
    full.fill(2, n - 2 * left.size()).append_reversed(left);
    return ChipConfiguration(full.take());
  }

  // Table word at table_time, its one-firing image one step later, repeating.
  const bool at_table_word = (t - table_time) % 2 == 0;
  const std::size_t k = (n - 3) / 4;
  Word w;
  switch (n % 4) {
    case 3:  // n = 4k + 3: (13)^k 121 (31)^k  <->  2 (13)^k 0 (31)^k 2
      if (at_table_word) {
        w.repeat("13", k) << "121";
        w.repeat("31", k);
      } else {
        (w << "2").repeat("13", k) << "0";
        w.repeat("31", k) << "2";
      }
      break;
    case 0:  // n = 4k + 4: (13)^k 1221 (31)^k  <->  2 (13)^k 11 (31)^k 2
      if (at_table_word) {
        w.repeat("13", k) << "1221";
        w.repeat("31", k);
      } else {
        (w << "2").repeat("13", k) << "11";
        w.repeat("31", k) << "2";
      }
      break;
    case 1:  // n = 4k + 5: 2 (13)^k 121 (31)^k 2  <->  1 (31)^k 303 (13)^k 1
      if (at_table_word) {
        (w << "2").repeat("13", k) << "121";
        w.repeat("31", k) << "2";
      } else {
        (w << "1").repeat("31", k) << "303";
        w.repeat("13", k) << "1";
      }
      break;
    default:  // n = 4k + 6: 2 (13)^k 1221 (31)^k 2  <->  1 (31)^k 3113 (13)^k 1
      if (at_table_word) {
        (w << "2").repeat("13", k) << "1221";
        w.repeat("31", k) << "2";
      } else {
        (w << "1").repeat("31", k) << "3113";
        w.repeat("13", k) << "1";
      }
      break;
  }
  return ChipConfiguration(w.take());
}

Vertex star_centre(const Graph& g) {
  const std::size_t n = g.order();
  if (g.size() != n - 1) throw Error(ErrorCode::kNotAStar, "star needs n - 1 edges");
  if (n <= 2) return 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(static_cast<Vertex>(v)) == n - 1) return static_cast<Vertex>(v);
  }
  throw Error(ErrorCode::kNotAStar, "no vertex adjacent to all others");
}

Chips star_preperiod_bound(const Graph& g, const ChipConfiguration& c0) {
  require_length(g, c0);
  const Vertex centre = star_centre(g);
  if (g.order() == 1) return 0;

  Chips leaf_max = 0, leaf_min = 0;
  bool first = true;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (x == centre) continue;
    if (first || c0[x] > leaf_max) leaf_max = c0[x];
    if (first || c0[x] < leaf_min) leaf_min = c0[x];
    first = false;
  }
  const Chips gap = std::max<Chips>({0, c0[centre] - leaf_max, leaf_min - c0[centre]});
  const Chips divisor = static_cast<Chips>(g.degree(centre)) + 1;
  const Chips approach = (gap + divisor - 1) / divisor;
  return approach + 2 * (leaf_max - leaf_min);
}

TwoValueState complete_two_value_predict(std::size_t n, std::size_t d, Chips alpha,
                                         Chips beta, std::size_t t) {
  if (d < 1 || d > n) {
    throw Error(ErrorCode::kInvalidParams,
                "need 1 <= d <= n, got d=" + std::to_string(d) + " n=" + std::to_string(n));
  }
  if (d == n || alpha == beta) return {alpha, beta};

  // Poorer group gains the richer group's size each step, richer loses the
  // poorer group's size, so the gap closes by n per step until it flips.
  const auto size_a = static_cast<Chips>(d);
  const auto size_b = static_cast<Chips>(n - d);
  const Chips gap = abs_diff(alpha, beta);
  const auto step = static_cast<Chips>(n);
  const Chips crossing = (gap + step - 1) / step;  // first step with gap <= 0
  const bool a_poorer = alpha < beta;

  auto state_at = [&](Chips s) -> TwoValueState {
    if (a_poorer) return {alpha + s * size_b, beta - s * size_a};
    return {alpha - s * size_b, beta + s * size_a};
  };

  const auto time = static_cast<Chips>(std::min<std::size_t>(t, static_cast<std::size_t>(crossing) + 1));
  if (time <= crossing) return state_at(time);
  if (gap % step == 0) return state_at(crossing);  // equalised: fixed from here
  return (static_cast<Chips>(t) - crossing) % 2 == 0 ? state_at(crossing)
                                                     : state_at(crossing - 1);
}

std::string_view to_string(BoundId id) {
  switch (id) {
    case BoundId::kDeg2Edge: return "deg2_edge";
    case BoundId::kTwinPair: return "twin_pair";
    case BoundId::kTwinLock: return "twin_lock";
    case BoundId::kWheelRim: return "wheel_rim";
    case BoundId::kWheelHub: return "wheel_hub";
  }
  return "unknown";
}

std::optional<BoundId> parse_bound_id(std::string_view name) {
  for (BoundId id : {BoundId::kDeg2Edge, BoundId::kTwinPair, BoundId::kTwinLock,
                     BoundId::kWheelRim, BoundId::kWheelHub}) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

Chips wheel_hub_bound(const Graph& g, const ChipConfiguration& c0) {
  if (!is_standard_wheel(g)) {
    throw Error(ErrorCode::kBoundInapplicable, "graph is not a hub-first wheel");
  }
  require_length(g, c0);
  const auto n = static_cast<Chips>(g.order());
  Chips rim_sum = 0;
  for (auto [a, b] : rim_edges(g)) rim_sum += std::max<Chips>(abs_diff(c0[a], c0[b]), 6);
  Chips hub_gap = 0;
  for (std::size_t i = 1; i < g.order(); ++i) hub_gap = std::max(hub_gap, abs_diff(c0[0], c0[i]));
  return std::max(n + 2 + rim_sum, hub_gap);
}

BoundReport check_bound(BoundId id, const Graph& g,
                        std::span<const ChipConfiguration> trajectory) {
  if (trajectory.empty()) throw Error(ErrorCode::kLengthMismatch, "empty trajectory");
  for (const auto& c : trajectory) require_length(g, c);

  BoundReport report;
  report.bound_id = id;
  auto violate = [&report](std::size_t t, Vertex u, Vertex v, Chips observed, Chips bound) {
    report.holds = false;
    report.first_violation = BoundViolation{t, u, v, observed, bound};
    return report;
  };

  switch (id) {
    case BoundId::kDeg2Edge: {
      std::vector<Edge> pairs;
      for (auto [u, v] : g.edges()) {
        const auto du = g.degree(u), dv = g.degree(v);
        if ((du == 2 && (dv == 1 || dv == 2)) || (dv == 2 && du == 1)) pairs.emplace_back(u, v);
      }
      if (pairs.empty()) throw Error(ErrorCode::kBoundInapplicable, "no degree-2 edge");
      for (std::size_t t = 0; t + 1 < trajectory.size(); ++t) {
        const auto& now = trajectory[t];
        const auto& next = trajectory[t + 1];
        for (auto [u, v] : pairs) {
          const Chips bound = std::max<Chips>(3, abs_diff(now[u], now[v]));
          const Chips observed = abs_diff(next[u], next[v]);
          if (observed > bound) return violate(t + 1, u, v, observed, bound);
        }
      }
      return report;
    }
    case BoundId::kTwinPair:
    case BoundId::kTwinLock: {
      const auto pairs = twins(g);
      if (pairs.empty()) throw Error(ErrorCode::kBoundInapplicable, "graph has no twins");
      const auto& c0 = trajectory.front();
      for (const auto& tw : pairs) {
        const Chips cap = std::max<Chips>(abs_diff(c0[tw.u], c0[tw.v]),
                                          2 * static_cast<Chips>(g.degree(tw.u)));
        bool locked = false;
        for (std::size_t t = 0; t < trajectory.size(); ++t) {
          const Chips observed = abs_diff(trajectory[t][tw.u], trajectory[t][tw.v]);
          if (id == BoundId::kTwinPair) {
            if (observed > cap) return violate(t, tw.u, tw.v, observed, cap);
          } else {
            if (locked && observed != 0) return violate(t, tw.u, tw.v, observed, 0);
            locked = locked || observed == 0;
          }
        }
      }
      return report;
    }
    case BoundId::kWheelRim: {
      if (!is_standard_wheel(g)) {
        throw Error(ErrorCode::kBoundInapplicable, "graph is not a hub-first wheel");
      }
      const auto pairs = rim_edges(g);
      for (std::size_t t = 0; t + 1 < trajectory.size(); ++t) {
        for (auto [u, v] : pairs) {
          const Chips before = abs_diff(trajectory[t][u], trajectory[t][v]);
          const Chips after = abs_diff(trajectory[t + 1][u], trajectory[t + 1][v]);
          const Chips bound = before < 3 ? 6 : before;
          if (after > bound) return violate(t + 1, u, v, after, bound);
        }
      }
      return report;
    }
    case BoundId::kWheelHub: {
      const Chips cap = wheel_hub_bound(g, trajectory.front());
      for (std::size_t t = 0; t < trajectory.size(); ++t) {
        for (std::size_t i = 1; i < g.order(); ++i) {
          const Chips observed = abs_diff(trajectory[t][0], trajectory[t][i]);
          if (observed > cap) return violate(t, 0, static_cast<Vertex>(i), observed, cap);
        }
      }
      return report;
    }
  }
  return report;
}

}  // namespace diffuse
