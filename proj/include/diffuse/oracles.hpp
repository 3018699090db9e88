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

// Closed-form predictions and bound monitors for the graph families whose
// behaviour is known exactly. None of these call into fire(); agreement with
// the engine is what the test suites check.

#ifndef DIFFUSE_ORACLES_HPP_
#define DIFFUSE_ORACLES_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "diffuse/dynamics.hpp"
#include "diffuse/graph.hpp"

namespace diffuse {

// c(v) = deg(v).
ChipConfiguration full_degree_config(const Graph& g);

// One chip at v, zero elsewhere.
ChipConfiguration millpond_config(const Graph& g, Vertex v);

// -deg(v) at v, 1 on N(v), 0 elsewhere.
ChipConfiguration qf_config(const Graph& g, Vertex v);

// c_t for the mill-pond started at d.source on a connected bipartite graph:
//   source:           1 for even t, 1 - deg for odd t
//   x in layer i > 0: 0 if t < i, deg_up(x) if t - i even, -deg_down(x) if odd
// Throws kNotBipartite, kDisconnected, kLengthMismatch.
ChipConfiguration millpond_predict(const LayerDecomposition& d, const Graph& g,
                                   std::size_t t);

// c_t for QF(v). QF(v) is the mill-pond one step in, less one chip at v, so
// the prediction is millpond_predict(t + 1) with v decremented. It holds only
// while v never ties with a neighbour, i.e. every neighbour of v has a
// neighbour two layers out; throws kInvalidParams otherwise (and whatever
// millpond_predict throws).
ChipConfiguration qf_predict(const LayerDecomposition& d, const Graph& g, std::size_t t);
bool qf_prediction_applies(const LayerDecomposition& d, const Graph& g);

// First time the full-degree path P_n reaches its period-2 pair: floor((n-3)/2).
std::size_t path_table_time(std::size_t n);

// Full-degree configuration of P_n after t firings, built from the word
// patterns ((13)^k 1 2 2 2 ... from each end before the ends meet, then the
// alternating pair for n mod 4). Throws kInvalidSize for n < 3.
ChipConfiguration path_full_degree_predict(std::size_t n, std::size_t t);

// Upper bound on the pre-period of a star:
//   ceil(max{0, c(v) - c(l_max), c(l_min) - c(v)} / (deg(v) + 1)) + 2 (c(l_max) - c(l_min))
// The centre is the vertex of degree n - 1 (vertex 0 when n <= 2).
// Throws kNotAStar, kLengthMismatch.
Chips star_preperiod_bound(const Graph& g, const ChipConfiguration& c0);
Vertex star_centre(const Graph& g);

struct TwoValueState {
  Chips a = 0;  // value on each of the d vertices that started at alpha
  Chips b = 0;  // value on each of the n - d vertices that started at beta

  friend bool operator==(const TwoValueState&, const TwoValueState&) = default;
};

// K_n with d vertices at alpha, the rest at beta, after t firings.
// Throws kInvalidParams unless 1 <= d <= n.
TwoValueState complete_two_value_predict(std::size_t n, std::size_t d, Chips alpha,
                                         Chips beta, std::size_t t);

enum class BoundId { kDeg2Edge, kTwinPair, kTwinLock, kWheelRim, kWheelHub };

std::string_view to_string(BoundId id);
std::optional<BoundId> parse_bound_id(std::string_view name);

struct BoundViolation {
  std::size_t time = 0;
  Vertex u = 0;
  Vertex v = 0;
  Chips observed = 0;
  Chips bound = 0;
};

struct BoundReport {
  BoundId bound_id = BoundId::kDeg2Edge;
  bool holds = true;
  std::optional<BoundViolation> first_violation;
};

//   deg2_edge  deg(u) = 2, deg(v) in {1,2}: |d_{t+1}| <= max(3, |d_t|)
//   twin_pair  twins u, v: |d_t| <= max(|d_0|, 2 deg(u))
//   twin_lock  twins u, v: once d_t = 0 it stays 0
//   wheel_rim  adjacent rim vertices: |d_t| < 3 => |d_{t+1}| <= 6,
//              |d_t| >= 3 => |d_{t+1}| <= |d_t|
//   wheel_hub  |c_t(hub) - c_t(v_i)| <= R_w, R_w from c_0
// where d_t = c_t(u) - c_t(v). The wheel bounds expect generate(kWheel, n)
// labelling. Throws kBoundInapplicable when the graph has no pair the bound
// speaks about, kLengthMismatch for malformed trajectories.
BoundReport check_bound(BoundId id, const Graph& g,
                        std::span<const ChipConfiguration> trajectory);

// Hub-to-rim cap R_w for the wheel bound.
Chips wheel_hub_bound(const Graph& g, const ChipConfiguration& c0);

}  // namespace diffuse

#endif  // DIFFUSE_ORACLES_HPP_
