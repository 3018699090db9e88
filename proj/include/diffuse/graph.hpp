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

#ifndef DIFFUSE_GRAPH_HPP_
#define DIFFUSE_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace diffuse {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on the dense vertex set {0, ..., n-1}. Neighbour
// lists are kept sorted. Immutable once built.
class Graph {
 public:
  // Throws Error{kInvalidSize, kIndexOutOfRange, kSelfLoop, kDuplicateEdge}.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  // Each edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degrees() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

enum class Family {
  kPath,
  kCycle,
  kWheel,
  kComplete,
  kCompleteBipartite,
  kStar,
  kGrid,
  kCliqueWithPendants,
};

// Named families with fixed labelling:
//   wheel          hub 0, rim 1..n-1 in cyclic order
//   star           centre 0
//   complete_bip.  parts {0..m-1} and {m..m+n-1}
//   grid(r, c)     row-major, vertex r*cols + c
//   kpend(k, l)    clique 0..k-1, pendants of clique vertex i at k + i*l + j
Graph generate(Family family, std::span<const std::size_t> params);
inline Graph generate(Family family, std::initializer_list<std::size_t> params) {
  return generate(family, std::span<const std::size_t>(params.begin(), params.size()));
}

// Parses "path:7", "grid:10x20", "wheel:6", "kpend:4x4", "kbip:3x4", ...
Graph parse_family_spec(std::string_view spec);

// Edge-list text: "n m" then m lines "u v".
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

struct LayerDecomposition {
  Vertex source = 0;
  std::vector<std::vector<Vertex>> layers;  // layers[i] = N_i(source), sorted
  std::vector<std::size_t> distance;        // BFS distance per vertex
  std::vector<std::size_t> deg_up;          // neighbours one layer closer
  std::vector<std::size_t> deg_down;        // neighbours one layer farther
  std::size_t eccentricity = 0;
};

// Throws kIndexOutOfRange, kDisconnected.
LayerDecomposition layer_decomposition(const Graph& g, Vertex v);

struct Metrics {
  std::optional<std::size_t> radius;    // empty when disconnected
  std::optional<std::size_t> diameter;  // empty when disconnected
  bool is_bipartite = true;
  std::size_t components = 0;
};

Metrics metrics(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_connected(const Graph& g);

enum class TwinKind { kOpen, kClosed };

struct Twin {
  Vertex u;
  Vertex v;  // u < v
  TwinKind kind;

  friend bool operator==(const Twin&, const Twin&) = default;
};

// Every unordered pair with N(u) = N(v) (open) or N[u] = N[v] (closed).
std::vector<Twin> twins(const Graph& g);

}  // namespace diffuse

#endif  // DIFFUSE_GRAPH_HPP_
