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

#include "diffuse/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "diffuse/error.hpp"

namespace diffuse {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.order(), kUnreached);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbours(x)) {
      if (dist[y] == kUnreached) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

void require_params(std::span<const std::size_t> params, std::size_t count,
                    std::string_view family) {
  if (params.size() != count) {
    throw Error(ErrorCode::kInvalidSize,
                std::string(family) + " expects " + std::to_string(count) +
                    " parameter(s), got " + std::to_string(params.size()));
  }
}

void require_at_least(std::size_t value, std::size_t minimum, std::string_view family) {
  if (value < minimum) {
    throw Error(ErrorCode::kInvalidSize, std::string(family) + " size " +
                                             std::to_string(value) + " below minimum " +
                                             std::to_string(minimum));
  }
}

Vertex as_vertex(std::size_t i) { return static_cast<Vertex>(i); }

}  // namespace

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw Error(ErrorCode::kInvalidSize, "graph needs at least one vertex");
  if (n > std::numeric_limits<Vertex>::max()) {
    throw Error(ErrorCode::kInvalidSize, "too many vertices");
  }
  Graph g;
  g.adjacency_.resize(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kIndexOutOfRange, "edge (" + std::to_string(u) + "," +
                                                   std::to_string(v) + ") outside [0, " +
                                                   std::to_string(n) + ")");
    }
    if (u == v) throw Error(ErrorCode::kSelfLoop, "vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& nbrs = g.adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    if (auto dup = std::adjacent_find(nbrs.begin(), nbrs.end()); dup != nbrs.end()) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "(" + std::to_string(v) + "," + std::to_string(*dup) + ")");
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nbrs = neighbours(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(as_vertex(u), v);
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(order());
  for (std::size_t v = 0; v < order(); ++v) out[v] = adjacency_[v].size();
  return out;
}

Graph generate(Family family, std::span<const std::size_t> params) {
  std::vector<Edge> edges;
  auto add = [&edges](std::size_t u, std::size_t v) {
    edges.emplace_back(as_vertex(u), as_vertex(v));
  };
  switch (family) {
    case Family::kPath: {
      require_params(params, 1, "path");
      const std::size_t n = params[0];
      require_at_least(n, 1, "path");
      for (std::size_t i = 0; i + 1 < n; ++i) add(i, i + 1);
      return Graph::from_edge_list(n, edges);
    }
    case Family::kCycle: {
      require_params(params, 1, "cycle");
      const std::size_t n = params[0];
      require_at_least(n, 3, "cycle");
      for (std::size_t i = 0; i < n; ++i) add(i, (i + 1) % n);
      return Graph::from_edge_list(n, edges);
    }
    case Family::kWheel: {
      require_params(params, 1, "wheel");
      const std::size_t n = params[0];
      require_at_least(n, 4, "wheel");
      const std::size_t rim = n - 1;
      for (std::size_t i = 1; i <= rim; ++i) add(0, i);
      for (std::size_t i = 0; i < rim; ++i) add(1 + i, 1 + (i + 1) % rim);
      return Graph::from_edge_list(n, edges);
    }
    case Family::kComplete: {
      require_params(params, 1, "complete");
      const std::size_t n = params[0];
      require_at_least(n, 1, "complete");
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) add(i, j);
      return Graph::from_edge_list(n, edges);
    }
    case Family::kCompleteBipartite: {
      require_params(params, 2, "complete_bipartite");
      const std::size_t m = params[0], n = params[1];
      require_at_least(m, 1, "complete_bipartite");
      require_at_least(n, 1, "complete_bipartite");
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) add(i, m + j);
      return Graph::from_edge_list(m + n, edges);
    }
    case Family::kStar: {
      require_params(params, 1, "star");
      const std::size_t n = params[0];
      require_at_least(n, 1, "star");
      for (std::size_t i = 1; i < n; ++i) add(0, i);
      return Graph::from_edge_list(n, edges);
    }
    case Family::kGrid: {
      require_params(params, 2, "grid");
      const std::size_t rows = params[0], cols = params[1];
      require_at_least(rows, 1, "grid");
      require_at_least(cols, 1, "grid");
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          const std::size_t v = r * cols + c;
          if (c + 1 < cols) add(v, v + 1);
          if (r + 1 < rows) add(v, v + cols);
        }
      }
      return Graph::from_edge_list(rows * cols, edges);
    }
    case Family::kCliqueWithPendants: {
      require_params(params, 2, "clique_with_pendants");
      const std::size_t k = params[0], leaves = params[1];
      require_at_least(k, 1, "clique_with_pendants");
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) add(i, j);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < leaves; ++j) add(i, k + i * leaves + j);
      return Graph::from_edge_list(k + k * leaves, edges);
    }
  }
  throw Error(ErrorCode::kInvalidParams, "unknown family");
}

Graph parse_family_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::kParseError, "graph spec '" + std::string(spec) +
                                            "' is not of the form family:params");
  }
  const std::string_view name = spec.substr(0, colon);
  std::string_view rest = spec.substr(colon + 1);

  std::vector<std::size_t> params;
  while (true) {
    const auto sep = rest.find_first_of("x,");
    const std::string_view token = rest.substr(0, sep);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      throw Error(ErrorCode::kParseError, "bad size '" + std::string(token) + "' in '" +
                                              std::string(spec) + "'");
    }
    params.push_back(value);
    if (sep == std::string_view::npos) break;
    rest = rest.substr(sep + 1);
  }

  struct Alias {
    std::string_view name;
    Family family;
  };
  static constexpr Alias kAliases[] = {
      {"path", Family::kPath},
      {"cycle", Family::kCycle},
      {"wheel", Family::kWheel},
      {"complete", Family::kComplete},
      {"kn", Family::kComplete},
      {"complete_bipartite", Family::kCompleteBipartite},
      {"kbip", Family::kCompleteBipartite},
      {"star", Family::kStar},
      {"grid", Family::kGrid},
      {"clique_with_pendants", Family::kCliqueWithPendants},
      {"kpend", Family::kCliqueWithPendants},
  };
  for (const auto& alias : kAliases) {
    if (alias.name == name) return generate(alias.family, params);
  }
  throw Error(ErrorCode::kParseError, "unknown graph family '" + std::string(name) + "'");
}

Graph read_edge_list(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m) || n < 1 || m < 0) {
    throw Error(ErrorCode::kParseError, "edge list must start with 'n m', n >= 1");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw Error(ErrorCode::kParseError, "expected " + std::to_string(m) +
                                              " edges, read " + std::to_string(i));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::kIndexOutOfRange, "edge line " + std::to_string(i + 1));
    }
    edges.emplace_back(as_vertex(static_cast<std::size_t>(u)),
                       as_vertex(static_cast<std::size_t>(v)));
  }
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

LayerDecomposition layer_decomposition(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw Error(ErrorCode::kIndexOutOfRange, "source " + std::to_string(v));
  }
  LayerDecomposition d;
  d.source = v;
  d.distance = bfs_distances(g, v);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (d.distance[x] == kUnreached) {
      throw Error(ErrorCode::kDisconnected, "vertex " + std::to_string(x) +
                                                " unreachable from " + std::to_string(v));
    }
    d.eccentricity = std::max(d.eccentricity, d.distance[x]);
  }
  d.layers.resize(d.eccentricity + 1);
  d.deg_up.assign(g.order(), 0);
  d.deg_down.assign(g.order(), 0);
  for (std::size_t x = 0; x < g.order(); ++x) {
    const std::size_t i = d.distance[x];
    d.layers[i].push_back(as_vertex(x));
    for (Vertex y : g.neighbours(as_vertex(x))) {
      if (d.distance[y] + 1 == i) ++d.deg_up[x];
      if (d.distance[y] == i + 1) ++d.deg_down[x];
    }
  }
  return d;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<Vertex> queue{as_vertex(s)};
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbours(x)) {
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_connected(const Graph& g) {
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::size_t d) { return d == kUnreached; });
}

Metrics metrics(const Graph& g) {
  Metrics m;
  m.is_bipartite = is_bipartite(g);

  std::vector<bool> seen(g.order(), false);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++m.components;
    const auto dist = bfs_distances(g, as_vertex(s));
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (dist[x] != kUnreached) seen[x] = true;
    }
  }
  if (m.components != 1) return m;

  std::size_t radius = kUnreached, diameter = 0;
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto dist = bfs_distances(g, as_vertex(v));
    const std::size_t ecc = *std::max_element(dist.begin(), dist.end());
    radius = std::min(radius, ecc);
    diameter = std::max(diameter, ecc);
  }
  m.radius = radius;
  m.diameter = diameter;
  return m;
}

std::vector<Twin> twins(const Graph& g) {
  std::vector<Twin> out;
  for (std::size_t u = 0; u < g.order(); ++u) {
    const auto nu = g.neighbours(as_vertex(u));
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      const auto nv = g.neighbours(as_vertex(v));
      if (nu.size() != nv.size()) continue;
      if (std::equal(nu.begin(), nu.end(), nv.begin(), nv.end())) {
        out.push_back({as_vertex(u), as_vertex(v), TwinKind::kOpen});
        continue;
      }
      if (!g.adjacent(as_vertex(u), as_vertex(v))) continue;
      // N[u] = N[v]: drop v from N(u) and u from N(v), compare the rest.
      std::vector<Vertex> a, b;
      std::remove_copy(nu.begin(), nu.end(), std::back_inserter(a), as_vertex(v));
      std::remove_copy(nv.begin(), nv.end(), std::back_inserter(b), as_vertex(u));
      if (a == b) out.push_back({as_vertex(u), as_vertex(v), TwinKind::kClosed});
    }
  }
  return out;
}

}  // namespace diffuse
