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

#include "diffuse/random.hpp"

#include <limits>
#include <vector>

#include "diffuse/error.hpp"

namespace diffuse {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return splitmix64(master + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error(ErrorCode::kInvalidRange, "uniform: lo > hi");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  std::uint64_t draw = engine_();
  if (span != 0) {
    // Reject the top partial bucket so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    while (draw >= limit) draw = engine_();
    draw %= span;
  }
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw);
}

std::size_t Rng::below(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidRange, "below: empty range");
  return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1));
}

bool Rng::chance(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw Error(ErrorCode::kInvalidRange, "chance: zero denominator");
  return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(den) - 1)) < num;
}

ChipConfiguration random_config(std::size_t n, Chips lo, Chips hi, Rng& rng) {
  if (lo > hi) {
    throw Error(ErrorCode::kInvalidRange,
                "chip range " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  std::vector<Chips> values(n);
  for (auto& v : values) v = rng.uniform(lo, hi);
  return ChipConfiguration(std::move(values));
}

ChipConfiguration random_config(const Graph& g, Chips lo, Chips hi, std::uint64_t seed) {
  Rng rng(seed);
  return random_config(g.order(), lo, hi, rng);
}

Graph random_tree(std::size_t n, Rng& rng) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(rng.below(i)), static_cast<Vertex>(i));
  }
  return Graph::from_edge_list(n, edges);
}

Graph random_gnp(std::size_t n, std::uint64_t num, std::uint64_t den, Rng& rng) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.chance(num, den)) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph random_connected_bipartite(std::size_t max_vertices, Rng& rng) {
  if (max_vertices < 2) throw Error(ErrorCode::kInvalidSize, "need room for two vertices");
  auto size_in = [&rng](std::size_t lo, std::size_t hi) {
    return lo + rng.below(hi - lo + 1);
  };
  switch (rng.below(7)) {
    case 0:
      return random_tree(size_in(2, max_vertices), rng);
    case 1:
      return generate(Family::kPath, {size_in(2, max_vertices)});
    case 2:
      return generate(Family::kStar, {size_in(2, max_vertices)});
    case 3:
      if (max_vertices >= 4) {
        return generate(Family::kCycle, {2 * size_in(2, max_vertices / 2)});
      }
      return generate(Family::kPath, {max_vertices});
    case 4: {
      const std::size_t rows = size_in(1, std::max<std::size_t>(1, max_vertices / 2));
      const std::size_t cols = size_in(std::max<std::size_t>(1, rows == 1 ? 2 : 1),
                                       std::max<std::size_t>(2, max_vertices / rows));
      return generate(Family::kGrid, {rows, cols});
    }
    case 5: {
      const std::size_t m = size_in(1, max_vertices - 1);
      const std::size_t n = size_in(1, max_vertices - m);
      return generate(Family::kCompleteBipartite, {m, n});
    }
    default: {
      // Tree plus random edges between opposite depth parities.
      const std::size_t n = size_in(2, max_vertices);
      std::vector<Edge> edges;
      std::vector<int> parity(n, 0);
      for (std::size_t i = 1; i < n; ++i) {
        const std::size_t parent = rng.below(i);
        parity[i] = 1 - parity[parent];
        edges.emplace_back(static_cast<Vertex>(parent), static_cast<Vertex>(i));
      }
      std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
      for (auto [u, v] : edges) present[u][v] = present[v][u] = true;
      const std::size_t extra = rng.below(n + 1);
      for (std::size_t e = 0; e < extra; ++e) {
        const std::size_t u = rng.below(n), v = rng.below(n);
        if (parity[u] == parity[v] || present[u][v]) continue;
        present[u][v] = present[v][u] = true;
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
      return Graph::from_edge_list(n, edges);
    }
  }
}

}  // namespace diffuse
