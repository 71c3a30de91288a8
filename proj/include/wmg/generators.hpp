// Copyright 2026 The wmg Authors
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

#pragma once

#include <random>
#include <vector>

#include "wmg/graph.hpp"
#include "wmg/graph_core.hpp"

namespace wmg {

inline Graph path_graph(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(k, std::move(e));
}

inline Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return Graph::from_edges(k, std::move(e));
}

inline Graph complete_graph(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return Graph::from_edges(k, std::move(e));
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edges(a + b, std::move(e));
}

/// rows x cols vertex grid (so side lengths rows-1 and cols-1 in edges).
inline Graph grid_graph(int rows, int cols) {
  auto id = [cols](int r, int c) { return r * cols + c; };
  std::vector<std::pair<int, int>> e;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
    }
  return Graph::from_edges(rows * cols, std::move(e));
}

inline Graph cube_graph(int dim) {
  if (dim < 0 || dim > 20) throw std::invalid_argument("cube dimension out of range");
  int n = 1 << dim;
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (!(v >> b & 1)) e.emplace_back(v, v | (1 << b));
  return Graph::from_edges(n, std::move(e));
}

/// K_{k x 2}: complete graph on 2k vertices minus the perfect matching
/// (2i, 2i+1).
inline Graph hyperoctahedron(int k) {
  if (k < 1) throw std::invalid_argument("hyperoctahedron needs k >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 2 * k; ++i)
    for (int j = i + 1; j < 2 * k; ++j)
      if (!(i / 2 == j / 2)) e.emplace_back(i, j);
  return Graph::from_edges(2 * k, std::move(e));
}

/// Cartesian product; vertex (u,v) gets id u * b.n() + v.
inline Graph cartesian_product(const Graph& a, const Graph& b) {
  auto id = [&](int u, int v) { return u * b.n() + v; };
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < a.n(); ++u)
    for (auto [x, y] : b.edges()) e.emplace_back(id(u, x), id(u, y));
  for (int v = 0; v < b.n(); ++v)
    for (auto [x, y] : a.edges()) e.emplace_back(id(x, v), id(y, v));
  return Graph::from_edges(a.n() * b.n(), std::move(e));
}

/// Gated amalgam: glue a and b along the interface map_a[i] <-> map_b[i].
/// The shared subgraphs must be induced-isomorphic via the correspondence
/// and gated in both factors.  Vertices of a keep their ids; outside-the-
/// interface vertices of b follow.
inline Graph gated_amalgam(const Graph& a, const Graph& b, const std::vector<int>& map_a,
                           const std::vector<int>& map_b) {
  if (map_a.size() != map_b.size() || map_a.empty())
    throw std::invalid_argument("amalgam interface maps must be nonempty and equal length");
  for (auto [m, gr] : {std::make_pair(&map_a, &a), std::make_pair(&map_b, &b)}) {
    auto s = *m;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end() || s.front() < 0 ||
        s.back() >= gr->n())
      throw std::invalid_argument("amalgam interface map has invalid or repeated vertices");
  }
  for (size_t i = 0; i < map_a.size(); ++i)
    for (size_t j = i + 1; j < map_a.size(); ++j)
      if (a.adjacent(map_a[i], map_a[j]) != b.adjacent(map_b[i], map_b[j]))
        throw std::invalid_argument("amalgam interface subgraphs are not isomorphic");
  auto da = all_pairs_distances(a);
  auto db = all_pairs_distances(b);
  if (!is_gated(a, da, [&] { auto s = map_a; std::sort(s.begin(), s.end()); return s; }()) ||
      !is_gated(b, db, [&] { auto s = map_b; std::sort(s.begin(), s.end()); return s; }()))
    throw std::invalid_argument("amalgam interface not gated in either factor");

  std::vector<int> b_to_new(b.n(), -1);
  for (size_t i = 0; i < map_b.size(); ++i) b_to_new[map_b[i]] = map_a[i];
  int next = a.n();
  for (int v = 0; v < b.n(); ++v)
    if (b_to_new[v] < 0) b_to_new[v] = next++;
  std::vector<std::pair<int, int>> e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(b_to_new[u], b_to_new[v]);
  return Graph::from_edges(next, std::move(e));
}

namespace detail {
inline uint64_t draw(std::mt19937_64& rng, uint64_t bound) { return rng() % bound; }
}  // namespace detail

/// Seeded random swm-graph: a composition of Cartesian products and gated
/// amalgams over base swm pieces (cliques, cubes, complete bipartite
/// graphs).  Closure of the class under both operations makes every output
/// swm by construction; the test suite re-verifies.
inline Graph random_swm(uint64_t seed, int max_vertices = 40) {
  std::mt19937_64 rng(seed);
  auto base_piece = [&]() -> Graph {
    switch (detail::draw(rng, 4)) {
      case 0: return complete_graph(2 + static_cast<int>(detail::draw(rng, 3)));
      case 1: return cube_graph(1 + static_cast<int>(detail::draw(rng, 3)));
      case 2:
        return complete_bipartite(2 + static_cast<int>(detail::draw(rng, 2)),
                                  2 + static_cast<int>(detail::draw(rng, 2)));
      default: return path_graph(2 + static_cast<int>(detail::draw(rng, 3)));
    }
  };
  Graph g = base_piece();
  const int rounds = 1 + static_cast<int>(detail::draw(rng, 3));
  for (int r = 0; r < rounds; ++r) {
    Graph piece = base_piece();
    if (detail::draw(rng, 2) == 0 && g.n() * piece.n() <= max_vertices) {
      g = cartesian_product(g, piece);
      continue;
    }
    if (g.n() + piece.n() - 1 > max_vertices) break;
    // Amalgamate along a vertex, or along an edge when one is gated in both.
    int va = static_cast<int>(detail::draw(rng, g.n()));
    int vb = static_cast<int>(detail::draw(rng, piece.n()));
    if (detail::draw(rng, 2) == 0 && piece.degree(vb) > 0 && g.degree(va) > 0) {
      int wa = g.neighbors(va)[detail::draw(rng, g.degree(va))];
      int wb = piece.neighbors(vb)[detail::draw(rng, piece.degree(vb))];
      try {
        g = gated_amalgam(g, piece, {va, wa}, {vb, wb});
        continue;
      } catch (const std::invalid_argument&) {
        // edge not gated in one factor; fall through to the vertex amalgam
      }
    }
    g = gated_amalgam(g, piece, {va}, {vb});
  }
  return g;
}

}  // namespace wmg
