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

#include <map>
#include <set>
#include <vector>

#include "wmg/graph.hpp"
#include "wmg/recognition.hpp"

namespace wmg {

/// Radius-r ball of the universal cover of the triangle-square complex,
/// with its cellular projection to the base graph.
struct CoverBall {
  Graph graph;
  std::vector<int> projection;  // cover vertex -> base vertex
  std::vector<int> layer;       // cover vertex -> distance from the base point
  int radius = 0;
  int base_cover = 0;  // lift of the base point (always vertex 0)
  int base = 0;        // base point in the original graph
};

/// Layer-by-layer construction of the cover ball.  New vertices of layer
/// i+1 are equivalence classes of pairs (w, z) — w a layer-i cover vertex,
/// z a base neighbor of its image not yet covered around w — glued when the
/// sources coincide or are adjacent, or when they close a square through
/// layer i-1; edges follow the three adjacency rules of the construction.
inline CoverBall universal_cover_ball(const Graph& g, const DistMatrix& d, int v, int r,
                                      size_t layer_cap = 1'000'000) {
  if (!g.valid_vertex(v)) throw std::invalid_argument("universal_cover_ball: bad base vertex");
  if (r < 0) throw std::invalid_argument("universal_cover_ball: negative radius");
  if (!check_metric_family(g, d, Family::LocallyWeaklyModular).yes)
    throw NotApplicableError("universal cover construction requires a locally weakly modular graph");

  std::vector<int> proj{v};
  std::vector<int> layer{0};
  std::vector<std::vector<int>> adj{{}};
  auto add_edge = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };

  // Layer 1: the unit ball of v lifts isomorphically.
  if (r >= 1) {
    std::map<int, int> lift;  // base -> cover id for layer-1 vertices
    for (int w : g.neighbors(v)) {
      lift[w] = static_cast<int>(proj.size());
      proj.push_back(w);
      layer.push_back(1);
      adj.push_back({});
      add_edge(0, lift[w]);
    }
    for (int w : g.neighbors(v))
      for (int x : g.neighbors(v))
        if (w < x && g.adjacent(w, x)) add_edge(lift[w], lift[x]);
  }

  std::vector<int> cur_layer;  // layer i vertices
  for (size_t id = 1; id < proj.size(); ++id) cur_layer.push_back(static_cast<int>(id));

  auto cover_adjacent = [&](int a, int b) {
    for (int x : adj[a])
      if (x == b) return true;
    return false;
  };

  for (int i = 1; i < r; ++i) {
    // Z = pairs (w, z): w in layer i, z a base neighbor of proj(w) whose
    // lift is missing from the closed unit cover-ball of w.
    struct ZPair {
      int w;  // cover vertex
      int z;  // base vertex
    };
    std::vector<ZPair> Z;
    std::vector<std::vector<int>> z_ids_of_w(proj.size());
    for (int w : cur_layer) {
      std::set<int> covered;
      covered.insert(proj[w]);
      for (int x : adj[w]) covered.insert(proj[x]);
      for (int z : g.neighbors(proj[w]))
        if (!covered.count(z)) {
          z_ids_of_w[w].push_back(static_cast<int>(Z.size()));
          Z.push_back({w, z});
        }
    }
    if (Z.empty()) break;

    // Union-find over Z closing the gluing rules (Z1) and (Z2).
    std::vector<int> uf(Z.size());
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    auto unite = [&](int a, int b) { uf[find(a)] = find(b); };

    std::map<int, std::vector<int>> by_z;
    for (size_t zi = 0; zi < Z.size(); ++zi) by_z[Z[zi].z].push_back(static_cast<int>(zi));
    for (auto& [z, ids] : by_z) {
      for (size_t a = 0; a < ids.size(); ++a)
        for (size_t b = a + 1; b < ids.size(); ++b) {
          int wa = Z[ids[a]].w, wb = Z[ids[b]].w;
          if (cover_adjacent(wa, wb)) {
            unite(ids[a], ids[b]);  // (Z1)
            continue;
          }
          // (Z2): u in layer i-1 adjacent to both, with (u, wa, z, wb) a
          // square of the base graph.
          int pa = proj[wa], pb = proj[wb];
          if (g.adjacent(pa, pb)) continue;
          for (int u : adj[wa]) {
            if (layer[u] != i - 1 || !cover_adjacent(u, wb)) continue;
            int pu = proj[u];
            if (!g.adjacent(pu, z) && g.adjacent(pu, pa) && g.adjacent(pu, pb)) {
              unite(ids[a], ids[b]);
              break;
            }
          }
        }
    }

    // Materialize classes as layer i+1 vertices.
    std::map<int, int> class_vertex;
    for (size_t zi = 0; zi < Z.size(); ++zi) {
      int root = find(static_cast<int>(zi));
      if (!class_vertex.count(root)) {
        class_vertex[root] = static_cast<int>(proj.size());
        proj.push_back(Z[zi].z);
        layer.push_back(i + 1);
        adj.push_back({});
        if (proj.size() > layer_cap)
          throw RadiusTooLargeError("cover ball exceeded layer cap of " +
                                    std::to_string(layer_cap) + " vertices");
      }
    }

    std::set<std::pair<int, int>> new_edges;
    auto add_new = [&](int a, int b) {
      if (a > b) std::swap(a, b);
      if (new_edges.insert({a, b}).second) add_edge(a, b);
    };
    // rule (2): w -- [w, z]
    for (size_t zi = 0; zi < Z.size(); ++zi) add_new(Z[zi].w, class_vertex[find(static_cast<int>(zi))]);
    // rule (3): [w, z] -- [w, z'] when z ~ z' in the base graph
    for (int w : cur_layer) {
      const auto& ids = z_ids_of_w[w];
      for (size_t a = 0; a < ids.size(); ++a)
        for (size_t b = a + 1; b < ids.size(); ++b)
          if (g.adjacent(Z[ids[a]].z, Z[ids[b]].z))
            add_new(class_vertex[find(ids[a])], class_vertex[find(ids[b])]);
    }

    cur_layer.clear();
    for (auto& kv : class_vertex) cur_layer.push_back(kv.second);
  }

  std::vector<std::pair<int, int>> edges;
  for (size_t u = 0; u < adj.size(); ++u)
    for (int w : adj[u])
      if (static_cast<int>(u) < w) edges.emplace_back(static_cast<int>(u), w);
  CoverBall ball;
  ball.graph = Graph::from_edges(static_cast<int>(proj.size()), std::move(edges));
  ball.projection = std::move(proj);
  ball.layer = std::move(layer);
  ball.radius = r;
  ball.base_cover = 0;
  ball.base = v;
  return ball;
}

inline CoverBall universal_cover_ball(const Graph& g, int v, int r,
                                      size_t layer_cap = 1'000'000) {
  auto d = all_pairs_distances(g);
  return universal_cover_ball(g, d, v, r, layer_cap);
}

/// Checks that the projection restricted to the closed unit ball of every
/// interior vertex (layer < radius) is an isomorphism onto the unit ball of
/// its image — the covering-map condition.
inline bool cover_ball_locally_isomorphic(const Graph& g, const CoverBall& b) {
  for (int u = 0; u < b.graph.n(); ++u) {
    if (b.layer[u] >= b.radius) continue;
    std::vector<int> ball{u};
    for (int x : b.graph.neighbors(u)) ball.push_back(x);
    std::set<int> image;
    for (int x : ball) image.insert(b.projection[x]);
    if (image.size() != ball.size()) return false;
    std::set<int> target{b.projection[u]};
    for (int y : g.neighbors(b.projection[u])) target.insert(y);
    if (image != target) return false;
    for (int x : ball)
      for (int y : ball)
        if (x < y &&
            b.graph.adjacent(x, y) != g.adjacent(b.projection[x], b.projection[y]))
          return false;
  }
  return true;
}

}  // namespace wmg
