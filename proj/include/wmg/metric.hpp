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

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "wmg/graph.hpp"
#include "wmg/graph_core.hpp"
#include "wmg/recognition.hpp"

namespace wmg {

// ---------------------------------------------------------------------------
// Hyperbolicity parameters
// ---------------------------------------------------------------------------

struct FourPointDelta {
  int delta2 = 0;  // doubled delta, so half-integers stay exact
  std::array<int, 4> witness = {0, 0, 0, 0};
};

/// Four-point condition scan: delta = max over vertex quadruples of
/// (largest distance sum - second largest) / 2.
inline FourPointDelta hyperbolicity_delta(const Graph& g, const DistMatrix& d) {
  FourPointDelta out;
  const int n = g.n();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int x = v + 1; x < n; ++x) {
        const int s_uv_x = d(u, v);  // pairs fixed below per y
        for (int y = x + 1; y < n; ++y) {
          const int s1 = s_uv_x + d(x, y);
          const int s2 = d(u, x) + d(v, y);
          const int s3 = d(u, y) + d(v, x);
          int hi = std::max({s1, s2, s3});
          int mid = s1 + s2 + s3 - hi - std::min({s1, s2, s3});
          if (hi - mid > out.delta2) {
            out.delta2 = hi - mid;
            out.witness = {u, v, x, y};
          }
        }
      }
  return out;
}

struct GridSide {
  int kappa = 0;     // largest side found (exact unless capped)
  bool capped = false;
  std::vector<int> witness;  // (kappa+1)^2 vertices, row-major
};

/// Largest k <= cap such that the k x k square grid (k edges per side)
/// embeds isometrically; backtracking with exact distance-profile pruning.
inline GridSide max_isometric_grid_side(const Graph& g, const DistMatrix& d, int cap) {
  GridSide out;
  const int n = g.n();
  auto embeds = [&](int k, std::vector<int>& cells) -> bool {
    const int side = k + 1;
    cells.assign(static_cast<size_t>(side) * side, -1);
    auto rec = [&](auto&& self, int pos) -> bool {
      if (pos == side * side) return true;
      const int r = pos / side, c = pos % side;
      for (int v = 0; v < n; ++v) {
        bool ok = true;
        for (int p = 0; p < pos && ok; ++p)
          ok = d(cells[p], v) == std::abs(p / side - r) + std::abs(p % side - c);
        if (!ok) continue;
        cells[pos] = v;
        if (self(self, pos + 1)) return true;
        cells[pos] = -1;
      }
      return false;
    };
    return rec(rec, 0);
  };
  std::vector<int> cells;
  for (int k = 1; k <= cap; ++k) {
    if (!embeds(k, cells)) return out;
    out.kappa = k;
    out.witness = cells;
  }
  out.capped = out.kappa == cap && cap > 0;
  return out;
}

struct Thinness {
  int nu = 0;
  std::array<int, 4> witness = {0, 0, 0, 0};  // u, v, x, y
};

/// Interval thinness: max distance between equidistant vertices of one
/// interval.
inline Thinness interval_thinness(const Graph& g, const DistMatrix& d) {
  Thinness out;
  const int n = g.n();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      auto iv = interval(g, d, u, v);
      for (size_t a = 0; a < iv.size(); ++a)
        for (size_t b = a + 1; b < iv.size(); ++b) {
          int x = iv[a], y = iv[b];
          if (d(u, x) != d(u, y)) continue;
          if (d(x, y) > out.nu) {
            out.nu = d(x, y);
            out.witness = {u, v, x, y};
          }
        }
    }
  return out;
}

struct HyperbolicityReport {
  bool weakly_modular = false;
  int delta2 = 0;
  std::array<int, 4> delta_witness = {0, 0, 0, 0};
  int mu = 0;
  std::optional<MetricTriangle> mu_witness;
  int kappa = 0;
  bool kappa_capped = false;
  int nu = 0;
  std::array<int, 4> nu_witness = {0, 0, 0, 0};
  // Bound verdicts; empty when the graph is not weakly modular.
  std::optional<bool> mu_le_4delta;
  std::optional<bool> kappa_le_delta;
  std::optional<bool> nu_le_2kappa_plus_mu;
  std::optional<bool> delta_le_32kappa_plus_20mu;
};

/// Full parameter report.  The four inequalities are only meaningful for
/// weakly modular graphs and are left unevaluated otherwise.
inline HyperbolicityReport verify_hyperbolicity_bounds(const Graph& g, const DistMatrix& d,
                                                       int kappa_cap = -1) {
  HyperbolicityReport r;
  r.weakly_modular = is_weakly_modular(g, d);
  auto delta = hyperbolicity_delta(g, d);
  r.delta2 = delta.delta2;
  r.delta_witness = delta.witness;
  auto mu = max_metric_triangle_side(g, d);
  r.mu = mu.mu;
  r.mu_witness = mu.witness;
  // A grid of side floor(delta)+1 already violates kappa <= delta, so the
  // default cap just past that keeps the search cheap and the check sharp.
  if (kappa_cap < 0) kappa_cap = delta.delta2 / 2 + 1;
  auto grid = max_isometric_grid_side(g, d, kappa_cap);
  r.kappa = grid.kappa;
  r.kappa_capped = grid.capped;
  auto thin = interval_thinness(g, d);
  r.nu = thin.nu;
  r.nu_witness = thin.witness;
  if (r.weakly_modular) {
    r.mu_le_4delta = r.mu <= 2 * r.delta2;  // mu <= 4*delta  <=>  mu <= 2*delta2
    r.kappa_le_delta = 2 * r.kappa <= r.delta2;
    r.nu_le_2kappa_plus_mu = r.nu <= 2 * r.kappa + r.mu;
    r.delta_le_32kappa_plus_20mu = r.delta2 <= 2 * (32 * r.kappa + 20 * r.mu);
  }
  return r;
}

// ---------------------------------------------------------------------------
// BFS distance-preserving orderings
// ---------------------------------------------------------------------------

struct BfsOrder {
  std::vector<int> order;   // permutation of V, base first
  std::vector<int> parent;  // father map; base maps to itself
  int base = 0;
};

namespace detail {
// Portable deterministic shuffle (std::shuffle is implementation-defined).
template <typename Rng>
void deterministic_shuffle(std::vector<int>& v, Rng& rng) {
  for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}
}  // namespace detail

/// Seeded BFS order: children are enqueued in seeded random order, so one
/// graph yields many valid orders.
inline BfsOrder bfs_order(const Graph& g, int base, uint64_t seed) {
  if (!g.valid_vertex(base)) throw std::invalid_argument("bfs_order: bad base vertex");
  BfsOrder out;
  out.base = base;
  out.parent.assign(g.n(), -1);
  out.parent[base] = base;
  std::mt19937_64 rng(seed);
  std::deque<int> q{base};
  out.order.push_back(base);
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    std::vector<int> fresh;
    for (int v : g.neighbors(u))
      if (out.parent[v] < 0) fresh.push_back(v);
    detail::deterministic_shuffle(fresh, rng);
    for (int v : fresh) {
      out.parent[v] = u;
      out.order.push_back(v);
      q.push_back(v);
    }
  }
  return out;
}

struct DistancePreserving {
  bool yes = false;
  std::array<int, 2> witness = {-1, -1};  // pair whose prefix distance is wrong
};

/// Every prefix of the order must induce an isometric subgraph.  Since
/// prefixes only grow, it suffices to check pairs involving each newly
/// added vertex.
inline DistancePreserving is_distance_preserving(const Graph& g, const DistMatrix& d,
                                                 const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.n())
    throw std::invalid_argument("is_distance_preserving: order must be a permutation");
  {
    std::vector<char> seen(g.n(), 0);
    for (int v : order) {
      if (!g.valid_vertex(v) || seen[v])
        throw std::invalid_argument("is_distance_preserving: order must be a permutation");
      seen[v] = 1;
    }
  }
  VBits prefix(g.n());
  for (int k = 0; k < g.n(); ++k) {
    int v = order[k];
    prefix.set(v);
    auto dist = bfs_in_subset(g, prefix, v);
    for (int j = 0; j <= k; ++j) {
      int u = order[j];
      if (dist[u] != d(v, u)) return DistancePreserving{false, {v, u}};
    }
  }
  return DistancePreserving{true, {-1, -1}};
}

// ---------------------------------------------------------------------------
// Quadratic-area disc fillings for meshed graphs
// ---------------------------------------------------------------------------

/// A filling is a move sequence nullifying a closed walk.  Face moves swap
/// one boundary arc of a triangle or square of G for the complementary arc;
/// cancel moves delete a backtrack (x,y,x).  Area counts face moves only.
struct DiscFilling {
  struct Move {
    bool is_face = true;
    int at = 0;                    // index into the current walk
    std::vector<int> face;         // triangle or square, cyclic order
    std::vector<int> replace_path;
    std::vector<int> with_path;
  };
  std::vector<Move> moves;
  int area = 0;
};

namespace detail {

inline bool is_face_of(const Graph& g, const std::vector<int>& face) {
  if (face.size() == 3) {
    return g.adjacent(face[0], face[1]) && g.adjacent(face[1], face[2]) &&
           g.adjacent(face[0], face[2]);
  }
  if (face.size() == 4) {
    return g.adjacent(face[0], face[1]) && g.adjacent(face[1], face[2]) &&
           g.adjacent(face[2], face[3]) && g.adjacent(face[3], face[0]) &&
           !g.adjacent(face[0], face[2]) && !g.adjacent(face[1], face[3]);
  }
  return false;
}

// replace + reverse(with) must trace the face boundary.
inline bool arcs_complementary(const std::vector<int>& face, const std::vector<int>& rep,
                               const std::vector<int>& with) {
  if (rep.size() + with.size() != face.size() + 2) return false;
  if (rep.front() != with.front() || rep.back() != with.back()) return false;
  std::vector<int> cyc = rep;
  for (size_t i = with.size() - 1; i-- > 1;) cyc.push_back(with[i]);
  if (cyc.size() != face.size()) return false;
  // cyc must be a rotation (in either direction) of face
  for (size_t shift = 0; shift < face.size(); ++shift) {
    bool fwd = true, bwd = true;
    for (size_t i = 0; i < face.size(); ++i) {
      if (cyc[i] != face[(shift + i) % face.size()]) fwd = false;
      if (cyc[i] != face[(shift + face.size() - i) % face.size()]) bwd = false;
    }
    if (fwd || bwd) return true;
  }
  return false;
}

}  // namespace detail

/// Apply one move to a walk; returns false when the move does not match.
inline bool apply_filling_move(const Graph& g, std::vector<int>& walk,
                               const DiscFilling::Move& m) {
  if (!m.is_face) {
    if (m.at < 0 || m.at + 2 >= static_cast<int>(walk.size())) return false;
    if (walk[m.at] != walk[m.at + 2]) return false;
    walk.erase(walk.begin() + m.at + 1, walk.begin() + m.at + 3);
    return true;
  }
  if (!detail::is_face_of(g, m.face)) return false;
  if (!detail::arcs_complementary(m.face, m.replace_path, m.with_path)) return false;
  if (m.at < 0 || m.at + m.replace_path.size() > walk.size()) return false;
  for (size_t i = 0; i < m.replace_path.size(); ++i)
    if (walk[m.at + i] != m.replace_path[i]) return false;
  std::vector<int> next(walk.begin(), walk.begin() + m.at);
  next.insert(next.end(), m.with_path.begin(), m.with_path.end());
  next.insert(next.end(), walk.begin() + m.at + m.replace_path.size(), walk.end());
  walk = std::move(next);
  return true;
}

/// Replays a filling against the cycle it was built for; true iff every
/// move applies and the walk collapses to a single vertex.
inline bool replay_filling(const Graph& g, const std::vector<int>& cycle,
                           const DiscFilling& filling) {
  std::vector<int> walk = cycle;
  if (cycle.size() > 1) walk.push_back(cycle.front());
  for (const auto& m : filling.moves)
    if (!apply_filling_move(g, walk, m)) return false;
  return walk.size() == 1;
}

namespace detail {

// Shared state of the filling construction: the evolving walk plus the
// emitted moves, with every move applied through the same path the replay
// takes.
struct FillState {
  const Graph& g;
  const DistMatrix& d;
  std::vector<int> walk;
  DiscFilling out;

  void face_move(int at, std::vector<int> face, std::vector<int> rep, std::vector<int> with) {
    DiscFilling::Move m{true, at, std::move(face), std::move(rep), std::move(with)};
    if (!apply_filling_move(g, walk, m)) throw std::logic_error("fill_cycle: bad face move");
    out.moves.push_back(std::move(m));
    ++out.area;
  }
  void cancel_move(int at) {
    DiscFilling::Move m{false, at, {}, {}, {}};
    if (!apply_filling_move(g, walk, m)) throw std::logic_error("fill_cycle: bad cancel move");
    out.moves.push_back(std::move(m));
  }

  // Smallest-id common neighbor of a and b whose distance from u is at most
  // bound (meshedness guarantees existence).
  int meshed_neighbor(int u, int a, int b, int bound) {
    for (int x : g.common_neighbors(a, b))
      if (d(u, x) <= bound) return x;
    throw std::logic_error("fill_cycle: meshedness witness missing");
  }

  // Precondition: walk starts with the shortest path P followed by w.
  // Rewrites that arc into a shortest (P.front(), w)-path and returns it.
  std::vector<int> extend(std::vector<int> P, int w) {
    const int u = P.front();
    const int v = P.back();
    const int k = static_cast<int>(P.size()) - 1;
    const int l = d(u, w);
    if (l == k + 1) {  // Case 1: P itself extends
      P.push_back(w);
      return P;
    }
    if (l == k) {  // Case 2
      const int vp = P[k - 1];
      if (g.adjacent(vp, w)) {
        face_move(k - 1, {vp, v, w}, {vp, v, w}, {vp, w});
        P.pop_back();
        P.push_back(w);
        return P;
      }
      const int wp = meshed_neighbor(u, vp, w, k - 1);
      if (g.adjacent(v, wp)) {
        face_move(k - 1, {vp, v, wp}, {vp, v}, {vp, wp, v});
        face_move(k, {wp, v, w}, {wp, v, w}, {wp, w});
      } else {
        face_move(k - 1, {vp, v, w, wp}, {vp, v, w}, {vp, wp, w});
      }
      std::vector<int> Pp(P.begin(), P.end() - 1);
      auto Q = extend(std::move(Pp), wp);  // Case 2 at k-1
      Q.push_back(w);
      return Q;
    }
    // Case 3: l == k - 1
    const int vp = P[k - 1];
    if (w == vp) {
      cancel_move(k - 1);
      P.pop_back();
      return P;
    }
    if (g.adjacent(vp, w)) {
      face_move(k - 1, {vp, v, w}, {vp, v, w}, {vp, w});
      std::vector<int> Pp(P.begin(), P.end() - 1);
      return extend(std::move(Pp), w);  // Case 2 at k-1
    }
    const int zp = meshed_neighbor(u, vp, w, k - 1);
    if (g.adjacent(v, zp)) {
      face_move(k - 1, {vp, v, zp}, {vp, v}, {vp, zp, v});
      face_move(k, {zp, v, w}, {zp, v, w}, {zp, w});
    } else {
      face_move(k - 1, {vp, v, w, zp}, {vp, v, w}, {vp, zp, w});
    }
    std::vector<int> Pp(P.begin(), P.end() - 1);
    if (d(u, zp) == k - 2) {
      auto Q = extend(std::move(Pp), zp);  // Case 3 at k-1
      Q.push_back(w);
      return Q;
    }
    auto Z = extend(std::move(Pp), zp);  // Case 2 at k-1
    return extend(std::move(Z), w);      // Case 2 again
  }
};

}  // namespace detail

/// Constructive quadratic filling: walks the cycle once, replacing the
/// prefix geodesic step by step; each elementary step costs at most a
/// bounded number of faces, giving area <= 2*len^2 on meshed graphs.
inline DiscFilling fill_cycle(const Graph& g, const DistMatrix& d, const std::vector<int>& cycle) {
  if (cycle.empty()) throw NotAClosedWalkError("empty cycle");
  for (int v : cycle)
    if (!g.valid_vertex(v)) throw NotAClosedWalkError("cycle vertex out of range");
  const int n = static_cast<int>(cycle.size());
  for (int i = 0; i < n; ++i) {
    int a = cycle[i], b = cycle[(i + 1) % n];
    if (n > 1 && !g.adjacent(a, b))
      throw NotAClosedWalkError("consecutive cycle vertices must be adjacent");
  }
  if (!detail::check_meshed(g, d).yes)
    throw NotApplicableError("fill_cycle requires a meshed graph");

  detail::FillState st{g, d, {}, {}};
  st.walk = cycle;
  if (n > 1) st.walk.push_back(cycle.front());
  std::vector<int> P{cycle.front()};
  for (int i = 1; i <= n && n > 1; ++i) {
    int target = i < n ? cycle[i] : cycle.front();
    P = st.extend(std::move(P), target);
  }
  if (st.walk.size() != 1) throw std::logic_error("fill_cycle: walk did not collapse");
  return st.out;
}

}  // namespace wmg
