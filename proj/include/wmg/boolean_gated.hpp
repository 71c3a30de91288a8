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
#include <optional>
#include <set>
#include <vector>

#include "wmg/graph.hpp"
#include "wmg/graph_core.hpp"
#include "wmg/recognition.hpp"

namespace wmg {

namespace detail {
inline void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(what);
}
}  // namespace detail

/// The poset B(G) of Boolean-gated vertex sets of finite diameter, ordered
/// by reverse inclusion.  Maximal cliques are exactly the diameter-1
/// members; singletons the diameter-0 ones.
struct BooleanGatedPoset {
  std::vector<std::vector<int>> sets;  // sorted members, lexicographic order
  std::vector<VBits> bits;             // same sets as bitmasks
  std::vector<int> diameter;
  int index_of(const std::vector<int>& members) const {
    auto it = std::lower_bound(sets.begin(), sets.end(), members);
    if (it == sets.end() || *it != members) return -1;
    return static_cast<int>(it - sets.begin());
  }
};

/// Covering graph of B(G) under reverse inclusion, with the original
/// vertices injected as singleton sets and the Hasse orientation.
struct BarycentricGraph {
  Graph graph;
  std::vector<int> origin;                       // vertex of G -> node id
  std::vector<std::vector<int>> sets;            // node id -> members
  std::vector<std::pair<int, int>> orientation;  // Hasse: superset -> subset
};

struct NormalPath {
  std::vector<int> vertices;            // x0..xk in V(G)
  std::vector<std::vector<int>> hulls;  // gated hulls <x_i, x_{i+1}>
};

/// An swm-graph handle: verifies the swm property once at construction and
/// caches the machinery every toolkit operation shares (distances, Boolean
/// pairs, B(G), the thickening and its distances).
class SwmGraph {
 public:
  explicit SwmGraph(Graph g) : g_(std::move(g)), d_(all_pairs_distances(g_)) {
    auto verdict = check_swm(g_, d_);
    if (!verdict.yes)
      throw NotApplicableError("graph is not an swm-graph (" + verdict.witness_kind + ")");
    build_boolean_pairs();
    build_poset();
    build_thickening();
  }

  const Graph& graph() const { return g_; }
  const DistMatrix& dist() const { return d_; }
  int n() const { return g_.n(); }

  bool is_boolean_pair(int p, int q) const { return boolean_[static_cast<size_t>(p) * n() + q]; }

  const BooleanGatedPoset& poset() const { return poset_; }

  /// Index in the poset of the Boolean-gated hull <p,q> of a Boolean pair.
  int hull_index(int p, int q) const {
    int idx = hull_of_pair_[static_cast<size_t>(p) * n() + q];
    detail::require(idx >= 0, "hull_index: pair is not Boolean");
    return idx;
  }
  const std::vector<int>& hull_members(int p, int q) const { return poset_.sets[hull_index(p, q)]; }

  const Graph& thickening() const { return thick_; }
  const DistMatrix& thickening_dist() const { return thick_d_; }
  int dist_delta(int u, int v) const { return thick_d_(u, v); }

  Graph partial_thickening(int k) const {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n(); ++u)
      for (int v = u + 1; v < n(); ++v)
        if (d_(u, v) <= k && is_boolean_pair(u, v)) edges.emplace_back(u, v);
    return Graph::from_edges(n(), std::move(edges));
  }

  /// Maximum diameter of a Boolean-gated set (equivalently the largest
  /// isometric cube subgraph).
  int cube_dimension() const {
    int out = 0;
    for (int x : poset_.diameter) out = std::max(out, x);
    return out;
  }

  /// Gate of u in the poset member with the given index.
  int gate_in_set(int set_index, int u) const {
    auto gt = gate(g_, d_, poset_.sets[set_index], u);
    detail::require(gt.has_value(), "gate_in_set: Boolean-gated set has no gate");
    return *gt;
  }

  /// Gate of p in the (dist_delta(p,q)-1)-ball of the thickening around q;
  /// the first step from p toward q along the normal path structure.
  int delta_gate(int p, int q) const {
    if (p == q) throw std::invalid_argument("delta_gate: vertices must differ");
    const int radius = dist_delta(p, q) - 1;
    std::vector<int> ball;
    for (int w = 0; w < n(); ++w)
      if (thick_d_(q, w) <= radius) ball.push_back(w);
    auto gt = gate(g_, d_, ball, p);
    detail::require(gt.has_value(), "delta_gate: thickening ball has no gate");
    return *gt;
  }

  /// The unique normal Boolean-gated path from p to q, built backwards by
  /// x_i = Delta-gate of p at x_{i+1}.
  NormalPath normal_bg_path(int p, int q) const {
    NormalPath out;
    out.vertices.push_back(q);
    int cur = q;
    while (cur != p) {
      cur = delta_gate(cur, p);  // gate of cur in the ball around p
      out.vertices.push_back(cur);
    }
    std::reverse(out.vertices.begin(), out.vertices.end());
    detail::require(static_cast<int>(out.vertices.size()) == dist_delta(p, q) + 1,
                    "normal_bg_path: constructed path is not a geodesic");
    for (size_t i = 0; i + 1 < out.vertices.size(); ++i)
      out.hulls.push_back(hull_members(out.vertices[i], out.vertices[i + 1]));
    return out;
  }

  /// Normality predicate for an arbitrary vertex sequence: consecutive
  /// pairs Boolean, and every Boolean-gated superset B of <x_{i-1},x_i>
  /// meets <x_i,x_{i+1}> exactly in x_i.
  bool is_normal_bg_path(const std::vector<int>& path) const {
    if (path.empty()) return false;
    for (size_t i = 0; i + 1 < path.size(); ++i)
      if (path[i] == path[i + 1] || !is_boolean_pair(path[i], path[i + 1])) return false;
    for (size_t i = 1; i + 1 < path.size(); ++i) {
      const VBits& prev = poset_.bits[hull_index(path[i - 1], path[i])];
      const VBits& next = poset_.bits[hull_index(path[i], path[i + 1])];
      for (size_t b = 0; b < poset_.sets.size(); ++b) {
        if (!prev.is_subset_of(poset_.bits[b])) continue;
        VBits meet = poset_.bits[b];
        meet &= next;
        if (meet.count() != 1 || !meet.test(path[i])) return false;
      }
    }
    return true;
  }

  /// 1-fellow-traveler check for the normal paths from p to x and q to y,
  /// with the shorter path extended by repeating its endpoint.
  bool verify_fellow_traveler(int p, int q, int x, int y) const {
    if (dist_delta(p, q) > 1 || dist_delta(x, y) > 1)
      throw std::invalid_argument(
          "verify_fellow_traveler: endpoints must be at thickening distance <= 1");
    auto a = normal_bg_path(p, x).vertices;
    auto b = normal_bg_path(q, y).vertices;
    const size_t len = std::max(a.size(), b.size());
    for (size_t i = 0; i < len; ++i) {
      int av = a[std::min(i, a.size() - 1)];
      int bv = b[std::min(i, b.size() - 1)];
      if (dist_delta(av, bv) > 1) return false;
    }
    return true;
  }

  /// p lies between x and y in the thickening metric; cross-validated
  /// against the Delta-gate criterion (gates of x and y at p distinct and
  /// non-adjacent in the thickening).
  bool geodesic_extension_check(int x, int y, int p) const {
    if (p == x || p == y)
      throw std::invalid_argument("geodesic_extension_check: p must differ from x and y");
    const bool metric = dist_delta(x, y) == dist_delta(x, p) + dist_delta(p, y);
    const int gx = delta_gate(p, x);
    const int gy = delta_gate(p, y);
    const bool gates = dist_delta(gx, gy) >= 2;
    detail::require(metric == gates, "geodesic extension criteria disagree");
    return metric;
  }

  BarycentricGraph barycentric() const {
    BarycentricGraph out;
    const auto& sets = poset_.sets;
    const size_t m = sets.size();
    std::vector<std::pair<int, int>> edges;
    for (size_t a = 0; a < m; ++a)
      for (size_t b = 0; b < m; ++b) {
        if (a == b || sets[a].size() >= sets[b].size()) continue;
        if (!poset_.bits[a].is_subset_of(poset_.bits[b])) continue;
        bool covering = true;  // nothing strictly between a and b
        for (size_t c = 0; c < m && covering; ++c) {
          if (c == a || c == b) continue;
          if (sets[c].size() <= sets[a].size() || sets[c].size() >= sets[b].size()) continue;
          if (poset_.bits[a].is_subset_of(poset_.bits[c]) &&
              poset_.bits[c].is_subset_of(poset_.bits[b]))
            covering = false;
        }
        if (covering) {
          edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
          out.orientation.emplace_back(static_cast<int>(b), static_cast<int>(a));
        }
      }
    out.graph = Graph::from_edges(static_cast<int>(m), std::move(edges));
    out.sets = sets;
    out.origin.assign(n(), -1);
    for (int v = 0; v < n(); ++v) {
      int idx = poset_.index_of({v});
      detail::require(idx >= 0, "barycentric: missing singleton");
      out.origin[v] = idx;
    }
    return out;
  }

 private:
  void build_boolean_pairs() {
    const int nn = n();
    boolean_.assign(static_cast<size_t>(nn) * nn, 0);
    for (int p = 0; p < nn; ++p)
      for (int q = p; q < nn; ++q) {
        bool b = boolean_pair_test(p, q);
        boolean_[static_cast<size_t>(p) * nn + q] = b;
        boolean_[static_cast<size_t>(q) * nn + p] = b;
      }
  }

  // Interval-lattice test: walk a maximal chain of I(p,q) and confirm every
  // step past the first is the join of the previous element with an atom.
  bool boolean_pair_test(int p, int q) const {
    const int k = d_(p, q);
    if (k <= 1) return true;
    auto iv = interval(g_, d_, p, q);
    // maximal chain = lexicographically least shortest (p,q)-path
    std::vector<int> chain{p};
    while (chain.back() != q) {
      int cur = chain.back();
      for (int w : g_.neighbors(cur))
        if (in_interval(d_, p, q, w) && d_(p, w) == d_(p, cur) + 1) {
          chain.push_back(w);
          break;
        }
    }
    std::vector<int> atoms;
    for (int z : g_.neighbors(p))
      if (in_interval(d_, p, q, z)) atoms.push_back(z);
    for (size_t i = 1; i + 1 < chain.size(); ++i) {
      const int xi = chain[i], xnext = chain[i + 1];
      bool ok = false;
      for (int z : atoms) {
        auto j = join_in_interval(iv, xi, z, q);
        if (j && *j == xnext) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  // Join of a,b in the base-point order on I(p,q): the unique median of
  // (a,b,q), located by scanning the interval.
  std::optional<int> join_in_interval(const std::vector<int>& iv, int a, int b, int q) const {
    std::optional<int> med;
    for (int m : iv)
      if (in_interval(d_, a, b, m) && in_interval(d_, a, q, m) && in_interval(d_, b, q, m)) {
        if (med) return std::nullopt;  // not unique
        med = m;
      }
    return med;
  }

  void build_poset() {
    const int nn = n();
    std::map<std::vector<int>, int> diam_of;
    for (int v = 0; v < nn; ++v) diam_of[{v}] = 0;
    std::vector<std::vector<int>> pair_hull(static_cast<size_t>(nn) * nn);
    for (int p = 0; p < nn; ++p)
      for (int q = p + 1; q < nn; ++q) {
        if (!is_boolean_pair(p, q)) continue;
        auto hull = gated_hull_of_interval(p, q);
        auto it = diam_of.find(hull);
        if (it == diam_of.end())
          diam_of.emplace(hull, d_(p, q));
        else
          it->second = std::max(it->second, d_(p, q));
        pair_hull[static_cast<size_t>(p) * nn + q] = std::move(hull);
      }
    poset_.sets.clear();
    poset_.bits.clear();
    poset_.diameter.clear();
    for (auto& [members, dm] : diam_of) {
      VBits b(nn);
      for (int v : members) b.set(v);
      poset_.sets.push_back(members);
      poset_.bits.push_back(std::move(b));
      poset_.diameter.push_back(dm);
    }
    hull_of_pair_.assign(static_cast<size_t>(nn) * nn, -1);
    for (int p = 0; p < nn; ++p) {
      hull_of_pair_[static_cast<size_t>(p) * nn + p] = poset_.index_of({p});
      for (int q = p + 1; q < nn; ++q) {
        if (!is_boolean_pair(p, q)) continue;
        int idx = poset_.index_of(pair_hull[static_cast<size_t>(p) * nn + q]);
        detail::require(idx >= 0, "build_poset: hull not interned");
        hull_of_pair_[static_cast<size_t>(p) * nn + q] = idx;
        hull_of_pair_[static_cast<size_t>(q) * nn + p] = idx;
      }
    }
  }

  // GATED-HULL seeded with I(p,q); the interval is connected, so the plain
  // common-neighbor closure applies.  Counter-based: a vertex joins as soon
  // as two of its neighbors are inside.
  std::vector<int> gated_hull_of_interval(int p, int q) const {
    VBits in(n());
    std::vector<int> inside_neighbors(n(), 0);
    std::vector<int> queue;
    auto add = [&](int v) {
      in.set(v);
      queue.push_back(v);
    };
    for (int x = 0; x < n(); ++x)
      if (in_interval(d_, p, q, x)) add(x);
    for (size_t head = 0; head < queue.size(); ++head) {
      for (int w : g_.neighbors(queue[head])) {
        if (in.test(w)) continue;
        if (++inside_neighbors[w] == 2) add(w);
      }
    }
    return in.to_vector();
  }

  void build_thickening() {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n(); ++u)
      for (int v = u + 1; v < n(); ++v)
        if (is_boolean_pair(u, v)) edges.emplace_back(u, v);
    thick_ = Graph::from_edges(n(), std::move(edges));
    thick_d_ = all_pairs_distances(thick_);
  }

  Graph g_;
  DistMatrix d_;
  std::vector<uint8_t> boolean_;
  BooleanGatedPoset poset_;
  std::vector<int> hull_of_pair_;
  Graph thick_;
  DistMatrix thick_d_;
};

inline Graph thickening(const SwmGraph& s) { return s.thickening(); }

inline BarycentricGraph barycentric_graph(const SwmGraph& s) { return s.barycentric(); }

/// i-fold barycentric iteration; every intermediate graph is itself swm.
inline Graph barycentric_iterate(const Graph& g, int iterations) {
  Graph cur = g;
  for (int i = 0; i < iterations; ++i) {
    SwmGraph s(cur);
    cur = s.barycentric().graph;
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Reduced diagonal extensions (defined for arbitrary graphs)
// ---------------------------------------------------------------------------

namespace detail {
// One round: add both diagonals of every square of cur touching an edge of
// the original graph.  Returns true if an edge was added.
inline bool diagonal_step(Graph& cur, const std::set<std::pair<int, int>>& original) {
  auto squares = list_squares(cur);
  std::vector<std::pair<int, int>> edges = cur.edges();
  std::set<std::pair<int, int>> have(edges.begin(), edges.end());
  bool grew = false;
  for (const auto& s : squares) {
    bool touches = false;
    for (int i = 0; i < 4 && !touches; ++i) {
      int a = s[i], b = s[(i + 1) % 4];
      touches = original.count({std::min(a, b), std::max(a, b)}) > 0;
    }
    if (!touches) continue;
    auto add = [&](int a, int b) {
      auto e = std::make_pair(std::min(a, b), std::max(a, b));
      if (have.insert(e).second) {
        edges.push_back(e);
        grew = true;
      }
    };
    add(s[0], s[2]);
    add(s[1], s[3]);
  }
  if (grew) cur = Graph::from_edges(cur.n(), std::move(edges));
  return grew;
}
}  // namespace detail

/// D^(0) = g; D^(k+1) adds both diagonals of every square of D^(k) that
/// contains at least one edge of the original graph.
inline Graph diagonal_extension(const Graph& g, int k) {
  std::set<std::pair<int, int>> original;
  for (auto e : g.edges()) original.insert(e);
  Graph cur = g;
  for (int round = 0; round < k; ++round)
    if (!detail::diagonal_step(cur, original)) break;
  return cur;
}

struct WmSkeleton {
  Graph dstar;
  int rank = 0;  // diagonal rank: first k with D^(k+1) = D^(k)
};

inline WmSkeleton wm_skeleton(const Graph& g, int cap = 64) {
  std::set<std::pair<int, int>> original;
  for (auto e : g.edges()) original.insert(e);
  Graph cur = g;
  for (int k = 0; k <= cap; ++k) {
    Graph next = cur;
    if (!detail::diagonal_step(next, original)) return WmSkeleton{cur, k};
    cur = std::move(next);
  }
  throw RankDivergesError("diagonal extension did not stabilize within " + std::to_string(cap) +
                          " rounds");
}

}  // namespace wmg
