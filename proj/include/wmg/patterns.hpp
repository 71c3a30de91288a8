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
#include <string>
#include <vector>

#include "wmg/graph.hpp"

namespace wmg {

enum class Pattern {
  K4minus,            // K4 minus one edge; roles (a,b,c,d), a !~ b
  K23,                // complete bipartite 2x3; roles (a,b | x,y,z)
  W4minus,            // almost 4-wheel; roles (c, x1..x4), c !~ x1
  W4,                 // 4-wheel; roles (c, x1..x4)
  M4,                 // rim square x1..x4 + 4-clique a1..a4, ai ~ xi,x(i+1)
  K33minusInduced,    // K33 minus an edge; roles (a1,b1 | a2,a3,b2,b3), far pair first
  K33minusIsometric,  // induced K33minus whose far pair is at distance 3 in G
};

struct PatternHit {
  Pattern pattern;
  std::vector<int> vertices;  // role order as above
};

inline std::string pattern_name(Pattern p) {
  switch (p) {
    case Pattern::K4minus: return "K4minus";
    case Pattern::K23: return "K23";
    case Pattern::W4minus: return "W4minus";
    case Pattern::W4: return "W4";
    case Pattern::M4: return "M4";
    case Pattern::K33minusInduced: return "K33minus-induced";
    case Pattern::K33minusIsometric: return "K33minus-isometric";
  }
  return "?";
}

inline std::optional<Pattern> pattern_from_name(const std::string& s) {
  for (Pattern p : {Pattern::K4minus, Pattern::K23, Pattern::W4minus, Pattern::W4, Pattern::M4,
                    Pattern::K33minusInduced, Pattern::K33minusIsometric})
    if (pattern_name(p) == s) return p;
  return std::nullopt;
}

namespace detail {

struct PatternSpec {
  int k = 0;                         // number of roles
  std::array<uint16_t, 8> adj = {};  // adjacency rows as bitmasks over roles
};

inline PatternSpec pattern_spec(Pattern p) {
  auto make = [](int k, std::initializer_list<std::pair<int, int>> edges) {
    PatternSpec s;
    s.k = k;
    for (auto [a, b] : edges) {
      s.adj[a] |= uint16_t(1) << b;
      s.adj[b] |= uint16_t(1) << a;
    }
    return s;
  };
  switch (p) {
    case Pattern::K4minus:
      return make(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    case Pattern::K23:
      return make(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    case Pattern::W4minus:
      return make(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {0, 2}, {0, 3}, {0, 4}});
    case Pattern::W4:
      return make(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {0, 1}, {0, 2}, {0, 3}, {0, 4}});
    case Pattern::M4:
      // roles 0..3 rim square, 4..7 clique; 4~(0,1), 5~(1,2), 6~(2,3), 7~(3,0)
      return make(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                      {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7},
                      {4, 0}, {4, 1}, {5, 1}, {5, 2}, {6, 2}, {6, 3}, {7, 3}, {7, 0}});
    case Pattern::K33minusInduced:
    case Pattern::K33minusIsometric:
      // roles (a1,b1,a2,a3,b2,b3): sides {a1,a2,a3} x {b1,b2,b3} minus a1b1
      return make(6, {{0, 4}, {0, 5}, {2, 1}, {2, 4}, {2, 5}, {3, 1}, {3, 4}, {3, 5}});
  }
  return {};
}

}  // namespace detail

/// First witness occurrence of an induced pattern (isometric for the
/// K33minus-isometric variant: the far pair must be at distance 3 in g).
/// Backtracking over ordered role assignments with degree pruning.
inline std::optional<PatternHit> find_pattern(const Graph& g, const DistMatrix& d, Pattern p) {
  const auto spec = detail::pattern_spec(p);
  const int k = spec.k;
  std::array<int, 8> role_deg{};
  for (int i = 0; i < k; ++i) role_deg[i] = __builtin_popcount(spec.adj[i]);

  std::vector<int> assign(k, -1);
  std::vector<char> used(g.n(), 0);

  auto consistent = [&](int role, int v) {
    if (g.degree(v) < role_deg[role]) return false;
    for (int r = 0; r < role; ++r) {
      const bool want = (spec.adj[role] >> r) & 1;
      if (g.adjacent(assign[r], v) != want) return false;
    }
    if (p == Pattern::K33minusIsometric && role == 1 && d(assign[0], v) != 3) return false;
    return true;
  };

  // Recursive backtracking, smallest candidate ids first.
  std::optional<PatternHit> hit;
  auto rec = [&](auto&& self, int role) -> bool {
    if (role == k) {
      hit = PatternHit{p, assign};
      return true;
    }
    for (int v = 0; v < g.n(); ++v) {
      if (used[v] || !consistent(role, v)) continue;
      assign[role] = v;
      used[v] = 1;
      if (self(self, role + 1)) return true;
      used[v] = 0;
      assign[role] = -1;
    }
    return false;
  };
  rec(rec, 0);
  return hit;
}

}  // namespace wmg
