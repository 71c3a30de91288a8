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

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "wmg/boolean_gated.hpp"
#include "wmg/graph.hpp"

namespace wmg {

/// Exact rational on 64-bit words with overflow-checked arithmetic.
/// Weights and costs in the 0-extension machinery are small, so the checks
/// are belt and braces.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  static long long checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
    return static_cast<long long>(v);
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
    __int128 d = static_cast<__int128>(a.den) * b.den;
    __int128 g = gcd128(n < 0 ? -n : n, d);
    return Rat(checked(n / g), checked(d / g));
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    __int128 n = static_cast<__int128>(a.num) * b.num;
    __int128 d = static_cast<__int128>(a.den) * b.den;
    __int128 g = gcd128(n < 0 ? -n : n, d);
    return Rat(checked(n / g), checked(d / g));
  }
  friend Rat operator*(const Rat& a, long long k) { return a * Rat(k); }
  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator<(const Rat& a, const Rat& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }
};

inline Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError("bad rational: " + s);
  }
}

/// Minimum 0-extension instance: n facilities, attraction weights b_{iv}
/// toward graph vertices and mutual weights c_{ij} between facilities.
struct ZeroExtInstance {
  int n = 0;
  std::vector<std::tuple<int, int, Rat>> b;  // (facility, vertex, weight)
  std::vector<std::tuple<int, int, Rat>> c;  // (i, j, weight), i < j

  void validate(int vertex_count) const {
    if (n < 0) throw ParseError("facility count must be nonnegative");
    for (auto& [i, v, w] : b) {
      if (i < 0 || i >= n) throw ParseError("b entry with facility out of range");
      if (v < 0 || v >= vertex_count) throw ParseError("b entry with vertex out of range");
      if (w.num < 0) throw ParseError("negative weight");
    }
    for (auto& [i, j, w] : c) {
      if (i < 0 || j < 0 || i >= n || j >= n || i >= j)
        throw ParseError("c entry must have 0 <= i < j < n");
      if (w.num < 0) throw ParseError("negative weight");
    }
  }
};

struct ZeroExtSolution {
  std::vector<int> assignment;  // facility -> vertex (of the solved graph)
  Rat cost;
  std::optional<Rat> bound;  // relaxation optimum, when applicable
};

/// Exact objective value of an assignment.
inline Rat zero_ext_cost(const Graph& g, const DistMatrix& d, const ZeroExtInstance& inst,
                         const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != inst.n)
    throw std::invalid_argument("assignment size mismatch");
  for (int x : assignment)
    if (!g.valid_vertex(x)) throw std::invalid_argument("assignment vertex out of range");
  Rat total(0);
  for (auto& [i, v, w] : inst.b) total = total + w * d(v, assignment[i]);
  for (auto& [i, j, w] : inst.c) total = total + w * d(assignment[i], assignment[j]);
  return total;
}

namespace detail {

// Scaled-integer view of an instance: all weights brought to one common
// denominator so the enumeration loop works on int64.
struct ScaledInstance {
  long long den = 1;
  std::vector<std::vector<long long>> vertex_cost;    // [i][x] = sum_v b_iv d(v,x)
  std::vector<std::vector<long long>> mutual;         // [i][j] scaled c_ij (0 if absent)
};

inline ScaledInstance scale_instance(const DistMatrix& d, int nvert, const ZeroExtInstance& inst,
                                     int dist_scale_den = 1) {
  ScaledInstance s;
  long long wden = 1;
  for (auto& [i, v, w] : inst.b) wden = std::lcm(wden, w.den);
  for (auto& [i, j, w] : inst.c) wden = std::lcm(wden, w.den);
  // integer objective = sum(scaled_weight * unit_dist); true objective =
  // integer / (wden * dist_scale_den), so a unit edge counts 1/dist_scale_den.
  s.den = wden * dist_scale_den;
  s.vertex_cost.assign(inst.n, std::vector<long long>(nvert, 0));
  s.mutual.assign(inst.n, std::vector<long long>(inst.n, 0));
  for (auto& [i, v, w] : inst.b) {
    long long scaled = w.num * (wden / w.den);
    for (int x = 0; x < nvert; ++x)
      s.vertex_cost[i][x] += scaled * d(v, x);
  }
  for (auto& [i, j, w] : inst.c) {
    long long scaled = w.num * (wden / w.den);
    s.mutual[i][j] += scaled;
    s.mutual[j][i] += scaled;
  }
  return s;
}

// Lexicographic brute force with branch-and-bound pruning; ties keep the
// first (lexicographically least) optimum.
inline std::pair<std::vector<int>, long long> enumerate_min(const DistMatrix& d, int nvert,
                                                            const ScaledInstance& s, int n) {
  std::vector<int> cur(n, 0), best(n, 0);
  long long best_cost = -1;
  auto rec = [&](auto&& self, int i, long long partial) -> void {
    if (best_cost >= 0 && partial >= best_cost) return;  // strict improvement only
    if (i == n) {
      best_cost = partial;
      best = cur;
      return;
    }
    for (int x = 0; x < nvert; ++x) {
      long long add = s.vertex_cost[i][x];
      for (int j = 0; j < i; ++j) add += s.mutual[i][j] * d(cur[j], x);
      cur[i] = x;
      self(self, i + 1, partial + add);
    }
  };
  rec(rec, 0, 0);
  return {best, best_cost};
}

}  // namespace detail

/// Globally optimal assignment by exhaustive enumeration (the desk-scale
/// oracle); |V|^n must stay within the budget.
inline ZeroExtSolution solve_exact(const Graph& g, const DistMatrix& d,
                                   const ZeroExtInstance& inst,
                                   long long budget = 50'000'000) {
  inst.validate(g.n());
  double states = 1;
  for (int i = 0; i < inst.n; ++i) states *= g.n();
  if (states > static_cast<double>(budget))
    throw BudgetExceededError("assignment space |V|^n = " + std::to_string(states) +
                              " exceeds budget " + std::to_string(budget));
  auto scaled = detail::scale_instance(d, g.n(), inst, 1);
  auto [assignment, cost] = detail::enumerate_min(d, g.n(), scaled, inst.n);
  ZeroExtSolution sol;
  sol.assignment = assignment;
  sol.cost = Rat(cost, scaled.den);
  return sol;
}

/// Factor-2 approximation: solve the relaxation on the barycentric graph
/// (whose unit-edge distances count for one half), round every optimal set
/// to the gate of the anchor vertex, and return the rounded assignment with
/// the relaxation optimum as lower bound.
inline ZeroExtSolution approx2(const SwmGraph& s, const ZeroExtInstance& inst, int anchor = 0,
                               long long budget = 50'000'000) {
  inst.validate(s.n());
  if (!s.graph().valid_vertex(anchor)) throw std::invalid_argument("approx2: bad anchor vertex");
  auto bary = s.barycentric();
  const int m = bary.graph.n();
  double states = 1;
  for (int i = 0; i < inst.n; ++i) states *= m;
  if (states > static_cast<double>(budget))
    throw BudgetExceededError("relaxation space |V(G*)|^n = " + std::to_string(states) +
                              " exceeds budget " + std::to_string(budget));

  auto bary_d = all_pairs_distances(bary.graph);
  // Remap b weights onto the singleton nodes; the half-length convention is
  // handled by doubling the common denominator (dist_scale_den = 2 means
  // every unit-edge step counts 1/2).
  ZeroExtInstance relax = inst;
  for (auto& [i, v, w] : relax.b) v = bary.origin[v];
  relax.validate(m);
  auto scaled = detail::scale_instance(bary_d, m, relax, 2);
  auto [rel_assignment, rel_cost] = detail::enumerate_min(bary_d, m, scaled, inst.n);

  ZeroExtSolution sol;
  sol.bound = Rat(rel_cost, scaled.den);
  sol.assignment.resize(inst.n);
  for (int i = 0; i < inst.n; ++i)
    sol.assignment[i] = s.gate_in_set(rel_assignment[i], anchor);
  sol.cost = zero_ext_cost(s.graph(), s.dist(), inst, sol.assignment);
  return sol;
}

}  // namespace wmg
