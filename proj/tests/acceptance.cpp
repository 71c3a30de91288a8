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

// Acceptance suite.  Ten oracle- and property-based criteria, one PASS/FAIL
// line each; the process exit code is the number of failed criteria.
//
// Corpora:
//   - every connected graph on <= 7 vertices up to isomorphism (996 graphs)
//   - a fixed named generator suite (paths, cycles, grids, cubes,
//     hyperoctahedra, complete bipartite graphs, products, amalgams)
//   - 200 seeded random swm-graphs up to 40 vertices (60 of them <= 12)

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "wmg/boolean_gated.hpp"
#include "wmg/cover.hpp"
#include "wmg/generators.hpp"
#include "wmg/metric.hpp"
#include "wmg/recognition.hpp"
#include "wmg/zero_extension.hpp"

using namespace wmg;

namespace {

int failures = 0;

struct Criterion {
  Criterion(const char* id_, const char* summary_) : id(id_), summary(summary_) {}
  const char* id;
  const char* summary;
  bool ok = true;
  std::string detail;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void fail(const std::string& why) {
    if (ok) detail = why;  // keep the first witness
    ok = false;
  }
  void note(const std::string& extra) {
    if (ok) detail = extra;
  }
  ~Criterion() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::printf("[%s] %s — %s%s%s (%.1fs)\n", id, ok ? "PASS" : "FAIL", summary,
                detail.empty() ? "" : ": ", detail.c_str(), ms / 1000.0);
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.n() << " edges=";
  for (auto [u, v] : g.edges()) os << u << "-" << v << ",";
  return os.str();
}

struct Corpora {
  std::vector<Graph> small;          // <= 7 vertices, exhaustive
  std::vector<Graph> named;          // fixed generator suite
  std::vector<Graph> random_all;     // 200 random swm graphs
  std::vector<Graph> random_small;   // the <= 12-vertex ones among them
};

Corpora build_corpora() {
  Corpora c;
  c.small = oracle::connected_graph_corpus(7);
  c.named = {path_graph(1),
             path_graph(2),
             path_graph(6),
             cycle_graph(3),
             cycle_graph(4),
             cycle_graph(5),
             cycle_graph(6),
             cycle_graph(7),
             complete_graph(4),
             complete_graph(5),
             complete_bipartite(2, 3),
             complete_bipartite(3, 3),
             grid_graph(3, 3),
             grid_graph(3, 4),
             grid_graph(4, 4),
             cube_graph(3),
             cube_graph(4),
             hyperoctahedron(2),
             hyperoctahedron(3),
             cartesian_product(complete_graph(3), complete_graph(2)),
             cartesian_product(complete_graph(3), complete_graph(3)),
             cartesian_product(path_graph(3), complete_graph(3)),
             gated_amalgam(cycle_graph(4), cycle_graph(4), {0, 1}, {0, 1}),
             gated_amalgam(complete_graph(3), complete_graph(3), {0}, {0}),
             gated_amalgam(cube_graph(3), complete_bipartite(3, 3), {0}, {0})};
  for (uint64_t seed = 1; seed <= 140; ++seed) c.random_all.push_back(random_swm(seed, 40));
  for (uint64_t seed = 1000; seed < 1060; ++seed) c.random_all.push_back(random_swm(seed, 12));
  for (const auto& g : c.random_all)
    if (g.n() <= 12) c.random_small.push_back(g);
  return c;
}

// --------------------------------------------------------------------------
// Criterion 1: definitional oracle equivalence on the exhaustive corpus
// --------------------------------------------------------------------------

bool k33m_isometric_oracle(const Graph& g, const DistMatrix& d) {
  if (g.n() < 6) return false;
  // subsets x permutations; independent of the backtracking searcher
  auto spec = wmg::detail::pattern_spec(Pattern::K33minusInduced);
  std::vector<int> sub;
  std::vector<int> perm(6);
  auto try_subset = [&]() {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (int i = 0; i < 6 && ok; ++i)
        for (int j = i + 1; j < 6 && ok; ++j)
          if (g.adjacent(sub[i], sub[j]) != (((spec.adj[perm[i]] >> perm[j]) & 1) != 0)) ok = false;
      if (ok) {
        int far_a = -1, far_b = -1;
        for (int i = 0; i < 6; ++i) {
          if (perm[i] == 0) far_a = sub[i];
          if (perm[i] == 1) far_b = sub[i];
        }
        if (d(far_a, far_b) == 3) return true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };
  auto rec = [&](auto&& self, int from) -> bool {
    if (sub.size() == 6) return try_subset();
    for (int v = from; v < g.n(); ++v) {
      sub.push_back(v);
      if (self(self, v + 1)) return true;
      sub.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

void criterion1(const Corpora& c) {
  Criterion cr{"AC1", "definitional-oracle equivalence on all connected graphs with <= 7 vertices"};
  int graphs = 0;
  for (const auto& g : c.small) {
    auto d = all_pairs_distances(g);
    ++graphs;
    if (check_weakly_modular(g, d).yes != oracle::weakly_modular(g, d)) {
      cr.fail("weakly-modular mismatch on " + describe(g));
      break;
    }
    if (check_metric_family(g, d, Family::Modular).yes != oracle::modular(g, d)) {
      cr.fail("modular mismatch on " + describe(g));
      break;
    }
    if (check_metric_family(g, d, Family::Meshed).yes != oracle::meshed(g, d)) {
      cr.fail("meshed mismatch on " + describe(g));
      break;
    }
    if (check_metric_family(g, d, Family::PseudoModular).yes != oracle::pseudo_modular(g, d)) {
      cr.fail("pseudo-modular mismatch on " + describe(g));
      break;
    }
    if (check_clique_helly(g).yes != oracle::clique_helly(g, maximal_cliques(g))) {
      cr.fail("clique-Helly mismatch on " + describe(g));
      break;
    }
    bool pattern_ok = true;
    for (Pattern p : {Pattern::K4minus, Pattern::K23, Pattern::W4minus, Pattern::W4, Pattern::M4,
                      Pattern::K33minusInduced}) {
      auto spec = wmg::detail::pattern_spec(p);
      auto adj = [&spec](int i, int j) { return ((spec.adj[i] >> j) & 1) != 0; };
      bool expect = g.n() >= spec.k && oracle::has_induced_subgraph(g, spec.k, adj);
      if (find_pattern(g, d, p).has_value() != expect) {
        cr.fail("pattern " + pattern_name(p) + " mismatch on " + describe(g));
        pattern_ok = false;
        break;
      }
    }
    if (!pattern_ok) break;
    if (find_pattern(g, d, Pattern::K33minusIsometric).has_value() !=
        k33m_isometric_oracle(g, d)) {
      cr.fail("isometric K33minus mismatch on " + describe(g));
      break;
    }
  }
  cr.note(std::to_string(graphs) + " graphs");
}

// --------------------------------------------------------------------------
// Criterion 2: hierarchy consistency
// --------------------------------------------------------------------------

void criterion2(const Corpora& c) {
  Criterion cr{"AC2", "hierarchy implications on the corpus plus all generator graphs"};
  long long graphs = 0;
  auto check_graph = [&](const Graph& g) {
    auto d = all_pairs_distances(g);
    ++graphs;
    struct V {
      bool wm, modular, meshed, pseudo, bridged, wbridged, lwm, swm, dualpolar, premedian, prime,
          cliquehelly, helly, tc;
    } v{};
    v.wm = check_weakly_modular(g, d).yes;
    v.modular = check_metric_family(g, d, Family::Modular).yes;
    v.meshed = check_metric_family(g, d, Family::Meshed).yes;
    v.pseudo = check_metric_family(g, d, Family::PseudoModular).yes;
    v.bridged = check_metric_family(g, d, Family::Bridged).yes;
    v.wbridged = check_metric_family(g, d, Family::WeaklyBridged).yes;
    v.lwm = check_metric_family(g, d, Family::LocallyWeaklyModular).yes;
    v.swm = check_swm(g, d).yes;
    v.dualpolar = check_dual_polar(g, d).yes;
    v.premedian = check_pre_median(g, d).yes;
    v.prime = check_prime_pre_median(g, d).yes;
    v.cliquehelly = check_clique_helly(g).yes;
    v.helly = check_helly(g).yes;
    v.tc = check_triangle_condition(g, d).yes;
    auto implies = [&](bool a, bool b, const char* what) {
      if (a && !b) cr.fail(std::string(what) + " violated on " + describe(g));
    };
    implies(v.modular, v.wm, "modular => weakly modular");
    implies(v.bridged, v.wbridged, "bridged => weakly bridged");
    implies(v.wbridged, v.wm, "weakly bridged => weakly modular");
    implies(v.swm, v.wm, "swm => weakly modular");
    implies(v.dualpolar, v.swm, "dual polar => swm");
    implies(v.premedian, v.wm, "pre-median => weakly modular");
    implies(v.prime, v.premedian, "prime pre-median => pre-median");
    implies(v.helly, v.cliquehelly, "Helly => clique-Helly");
    implies(v.wm, v.meshed, "weakly modular => meshed");
    implies(v.meshed, v.tc, "meshed => TC");
    implies(v.wm, v.lwm, "weakly modular => locally weakly modular");
    implies(v.pseudo, v.wm, "pseudo-modular => weakly modular");
    implies(v.helly, v.pseudo, "Helly => pseudo-modular");
  };
  for (const auto& g : c.small) check_graph(g);
  for (const auto& g : c.named) check_graph(g);
  for (const auto& g : c.random_all) check_graph(g);
  cr.note(std::to_string(graphs) + " graphs, 13 implications each");
}

// --------------------------------------------------------------------------
// Criterion 3: local-to-global and universal covers
// --------------------------------------------------------------------------

bool projection_is_isomorphism(const Graph& base, const CoverBall& b) {
  if (b.graph.n() != base.n() || b.graph.edge_count() != base.edge_count()) return false;
  std::vector<int> seen(base.n(), 0);
  for (int v : b.projection)
    if (v < 0 || v >= base.n() || seen[v]++) return false;
  for (auto [u, v] : b.graph.edges())
    if (!base.adjacent(b.projection[u], b.projection[v])) return false;
  return true;
}

void criterion3(const Corpora& c) {
  Criterion cr{"AC3", "local-to-global: C7 report, simple connectivity, cover balls"};
  // C7: locally weakly modular, not weakly modular, not simply connected
  auto c7 = cycle_graph(7);
  auto d7 = all_pairs_distances(c7);
  auto sc = decide_simple_connectivity(c7, d7);
  if (!sc.locally_weakly_modular || !sc.triangle_square_complex.has_value() ||
      *sc.triangle_square_complex)
    cr.fail("C7 must be locally weakly modular with a non simply connected complex");
  if (check_weakly_modular(c7, d7).yes) cr.fail("C7 must not be weakly modular");
  // C7 cover ball of radius 3 is the path on 7 vertices
  auto ball7 = universal_cover_ball(c7, d7, 0, 3);
  int leaves = 0;
  bool path_like = ball7.graph.n() == 7 && ball7.graph.edge_count() == 6;
  for (int v = 0; v < ball7.graph.n(); ++v) {
    if (ball7.graph.degree(v) > 2) path_like = false;
    if (ball7.graph.degree(v) == 1) ++leaves;
  }
  if (!path_like || leaves != 2) cr.fail("cover ball of C7 at radius 3 is not P7");

  long long wm_graphs = 0;
  auto check_wm_graph = [&](const Graph& g) {
    auto d = all_pairs_distances(g);
    if (!is_weakly_modular(g, d)) return;
    ++wm_graphs;
    auto s = decide_simple_connectivity(g, d);
    if (!s.triangle_square_complex.has_value() || !*s.triangle_square_complex)
      cr.fail("weakly modular graph not reported simply connected: " + describe(g));
    auto ball = universal_cover_ball(g, d, 0, std::max(diameter(g, d), 1), 200000);
    if (!projection_is_isomorphism(g, ball))
      cr.fail("full-radius cover ball differs from its weakly modular base: " + describe(g));
  };
  for (const auto& g : c.small) check_wm_graph(g);
  for (const auto& g : c.named) check_wm_graph(g);
  for (const auto& g : c.random_small) check_wm_graph(g);
  cr.note(std::to_string(wm_graphs) + " weakly modular graphs covered");
}

// --------------------------------------------------------------------------
// Criterion 4: Helly = clique-Helly + dismantlable = ball-Helly
// --------------------------------------------------------------------------

void criterion4(const Corpora& c) {
  Criterion cr{"AC4", "finite Helly theorem against direct ball-Helly enumeration, <= 7 vertices"};
  int graphs = 0;
  for (const auto& g : c.small) {
    auto d = all_pairs_distances(g);
    ++graphs;
    if (check_helly(g).yes != oracle::ball_helly(g, d)) {
      cr.fail("Helly mismatch on " + describe(g));
      break;
    }
  }
  cr.note(std::to_string(graphs) + " graphs");
}

// --------------------------------------------------------------------------
// Criterion 5: swm machinery on the random suite
// --------------------------------------------------------------------------

void criterion5(const Corpora& c) {
  Criterion cr{"AC5", "swm machinery on 200 seeded random swm-graphs up to 40 vertices"};
  if (c.random_all.size() < 200) cr.fail("fewer than 200 random graphs");
  long long quadruples = 0;
  for (const auto& g : c.random_all) {
    SwmGraph s(g);
    const int n = g.n();
    // |B(G)| bound
    if (static_cast<int>(s.poset().sets.size()) > n * n + n) {
      cr.fail("|B(G)| exceeds n^2+n on " + describe(g));
      continue;
    }
    // barycentric graph: modular, admissible orientation, doubled isometry
    auto bary = s.barycentric();
    auto bd = all_pairs_distances(bary.graph);
    if (!check_metric_family(bary.graph, bd, Family::Modular).yes)
      cr.fail("G* not modular on " + describe(g));
    Orientation hasse;
    hasse.directed = bary.orientation;
    if (!orientation_is_admissible(bary.graph, hasse))
      cr.fail("Hasse orientation of G* not admissible on " + describe(g));
    if (!find_admissible_orientation(bary.graph, bd).orientation.has_value())
      cr.fail("orientation solver failed on G* of " + describe(g));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (bd(bary.origin[u], bary.origin[v]) != 2 * s.dist()(u, v)) {
          cr.fail("G* does not double distances on " + describe(g));
          u = v = n;
        }
    // thickening passes the Helly test
    if (!check_helly(s.thickening()).yes) cr.fail("thickening not Helly on " + describe(g));
    // normal bg-paths: geodesic + normal everywhere
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        auto np = s.normal_bg_path(p, q);
        if (static_cast<int>(np.vertices.size()) - 1 != s.dist_delta(p, q) ||
            !s.is_normal_bg_path(np.vertices)) {
          cr.fail("normal bg-path invalid on " + describe(g));
          p = q = n;
        }
      }
  }
  // exhaustive uniqueness + fellow traveling on the <= 12-vertex graphs
  for (const auto& g : c.random_small) {
    SwmGraph s(g);
    const int n = g.n();
    const auto& thick = s.thickening();
    const auto& td = s.thickening_dist();
    std::vector<std::vector<std::vector<int>>> paths(n, std::vector<std::vector<int>>(n));
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) paths[p][q] = s.normal_bg_path(p, q).vertices;
    // uniqueness among all geodesics of the thickening
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        int normal_count = 0;
        std::vector<int> cur{p};
        auto rec = [&](auto&& self) -> void {
          int last = cur.back();
          if (last == q) {
            if (s.is_normal_bg_path(cur)) ++normal_count;
            return;
          }
          for (int w : thick.neighbors(last))
            if (td(w, q) == td(last, q) - 1) {
              cur.push_back(w);
              self(self);
              cur.pop_back();
            }
        };
        rec(rec);
        if (normal_count != 1) {
          cr.fail("normal bg-path not the unique normal geodesic on " + describe(g));
          p = q = n;
        }
      }
    // 1-fellow-traveler property over all admissible quadruples
    for (int p = 0; p < n && cr.ok; ++p)
      for (int q = 0; q < n; ++q) {
        if (td(p, q) > 1) continue;
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            if (td(x, y) > 1) continue;
            ++quadruples;
            const auto& a = paths[p][x];
            const auto& b = paths[q][y];
            for (size_t i = 0; i < std::max(a.size(), b.size()); ++i)
              if (td(a[std::min(i, a.size() - 1)], b[std::min(i, b.size() - 1)]) > 1) {
                cr.fail("fellow-traveler violation on " + describe(g));
                i = a.size() + b.size();
              }
          }
      }
  }
  cr.note(std::to_string(c.random_all.size()) + " graphs, " + std::to_string(quadruples) +
          " fellow-traveler quadruples");
}

// --------------------------------------------------------------------------
// Criterion 6: diagonal extensions
// --------------------------------------------------------------------------

void criterion6(const Corpora& c) {
  Criterion cr{"AC6", "D^(k) = partial thickening(k+1) and diagonal rank = cube-dimension - 1"};
  long long graphs = 0;
  auto check_graph = [&](const Graph& g) {
    auto d = all_pairs_distances(g);
    if (!check_swm(g, d).yes) return;
    ++graphs;
    SwmGraph s(g);
    auto sk = wm_skeleton(g);
    for (int k = 0; k <= sk.rank + 1; ++k)
      if (diagonal_extension(g, k).edges() != s.partial_thickening(k + 1).edges()) {
        cr.fail("D^(k) differs from the partial thickening on " + describe(g));
        return;
      }
    if (g.n() >= 2 && sk.rank != s.cube_dimension() - 1)
      cr.fail("diagonal rank mismatch on " + describe(g));
  };
  for (const auto& g : c.small) check_graph(g);
  for (const auto& g : c.named) check_graph(g);
  for (const auto& g : c.random_all) check_graph(g);
  cr.note(std::to_string(graphs) + " swm graphs");
}

// --------------------------------------------------------------------------
// Criterion 7: 0-extension approximation guarantee
// --------------------------------------------------------------------------

void criterion7(const Corpora& c) {
  Criterion cr{"AC7", "0-extension: nu* <= nu and approx <= 2 nu on 500 random instances"};
  std::mt19937_64 rng(777);
  std::vector<const Graph*> pool;
  for (const auto& g : c.random_small) pool.push_back(&g);
  for (const auto& g : c.named)
    if (g.n() <= 12 && check_swm(g, all_pairs_distances(g)).yes) pool.push_back(&g);
  long long instances = 0;
  while (instances < 500 && cr.ok) {
    const Graph& g = *pool[rng() % pool.size()];
    SwmGraph s(g);
    const int bary_n = s.barycentric().graph.n();
    int nfac = 1 + static_cast<int>(rng() % 4);
    double space = 1;
    for (int i = 0; i < nfac; ++i) space *= bary_n;
    while (nfac > 1 && space > 3e6) {
      --nfac;
      space /= bary_n;
    }
    ZeroExtInstance inst;
    inst.n = nfac;
    int nb = 1 + static_cast<int>(rng() % 5);
    for (int t = 0; t < nb; ++t)
      inst.b.emplace_back(static_cast<int>(rng() % nfac), static_cast<int>(rng() % g.n()),
                          Rat(static_cast<long long>(rng() % 10),
                              1 + static_cast<long long>(rng() % 6)));
    for (int i = 0; i < nfac; ++i)
      for (int j = i + 1; j < nfac; ++j)
        if (rng() % 2)
          inst.c.emplace_back(
              i, j, Rat(static_cast<long long>(rng() % 6), 1 + static_cast<long long>(rng() % 4)));
    ++instances;
    auto exact = solve_exact(g, s.dist(), inst, 100'000'000);
    auto apx = approx2(s, inst, static_cast<int>(rng() % g.n()), 100'000'000);
    if (!apx.bound || !(*apx.bound <= exact.cost))
      cr.fail("relaxation bound exceeds the optimum on " + describe(g));
    else if (!(exact.cost <= apx.cost))
      cr.fail("exact solver beaten by rounding (impossible) on " + describe(g));
    else if (!(apx.cost <= *apx.bound * 2))
      cr.fail("rounded cost exceeds twice the relaxation bound on " + describe(g));
    else if (!(apx.cost <= exact.cost * 2))
      cr.fail("approximation factor above 2 on " + describe(g));
  }
  cr.note(std::to_string(instances) + " instances, exact rational arithmetic");
}

// --------------------------------------------------------------------------
// Criterion 8: hyperbolicity bounds
// --------------------------------------------------------------------------

void criterion8(const Corpora& c) {
  Criterion cr{"AC8", "hyperbolicity: point values and the four parameter bounds"};
  auto tree = path_graph(7);
  if (hyperbolicity_delta(tree, all_pairs_distances(tree)).delta2 != 0)
    cr.fail("delta(tree) must be 0");
  auto grid = grid_graph(3, 3);
  auto hg = hyperbolicity_delta(grid, all_pairs_distances(grid));
  std::set<int> corners(hg.witness.begin(), hg.witness.end());
  if (hg.delta2 != 4 || corners != std::set<int>{0, 2, 6, 8})
    cr.fail("delta(3x3 grid) must be 2 with the corner witness");

  long long wm_graphs = 0;
  auto check_graph = [&](const Graph& g) {
    auto d = all_pairs_distances(g);
    if (!is_weakly_modular(g, d)) return;
    ++wm_graphs;
    auto r = verify_hyperbolicity_bounds(g, d);
    if (!r.mu_le_4delta.value_or(false))
      cr.fail("mu <= 4*delta fails on " + describe(g) + " (mu=" + std::to_string(r.mu) +
              ", 2*delta=" + std::to_string(r.delta2) + ")");
    if (!r.kappa_le_delta.value_or(false)) cr.fail("kappa <= delta fails on " + describe(g));
    if (!r.nu_le_2kappa_plus_mu.value_or(false))
      cr.fail("nu <= 2*kappa + mu fails on " + describe(g));
    if (!r.delta_le_32kappa_plus_20mu.value_or(false))
      cr.fail("delta <= 32*kappa + 20*mu fails on " + describe(g));
  };
  for (const auto& g : c.small) check_graph(g);
  for (const auto& g : c.named) check_graph(g);
  for (const auto& g : c.random_all) check_graph(g);
  cr.note(std::to_string(wm_graphs) + " weakly modular graphs");
}

// --------------------------------------------------------------------------
// Criterion 9: BFS distance-preserving orders
// --------------------------------------------------------------------------

void criterion9(const Corpora& c) {
  Criterion cr{"AC9", "50 seeded BFS orders per weakly modular graph, all prefixes isometric"};
  long long orders = 0;
  auto check_graph = [&](const Graph& g) {
    auto d = all_pairs_distances(g);
    if (!is_weakly_modular(g, d)) return;
    for (uint64_t seed = 0; seed < 50; ++seed) {
      auto o = bfs_order(g, static_cast<int>(seed % g.n()), seed * 2654435761u + 13);
      ++orders;
      auto dp = is_distance_preserving(g, d, o.order);
      if (!dp.yes) {
        cr.fail("non-isometric prefix on " + describe(g));
        return;
      }
    }
  };
  for (const auto& g : c.small) check_graph(g);
  for (const auto& g : c.named) check_graph(g);
  for (const auto& g : c.random_all) check_graph(g);
  cr.note(std::to_string(orders) + " orders");
}

// --------------------------------------------------------------------------
// Criterion 10: isoperimetric fillings
// --------------------------------------------------------------------------

void criterion10(const Corpora& c) {
  Criterion cr{"AC10", "fillings of all simple cycles up to length 12 on meshed corpus graphs"};
  long long cycles = 0;
  auto check_graph = [&](const Graph& g) {
    auto d = all_pairs_distances(g);
    if (!wmg::detail::check_meshed(g, d).yes) return;
    std::vector<int> cyc;
    std::vector<char> used(g.n(), 0);
    bool bad = false;
    auto handle = [&](const std::vector<int>& cycle) {
      auto f = fill_cycle(g, d, cycle);
      ++cycles;
      const int len = static_cast<int>(cycle.size());
      if (!replay_filling(g, cycle, f) || f.area > 2 * len * len) {
        cr.fail("filling failed for a cycle of length " + std::to_string(len) + " on " +
                describe(g));
        bad = true;
      }
    };
    auto rec = [&](auto&& self) -> void {
      if (bad) return;
      if (cyc.size() >= 3 && g.adjacent(cyc.back(), cyc.front()) && cyc[1] < cyc.back())
        handle(cyc);
      if (cyc.size() == 12) return;
      for (int v = cyc[0] + 1; v < g.n() && !bad; ++v) {
        if (used[v] || !g.adjacent(cyc.back(), v)) continue;
        used[v] = 1;
        cyc.push_back(v);
        self(self);
        cyc.pop_back();
        used[v] = 0;
      }
    };
    for (int v0 = 0; v0 < g.n() && !bad; ++v0) {
      cyc = {v0};
      std::fill(used.begin(), used.end(), 0);
      used[v0] = 1;
      rec(rec);
    }
  };
  for (const auto& g : c.small) check_graph(g);
  for (const auto& g : c.named)
    if (g.n() <= 12) check_graph(g);
  cr.note(std::to_string(cycles) + " cycles filled and replayed");
}

}  // namespace

int main() {
  auto corpora = build_corpora();
  std::printf("corpora: %zu small, %zu named, %zu random (%zu small random)\n",
              corpora.small.size(), corpora.named.size(), corpora.random_all.size(),
              corpora.random_small.size());
  criterion1(corpora);
  criterion2(corpora);
  criterion3(corpora);
  criterion4(corpora);
  criterion5(corpora);
  criterion6(corpora);
  criterion7(corpora);
  criterion8(corpora);
  criterion9(corpora);
  criterion10(corpora);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
