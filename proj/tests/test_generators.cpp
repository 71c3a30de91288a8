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

#include <doctest.h>

#include "oracles.hpp"
#include "wmg/generators.hpp"
#include "wmg/recognition.hpp"

using namespace wmg;

TEST_SUITE_BEGIN("generators");

TEST_CASE("named generators have the expected shapes") {
  CHECK(path_graph(1).n() == 1);
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(complete_bipartite(2, 3).edge_count() == 6);
  CHECK(grid_graph(3, 4).n() == 12);
  CHECK(grid_graph(3, 4).edge_count() == 17);
  CHECK(cube_graph(3).n() == 8);
  CHECK(cube_graph(3).edge_count() == 12);
  CHECK(hyperoctahedron(3).n() == 6);
  CHECK(hyperoctahedron(3).edge_count() == 12);
  CHECK(oracle::isomorphic_small(hyperoctahedron(2), cycle_graph(4)));
}

TEST_CASE("cartesian products") {
  auto prism = cartesian_product(complete_graph(3), complete_graph(2));
  CHECK(prism.n() == 6);
  CHECK(prism.edge_count() == 9);
  auto dp = all_pairs_distances(prism);
  CHECK(check_swm(prism, dp).yes);

  auto q3 = cartesian_product(cartesian_product(complete_graph(2), complete_graph(2)),
                              complete_graph(2));
  CHECK(oracle::isomorphic_small(q3, cube_graph(3)));
}

TEST_CASE("gated amalgams: the domino and validation") {
  auto domino = gated_amalgam(cycle_graph(4), cycle_graph(4), {0, 1}, {0, 1});
  CHECK(domino.n() == 6);
  CHECK(domino.edge_count() == 7);
  auto dd = all_pairs_distances(domino);
  CHECK(check_swm(domino, dd).yes);

  // gluing two triangles along an edge is rejected: K3 edges are not gated
  CHECK_THROWS_AS(gated_amalgam(complete_graph(3), complete_graph(3), {0, 1}, {0, 1}),
                  std::invalid_argument);
  // vertex amalgam of triangles is fine (bowtie is swm)
  auto bowtie = gated_amalgam(complete_graph(3), complete_graph(3), {0}, {0});
  CHECK(bowtie.n() == 5);
  CHECK(check_swm(bowtie, all_pairs_distances(bowtie)).yes);
  // interface maps must correspond to isomorphic induced subgraphs
  CHECK_THROWS_AS(gated_amalgam(path_graph(3), path_graph(3), {0, 2}, {0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gated_amalgam(path_graph(3), path_graph(3), {0, 0}, {0, 1}),
                  std::invalid_argument);
}

TEST_CASE("random swm graphs are swm and reproducible") {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    auto g = random_swm(seed, 32);
    CHECK(g.n() <= 32);
    auto d = all_pairs_distances(g);
    CHECK(check_swm(g, d).yes);
    // determinism
    auto g2 = random_swm(seed, 32);
    CHECK(serialize_graph(g) == serialize_graph(g2));
  }
}

TEST_SUITE_END();
