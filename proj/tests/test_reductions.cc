// Copyright 2026 The Authors.
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

#include <vector>

#include "test_doctest.h"
#include "oracles.h"
#include "rainbow/reductions.h"

namespace rainbow {
namespace {

using Sets = std::vector<ElementSet>;

BipartiteGraph c4_graph() { return gen_cycle_tightness(2).first; }

TEST_CASE("bipartite matroid pair") {
  const BipartiteGraph single{1, 1, {{0, 0}}};
  auto [a, b] = bipartite_to_matroid_pair(single);
  CHECK(equivalent(a, free_matroid(1)));
  CHECK(equivalent(b, free_matroid(1)));

  const BipartiteGraph shared{1, 2, {{0, 0}, {0, 1}}};
  auto [sa, sb] = bipartite_to_matroid_pair(shared);
  CHECK(circuits(sa) == Sets{{0, 1}});
  CHECK(circuits(sb).empty());

  auto [ca, cb] = bipartite_to_matroid_pair(c4_graph());
  Sets common;
  for (ElementSet s : testing::subsets(ElementSet::range(4))) {
    if (s.size() == 2 && ca.is_independent(s) && cb.is_independent(s)) common.push_back(s);
  }
  CHECK(common == Sets{{0, 2}, {1, 3}});
}

TEST_CASE("matchings become instances") {
  const BipartiteGraph single{1, 1, {{0, 0}}};
  CHECK(find_rainbow(matchings_to_instance(single, {{0}}, 1)));
  CHECK_FALSE(find_rainbow(matchings_to_instance(c4_graph(), {{0, 2}, {1, 3}}, 2)));
  auto [k22, ms] = gen_complete_bipartite_example(2);
  CHECK_FALSE(find_rainbow(matchings_to_instance(k22, ms, 2)));
  CHECK_THROWS_AS(matchings_to_instance(c4_graph(), {{0, 1}}, 1), Error);
}

TEST_CASE("Drisko matrices") {
  const IntMatrix x = IntMatrix::from_columns({{1, 2}, {1, 2}, {2, 1}});
  CHECK(x.rows == 2);
  CHECK(x.cols == 3);
  const std::vector<Matching> ms = drisko_matrix_to_matchings(x);
  CHECK(ms == std::vector<Matching>{{0, 3}, {0, 3}, {1, 2}});
  CHECK(drisko_matrix_to_matchings(IntMatrix::from_columns({{1}})) ==
        std::vector<Matching>{{0}});
  CHECK_THROWS_AS(drisko_matrix_to_matchings(IntMatrix::from_columns({{1, 1}})), Error);

  const RainbowInstance inst = drisko_instance(x);
  const auto sel = find_rainbow(inst);
  REQUIRE(sel);
  const Diagonal d = selection_to_diagonal(*sel, 2, MatrixEncoding::kDrisko);
  CHECK(d == Diagonal{{0, 0}, {1, 1}});
  CHECK(x.entries[0][0] == 1);
  CHECK(x.entries[1][1] == 2);
  CHECK(testing::brute_drisko_diagonal(x));
}

TEST_CASE("selection to diagonal") {
  CHECK(selection_to_diagonal({}, 2, MatrixEncoding::kDrisko).empty());
  // Elements 0 and 1 of K_{2,2} both lie in row 0.
  CHECK_THROWS_AS(selection_to_diagonal({{{0, 1}, {1, 2}}}, 2, MatrixEncoding::kDrisko),
                  Error);
  CHECK_THROWS_AS(selection_to_diagonal({{{0, 1}, {3, 1}}}, 2, MatrixEncoding::kDrisko),
                  Error);
}

TEST_CASE("Chappell matrices") {
  const Matroid m1 = free_matroid(1);
  const RainbowInstance one = chappell_matrix_to_instance({{0}}, m1, 1);
  const auto sel1 = find_rainbow(one);
  REQUIRE(sel1);
  CHECK(selection_to_diagonal(*sel1, 1, MatrixEncoding::kChappell) == Diagonal{{0, 0}});

  // Elements a = 0, b = 1; columns (a,b), (a,b), (b,a).
  const std::vector<std::vector<Element>> x{{0, 0, 1}, {1, 1, 0}};
  const Matroid free2 = free_matroid(2);
  const RainbowInstance inst = chappell_matrix_to_instance(x, free2, 2);
  const auto sel = find_rainbow(inst);
  REQUIRE(sel);
  const Diagonal d = selection_to_diagonal(*sel, 2, MatrixEncoding::kChappell);
  REQUIRE(d.size() == 2);
  CHECK(d[0].row != d[1].row);
  CHECK(d[0].col != d[1].col);
  ElementSet picked;
  for (const Cell& c : d) picked.insert(x[c.row][c.col]);
  CHECK(free2.is_independent(picked));
  CHECK(picked.size() == 2);

  const Matroid u21 = uniform_matroid(2, 1);
  CHECK(chappell_dependent_columns(x, u21) == std::vector<int>{1, 2, 3});
  try {
    chappell_matrix_to_instance(x, u21, 2);
    FAIL("dependent columns accepted");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("1, 2, 3") != std::string::npos);
  }
  CHECK_THROWS_AS(chappell_matrix_to_instance({{0, 5, 1}, {1, 1, 0}}, free2, 2), Error);
}

TEST_CASE("cycle tightness family") {
  auto [g2, m2] = gen_cycle_tightness(2);
  CHECK(m2 == std::vector<Matching>{{0, 2}, {1, 3}});
  CHECK_FALSE(find_rainbow(matchings_to_instance(g2, m2, 2)));
  m2.push_back(m2.front());
  const RainbowInstance extended = matchings_to_instance(g2, m2, 2);
  CHECK(satisfies_size_hypothesis(extended));
  CHECK(find_rainbow(extended));

  auto [g3, m3] = gen_cycle_tightness(3);
  CHECK(m3.size() == 4);
  const RainbowInstance three = matchings_to_instance(g3, m3, 3);
  CHECK_FALSE(find_rainbow(three));
  CHECK_FALSE(testing::brute_rainbow_exists(three));
  CHECK_THROWS_AS(gen_cycle_tightness(1), Error);
}

TEST_CASE("complete bipartite family") {
  auto [g4, m4] = gen_complete_bipartite_example(4);
  CHECK(m4.size() == 4);
  for (const Matching& m : m4) CHECK(g4.is_matching(m));
  const RainbowInstance four = matchings_to_instance(g4, m4, 4);
  CHECK_FALSE(find_rainbow(four));
  CHECK_FALSE(testing::brute_rainbow_exists(four));
  auto [g2, m2] = gen_complete_bipartite_example(2);
  CHECK(find_rainbow(matchings_to_instance(g2, m2, 1)));
  CHECK_THROWS_AS(gen_complete_bipartite_example(3), Error);
}

TEST_CASE("matchings are exactly the common independent sets") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    BipartiteGraph g{rng.uniform(1, 4), rng.uniform(1, 4), {}};
    const int edges = rng.uniform(0, 8);
    for (int e = 0; e < edges; ++e) {
      g.edges.emplace_back(rng.uniform(0, g.side_a - 1), rng.uniform(0, g.side_b - 1));
    }
    auto [a, b] = bipartite_to_matroid_pair(g);
    for (ElementSet s : testing::subsets(g.edge_set())) {
      bool disjoint = true;
      for (Element x : s) {
        for (Element y : s) {
          if (x < y && (g.edges[x].first == g.edges[y].first ||
                        g.edges[x].second == g.edges[y].second)) {
            disjoint = false;
          }
        }
      }
      CHECK(disjoint == (a.is_independent(s) && b.is_independent(s)));
      CHECK(disjoint == g.is_matching(s));
    }
  }
}

}  // namespace
}  // namespace rainbow
