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
#include "rainbow/rainbow.h"
#include "rainbow/reductions.h"

namespace rainbow {
namespace {

using Sets = std::vector<ElementSet>;

RainbowInstance drisko_example() {
  return drisko_instance(IntMatrix::from_columns({{1, 2}, {1, 2}, {2, 1}}));
}

TEST_CASE("layered ground") {
  const LayeredGround l = layered_ground({{0}, {0, 1}});
  CHECK(l == LayeredGround{{0, 1}, {0, 2}, {1, 2}});
  CHECK(layered_ground({}).empty());
  CHECK(layered_ground({{0}, {0}}) == LayeredGround{{0, 1}, {0, 2}});
}

TEST_CASE("lifted matroid") {
  const LayeredGround one = layered_ground({{0, 1}});
  CHECK(equivalent(lift_matroid(free_matroid(2), one), free_matroid(2)));
  const LayeredGround twice = layered_ground({{0}, {0}});
  CHECK_FALSE(lift_matroid(free_matroid(1), twice).is_independent({0, 1}));
  const LayeredGround two = layered_ground({{0}, {1}});
  const Matroid lifted = lift_matroid(uniform_matroid(3, 1), two);
  CHECK_FALSE(lifted.is_independent({0, 1}));
  CHECK(check_matroid_axioms(lifted.ground(), independent_sets(lifted)).ok());
}

TEST_CASE("layered complex") {
  const SimplicialComplex one = build_complex(free_matroid(2), layered_ground({{0, 1}}));
  CHECK(one.facets() == Sets{{0}, {1}});
  const SimplicialComplex twice = build_complex(free_matroid(1), layered_ground({{0}, {0}}));
  CHECK_FALSE(twice.contains({0, 1}));
  CHECK(twice.facets() == Sets{{0}, {1}});
  const Matroid n = linear_matroid(2, {{1, 0}, {0, 1}, {1, 1}});
  const LayeredGround l = layered_ground({{0, 1}, {1, 2}, {0, 2}});
  CHECK(build_complex(n, l) == independence_complex(layered_hypergraph(n, l)));
}

TEST_CASE("partition intersection built from the proof's hypergraph") {
  // Blocks {(0,1)} and {(1,2),(2,2)} of a layered ground, as ids 0 and 1,2.
  const Sets blocks{{0}, {1, 2}};
  const Matroid n = uniform_matroid(3, 2);
  const SimplicialComplex p = partition_intersection_complex(blocks, n);
  std::vector<ElementSet> edges = testing::brute_circuits(n);
  edges.push_back({1, 2});
  const SimplicialComplex h = independence_complex(Hypergraph(n.ground(), edges));
  CHECK(testing::brute_faces(p) == testing::brute_faces(h));
  CHECK(p.facets() == Sets{{0, 1}, {0, 2}});
}

TEST_CASE("find_rainbow on small instances") {
  const RainbowInstance single(free_matroid(3), free_matroid(3), {{2}}, 1);
  const auto sel = find_rainbow(single);
  REQUIRE(sel);
  CHECK(sel->chosen == std::vector<LayeredElement>{{2, 1}});

  auto [g, ms] = gen_cycle_tightness(2);
  CHECK_FALSE(find_rainbow(matchings_to_instance(g, ms, 2)));

  const RainbowInstance d = drisko_example();
  const auto found = find_rainbow(d);
  REQUIRE(found);
  CHECK(verify_selection(d, *found));
  CHECK(found->to_string() == "(0 1) (3 2)");
  CHECK(testing::brute_rainbow_exists(d));
}

TEST_CASE("verify_selection") {
  const RainbowInstance d = drisko_example();
  CHECK(verify_selection(d, {{{0, 1}, {3, 2}}}));
  CHECK_FALSE(verify_selection(d, {{{0, 1}, {3, 1}}}));
  CHECK_FALSE(verify_selection(d, {{{0, 1}, {2, 3}}}));
  CHECK_FALSE(verify_selection(d, {{{0, 1}}}));
  const RainbowInstance zero(free_matroid(1), free_matroid(1), {}, 0);
  CHECK(verify_selection(zero, {}));
}

TEST_CASE("instance validation names the offending set") {
  try {
    RainbowInstance(uniform_matroid(3, 1), free_matroid(3), {{0}, {1, 2}}, 1);
    FAIL("dependent set accepted");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("set 2") != std::string::npos);
  }
  CHECK_THROWS_AS(RainbowInstance(free_matroid(3), free_matroid(2), {}, 0), Error);
}

TEST_CASE("size hypothesis and sorting") {
  const RainbowInstance d = drisko_example();
  CHECK(satisfies_size_hypothesis(d));
  Sets sets{{0, 1}, {2}, {0, 1, 2}};
  CHECK(sort_sets_by_size(sets) == std::vector<int>{2, 1, 3});
  CHECK(sets == Sets{{2}, {0, 1}, {0, 1, 2}});
  const RainbowInstance bad(free_matroid(3), free_matroid(3), {{0, 1}, {2}, {0, 1, 2}}, 2);
  CHECK_FALSE(satisfies_size_hypothesis(bad));
}

TEST_CASE("matchability") {
  const Matroid m = free_matroid(1);
  const MatchabilityReport good =
      matchability_check(m, SimplicialComplex(ElementSet::range(1), {{0}}));
  CHECK(good.hypothesis_ok);
  CHECK(good.basis_found == ElementSet{0});
  const MatchabilityReport bad =
      matchability_check(m, SimplicialComplex(ElementSet::range(1), {{}}));
  CHECK_FALSE(bad.hypothesis_ok);
  CHECK(bad.failing_flat == ElementSet());
  CHECK_FALSE(bad.basis_found);

  const RainbowInstance d = drisko_example();
  const LayeredGround l = layered_ground(d.sets());
  const Matroid lifted = lift_matroid(truncate(d.matroid_m(), 2), l);
  const SimplicialComplex c = build_complex(d.matroid_n(), l);
  const MatchabilityReport r = matchability_check(lifted, c);
  CHECK(r.hypothesis_ok);
  REQUIRE(r.basis_found);
  CHECK(r.basis_found->size() == 2);
  const MatchabilityReport strict = matchability_check(lifted, c, true);
  CHECK(strict.hypothesis_ok);
  CHECK(strict.sets_checked > r.sets_checked);
}

TEST_CASE("partition lemma") {
  const LemmaResult one = lemma_main_check({{0}}, free_matroid(1), 1, {1});
  CHECK(one.status == LemmaResult::Status::kHolds);
  CHECK(one.eta.is_infinite());

  // The singleton block makes the complex a cone.
  const Sets blocks{{0}, {1, 2}, {3, 4}};
  const LemmaResult two = lemma_main_check(blocks, free_matroid(5), 2, {1, 2, 3});
  CHECK(two.status == LemmaResult::Status::kHolds);
  CHECK(two.eta >= EtaValue(2));
  CHECK(two.eta.is_infinite());
  CHECK(testing::dense_eta(partition_intersection_complex(blocks, free_matroid(5))) == -1);

  // Three pairs: the join of three 0-spheres is a 2-sphere.
  const Sets pairs{{0, 1}, {2, 3}, {4, 5}};
  const LemmaResult sphere = lemma_main_check(pairs, free_matroid(6), 2, {1, 2, 3});
  CHECK(sphere.eta == EtaValue(3));
  CHECK(testing::dense_eta(partition_intersection_complex(pairs, free_matroid(6))) == 3);

  const Matroid circuit = from_circuits(5, {{0, 1, 3}});
  const auto idx = find_lemma_indices(blocks, circuit, 2);
  REQUIRE(idx);
  const LemmaResult spanning = lemma_main_check(blocks, circuit, 2, *idx);
  CHECK(spanning.status == LemmaResult::Status::kHolds);
  CHECK(spanning.eta >= EtaValue(2));

  const LemmaResult short_ranks = lemma_main_check({{0}, {1}, {2}}, free_matroid(3), 2, {1, 2, 3});
  CHECK(short_ranks.status == LemmaResult::Status::kInapplicable);
  CHECK_FALSE(find_lemma_indices({{0}, {1}, {2}}, free_matroid(3), 2));
}

TEST_CASE("flat trace on the Drisko example") {
  const FlatTrace t = main_theorem_flat_trace(drisko_example());
  CHECK(t.all_bounds_hold);
  CHECK_FALSE(t.rows.empty());
  for (const FlatTraceRow& row : t.rows) {
    CHECK(row.rank < 2);
    CHECK(row.quotient_rank <= 2 - row.rank);
    CHECK(row.eta_restricted >= EtaValue(2 - row.rank));
  }
}

TEST_CASE("search refuses oversized instances") {
  Sets sets;
  for (int i = 0; i < 9; ++i) sets.push_back(ElementSet::range(8));
  const RainbowInstance big(free_matroid(8), free_matroid(8), sets, 5);
  CHECK_THROWS_AS(find_rainbow(big), ScaleLimitError);
}

}  // namespace
}  // namespace rainbow
