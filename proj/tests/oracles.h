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

// Brute-force reference implementations used to cross-check the library.
// Nothing here reuses library algorithms beyond the independence oracle of a
// matroid and the facet list of a complex.

#ifndef RAINBOW_TESTS_ORACLES_H_
#define RAINBOW_TESTS_ORACLES_H_

#include <optional>
#include <string>
#include <vector>

#include "rainbow/campaigns.h"
#include "rainbow/complex.h"
#include "rainbow/matroid.h"
#include "rainbow/rainbow.h"
#include "rainbow/reductions.h"

namespace rainbow::testing {

// All subsets of `s`, in increasing bitmask order.
std::vector<ElementSet> subsets(ElementSet s);

// Sorted by size, then by the ascending element list.
bool size_then_lex(ElementSet a, ElementSet b);

// Independence table indexed by subset bits; ground must be {0..n-1}.
std::vector<bool> independence_table(const Matroid& m);

int brute_rank(const Matroid& m, ElementSet s);
std::vector<ElementSet> brute_circuits(const Matroid& m);
std::vector<ElementSet> brute_flats(const Matroid& m);
// The for-all definition of M.S.
bool brute_quotient_independent(const Matroid& m, ElementSet s, ElementSet e);

// Faces of a complex as every subset of every facet, deduplicated.
std::vector<ElementSet> brute_faces(const SimplicialComplex& c);
std::vector<ElementSet> brute_independence_facets(const Hypergraph& h);

// Reduced Betti numbers over the rationals from dense matrices, degree -1
// upward. Empty for the void complex.
std::vector<int> dense_betti(const SimplicialComplex& c);
// -1 stands for infinity.
long long dense_eta(const SimplicialComplex& c);

// Whether some layer-injective selection of `target` distinct elements is
// independent in both matroids, by trying every selection.
bool brute_rainbow_exists(const RainbowInstance& inst);

// Whether an n x m matrix has a diagonal of n cells holding 1..n.
bool brute_drisko_diagonal(const IntMatrix& x);

// --- Generators ------------------------------------------------------------

SimplicialComplex random_complex(int vertices, Rng& rng);
Hypergraph random_hypergraph(int vertices, Rng& rng);
// One of every realization, drawn at random, on ground {0..g-1}.
std::vector<std::pair<std::string, Matroid>> random_realizations(int g, Rng& rng);

// --- Matroid law suite -------------------------------------------------------

// Each returns an empty string on success or a description of the first
// violation.
std::string check_rank_axioms(const Matroid& m);
std::string check_circuit_elimination(const Matroid& m);
std::string check_contraction_formula(const Matroid& m);
std::string check_quotient_equivalence(const Matroid& m);
std::string check_loops_and_coloops(const Matroid& m);

}  // namespace rainbow::testing

#endif  // RAINBOW_TESTS_ORACLES_H_
