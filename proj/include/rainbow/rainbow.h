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

// Rainbow sets in the intersection of two matroids.
//
// Given matroids M, N on a common ground and sets A_1..A_m independent in
// both, a partial rainbow set picks elements x_j from distinct sets A_{i_j}
// so that {x_j} is independent in both. With m = 2n-1 and |A_i| >= min(i, n)
// a rainbow set of size n always exists. This header provides an exact
// finder plus computational checks of the topological tools behind that
// guarantee: the layered complex, the matchability criterion for a matroid
// and a complex, and the eta bound for partition-matroid intersections.

#ifndef RAINBOW_RAINBOW_H_
#define RAINBOW_RAINBOW_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/complex.h"
#include "rainbow/homology.h"
#include "rainbow/matroid.h"

namespace rainbow {

// Refuse exact rainbow search above this many (element, layer) pairs.
inline constexpr int kMaxLayeredPairs = 64;

class RainbowInstance {
 public:
  // Validates that m and n share a ground and that every set is independent
  // in both; throws Error naming the first offending set (1-based).
  RainbowInstance(Matroid m, Matroid n, std::vector<ElementSet> sets,
                  int target);

  const Matroid& matroid_m() const { return m_; }
  const Matroid& matroid_n() const { return n_; }
  const std::vector<ElementSet>& sets() const { return sets_; }
  int target() const { return target_; }

 private:
  Matroid m_;
  Matroid n_;
  std::vector<ElementSet> sets_;
  int target_;
};

// m = 2n-1 and |A_i| >= min(i, n) in the given order.
bool satisfies_size_hypothesis(const RainbowInstance& inst);
// Stable sort of the sets by size; returns the original 1-based layer of
// each new position.
std::vector<int> sort_sets_by_size(std::vector<ElementSet>& sets);

struct LayeredElement {
  Element element = 0;
  int layer = 0;  // 1-based index of the set the element came from
  friend bool operator==(const LayeredElement&, const LayeredElement&) = default;
};

// V' = {(x, i) : x in A_i}, ordered by layer and then element. Position j in
// the list is element id j of the layered ground.
using LayeredGround = std::vector<LayeredElement>;

LayeredGround layered_ground(const std::vector<ElementSet>& sets);

// M' on V': pairs with distinct elements whose elements are independent in
// M. Layers may repeat.
Matroid lift_matroid(const Matroid& m, const LayeredGround& layered);

// The complex on V' of pair sets with distinct layers and distinct elements
// that are independent in N.
SimplicialComplex build_complex(const Matroid& n, const LayeredGround& layered);

// The same complex as the independence complex of a hypergraph on V': lifted
// circuits of N, pairs sharing a layer and pairs sharing an element.
Hypergraph layered_hypergraph(const Matroid& n, const LayeredGround& layered);

struct RainbowSelection {
  std::vector<LayeredElement> chosen;  // ascending layer
  friend bool operator==(const RainbowSelection&,
                         const RainbowSelection&) = default;
  // "(element layer) (element layer) ..."
  std::string to_string() const;
};

// Exact backtracking over layers in increasing order: pick an element (in
// increasing id) or skip the layer. Prunes on the number of layers left and
// on the rank of picked plus remaining candidates in each matroid. Returns
// the first selection of size target().
std::optional<RainbowSelection> find_rainbow(const RainbowInstance& inst);

// Distinct layers, each element in its layer's set, exactly target() picks,
// and the element set independent in both matroids.
bool verify_selection(const RainbowInstance& inst, const RainbowSelection& sel);

struct MatchabilityReport {
  bool hypothesis_ok = false;
  std::optional<ElementSet> failing_flat;
  std::optional<ElementSet> basis_found;
  std::size_t sets_checked = 0;
};

// For every flat F of m (or every subset F when `strict`), checks
// eta(c | S) >= rank(m.S) with S the complement of F; independently searches
// for a basis of m that is a face of c. Throws Error if the hypothesis holds
// while no such basis exists.
MatchabilityReport matchability_check(const Matroid& m,
                                      const SimplicialComplex& c,
                                      bool strict = false);

// A basis of m that is a face of c, searched exhaustively.
std::optional<ElementSet> find_basis_in_complex(const Matroid& m,
                                                const SimplicialComplex& c);

struct LemmaResult {
  enum class Status { kHolds, kViolation, kInapplicable };
  Status status = Status::kInapplicable;
  EtaValue eta;
  std::string reason;
};

// Intersection of the partition matroid on `blocks` with n, as a complex on
// n's ground.
SimplicialComplex partition_intersection_complex(
    const std::vector<ElementSet>& blocks, const Matroid& n);

// For blocks X_1..X_m (pairwise disjoint, inside n's ground), the matroid n,
// ell >= 1 and 1-based indices i_1..i_{2ell-1} with rank_n(X_{i_j}) >=
// min(j, ell): checks eta(P & n) >= ell exactly. The complex is built twice,
// as a filtered intersection and as I(H) with H the circuits of n restricted
// to the blocks plus same-block pairs; a mismatch throws Error.
LemmaResult lemma_main_check(const std::vector<ElementSet>& blocks,
                             const Matroid& n, int ell,
                             const std::vector<int>& indices);

// Some valid index sequence for lemma_main_check, if one exists.
std::optional<std::vector<int>> find_lemma_indices(
    const std::vector<ElementSet>& blocks, const Matroid& n, int ell);

// The existence argument for a rank-n instance, replayed per flat. For each
// flat F' of the lifted truncated matroid with rank k < n and complement S',
// records rank(M'.S'), eta(C | S') and the outcome of the partition bound
// applied to the blocks {(x, i) : x in A_i \ F}.
struct FlatTraceRow {
  ElementSet flat;  // in V'
  int rank = 0;
  int quotient_rank = 0;
  EtaValue eta_restricted;
  bool lemma_applicable = false;
  EtaValue lemma_eta;  // exact eta of the partition intersection
};

struct FlatTrace {
  std::vector<FlatTraceRow> rows;
  bool all_bounds_hold = true;  // eta(C|S') >= n - k on every row
};

FlatTrace main_theorem_flat_trace(const RainbowInstance& inst);

}  // namespace rainbow

#endif  // RAINBOW_RAINBOW_H_
