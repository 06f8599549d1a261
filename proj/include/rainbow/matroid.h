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

// Finite matroids given by an independence oracle.
//
// Terminology: a matroid viewed as a hypergraph has its independent sets as
// "edges". This library says "independent set" throughout and reserves
// "edge" for hypergraph edges and graph edges.

#ifndef RAINBOW_MATROID_H_
#define RAINBOW_MATROID_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/element_set.h"

namespace rainbow {

// Explicit realizations (independent-set family, circuit family) are only
// accepted on grounds of at most this many elements.
inline constexpr int kMaxExplicitGround = 16;

// Exhaustive enumeration (circuits, flats by subsets, equivalence checks)
// refuses grounds larger than this.
inline constexpr int kMaxEnumerationGround = 22;

class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;
  // `s` is a subset of the ground set.
  virtual bool independent(ElementSet s) const = 0;
  // Instance-file description ("uniform 2", "partition 0,1|2", ...) when the
  // realization has one and its ground is {0..n-1}.
  virtual std::optional<std::string> describe() const { return std::nullopt; }
};

// Immutable value type; copies share the oracle and the rank memo. Safe to
// use from several threads at once.
class Matroid {
 public:
  Matroid(ElementSet ground, std::shared_ptr<const MatroidOracle> oracle);

  ElementSet ground() const { return ground_; }
  int ground_size() const { return ground_.size(); }

  // Throws Error if s is not a subset of the ground set.
  bool is_independent(ElementSet s) const;
  int rank(ElementSet s) const;
  int rank() const { return rank(ground_); }

  bool is_loop(Element x) const { return !is_independent(ElementSet{x}); }

  std::optional<std::string> describe() const { return oracle_->describe(); }

 private:
  struct RankMemo;

  void require_subset(ElementSet s) const;

  ElementSet ground_;
  std::shared_ptr<const MatroidOracle> oracle_;
  std::shared_ptr<RankMemo> memo_;
};

// --- Realizations ----------------------------------------------------------

Matroid uniform_matroid(int n, int k);
Matroid free_matroid(int n);

// Independent sets pick at most one element from each block. Elements of the
// ground outside every block are loops.
Matroid partition_matroid(int ground_size, const std::vector<ElementSet>& blocks);
// Ground = {0..max element of the union}.
Matroid partition_matroid(const std::vector<ElementSet>& blocks);

struct GraphEdge {
  int u = 0;
  int v = 0;
  Element id = 0;
};
// Cycle matroid of a multigraph; the ground set is the set of edge ids.
Matroid graphic_matroid(int vertices, const std::vector<GraphEdge>& edges);

// Column matroid over GF(prime). Element i is columns[i].
Matroid linear_matroid(int prime, const std::vector<std::vector<int>>& columns);

// Matroid whose circuits are exactly `circuits`. Validates the antichain
// property and circuit elimination eagerly.
Matroid from_circuits(int ground_size, const std::vector<ElementSet>& circuits);
Matroid from_circuits(ElementSet ground, const std::vector<ElementSet>& circuits);

// Matroid whose independent sets are exactly `family`, after checking the
// three independence axioms.
Matroid from_independent_sets(int ground_size,
                              const std::vector<ElementSet>& family);

// Matroid on a ground of image.size() elements where element j stands for
// image[j] in `base`. A set is independent iff its images are pairwise
// distinct and form an independent set of `base`.
Matroid pullback_matroid(const Matroid& base, const std::vector<Element>& image);

// --- Operations ------------------------------------------------------------

// Minimal dependent sets in shortlex order.
std::vector<ElementSet> circuits(const Matroid& m);

bool is_coloop(const Matroid& m, Element x);

ElementSet closure(const Matroid& m, ElementSet s);

struct Flat {
  ElementSet set;
  int rank = 0;
  friend bool operator==(const Flat&, const Flat&) = default;
};
// All flats with their ranks, shortlex by set.
std::vector<Flat> flats(const Matroid& m);
bool is_flat(const Matroid& m, ElementSet s);

// M/S on ground \ S: rank(T) = rank_M(T | S) - rank_M(S).
Matroid contract(const Matroid& m, ElementSet s);
// M|S on ground S.
Matroid restrict(const Matroid& m, ElementSet s);
// Independent sets of M of size at most k.
Matroid truncate(const Matroid& m, int k);
// M.S: sets e within S such that e | f is independent for every independent
// f disjoint from S. Computed as contract(M, ground \ S).
Matroid quotient_to(const Matroid& m, ElementSet s);

// True iff both matroids have the same ground and the same independent sets.
bool equivalent(const Matroid& a, const Matroid& b);
// Every independent set, shortlex.
std::vector<ElementSet> independent_sets(const Matroid& m);

enum class AxiomViolation {
  kNone,
  kMissingEmptySet,
  kNotDownwardClosed,  // `first` is in the family, `second` is a missing subset
  kExchange,           // no x in second \ first extends first
  kOutsideGround,
};

struct AxiomReport {
  AxiomViolation violation = AxiomViolation::kNone;
  ElementSet first;
  ElementSet second;

  bool ok() const { return violation == AxiomViolation::kNone; }
  std::string to_string() const;
};

AxiomReport check_matroid_axioms(ElementSet ground,
                                 const std::vector<ElementSet>& family);

struct CircuitReport {
  bool ok = true;
  std::string reason;
  // Elimination witness: circuits c1, c2, shared x and y in c1 \ c2 with no
  // circuit c3 inside c1 | c2 avoiding x and containing y.
  ElementSet c1;
  ElementSet c2;
  Element x = -1;
  Element y = -1;
};

CircuitReport check_circuit_axioms(ElementSet ground,
                                   const std::vector<ElementSet>& family);

}  // namespace rainbow

#endif  // RAINBOW_MATROID_H_
