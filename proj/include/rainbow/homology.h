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

// Reduced simplicial homology over the rationals and the connectivity
// parameter eta.
//
// Chains are oriented by listing a face's vertices in ascending id order;
// removing the vertex at position i carries the sign (-1)^i. The augmentation
// sends every vertex to the empty face, so H~_{-1} is nonzero exactly for the
// complex {∅}. Ranks are computed exactly with fraction-free elimination.

#ifndef RAINBOW_HOMOLOGY_H_
#define RAINBOW_HOMOLOGY_H_

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/complex.h"

namespace rainbow {

// A natural number or infinity.
class EtaValue {
 public:
  constexpr EtaValue() = default;
  constexpr explicit EtaValue(std::int64_t value) : value_(value) {}
  static constexpr EtaValue infinity() {
    EtaValue e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return infinite_; }
  // Requires a finite value.
  std::int64_t value() const;

  // inf + c = inf.
  friend constexpr EtaValue operator+(EtaValue a, std::int64_t c) {
    if (a.infinite_) return a;
    return EtaValue(a.value_ + c);
  }
  friend constexpr bool operator==(EtaValue a, EtaValue b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(EtaValue a, EtaValue b) {
    if (a.infinite_ || b.infinite_) {
      return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    }
    return a.value_ <=> b.value_;
  }

  // "inf" or the decimal value.
  std::string to_string() const;

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

inline EtaValue min(EtaValue a, EtaValue b) { return a < b ? a : b; }

// Sparse integer column: (row, value) pairs with strictly increasing rows.
using SparseColumn = std::vector<std::pair<int, std::int64_t>>;

// Rank over the rationals of the matrix with the given columns. Exact: runs
// in 64-bit arithmetic and repeats the elimination with arbitrary-precision
// integers if an intermediate value would overflow.
int exact_rank(const std::vector<SparseColumn>& columns);

// Boundary map from the j-element faces to the (j-1)-element faces, as
// sparse columns indexed against `lower`.
std::vector<SparseColumn> boundary_columns(const std::vector<ElementSet>& upper,
                                           const std::vector<ElementSet>& lower);

// Reduced Betti numbers; entry i holds dim H~_{i-1}, so the vector covers
// degrees -1 .. dimension(). Empty for the void complex.
std::vector<int> betti_numbers(const SimplicialComplex& c);

// dim H~_k for k >= -1.
int betti(const SimplicialComplex& c, int k);

// Smallest k >= 0 with H~_{k-1} nonzero; 0 for the void complex; infinity if
// all reduced homology vanishes. Cones short-circuit to infinity.
EtaValue eta(const SimplicialComplex& c);

struct EtaTrace {
  EtaValue eta;
  // Betti numbers from degree -1 up to the first nonzero one (or all of them
  // when eta is infinite). Empty for the void complex.
  std::vector<int> betti_prefix;
};

// eta computed degree by degree without the cone shortcut, keeping the Betti
// numbers it looked at.
EtaTrace eta_with_betti(const SimplicialComplex& c);

}  // namespace rainbow

#endif  // RAINBOW_HOMOLOGY_H_
