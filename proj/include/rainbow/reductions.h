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

// Encodings of rainbow matchings and matrix diagonals as two-matroid
// rainbow instances, and the families showing the size bounds are tight.

#ifndef RAINBOW_REDUCTIONS_H_
#define RAINBOW_REDUCTIONS_H_

#include <utility>
#include <vector>

#include "rainbow/matroid.h"
#include "rainbow/rainbow.h"

namespace rainbow {

// Edge id j is edges[j] = (a, b) with a on side A and b on side B.
struct BipartiteGraph {
  int side_a = 0;
  int side_b = 0;
  std::vector<std::pair<int, int>> edges;

  ElementSet edge_set() const {
    return ElementSet::range(static_cast<int>(edges.size()));
  }
  bool is_matching(ElementSet s) const;
};

using Matching = ElementSet;

// (A-side partition matroid, B-side partition matroid) on the edge ids. A
// set is a matching iff it is independent in both.
std::pair<Matroid, Matroid> bipartite_to_matroid_pair(const BipartiteGraph& g);

RainbowInstance matchings_to_instance(const BipartiteGraph& g,
                                      const std::vector<Matching>& matchings,
                                      int n);

// Entries are 1-based, as written in instance files: rows x cols, entries[r][c].
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<int>> entries;

  static IntMatrix from_columns(const std::vector<std::vector<int>>& columns);
};

// K_{n,n} with edge (i, j) at id i*n + j.
BipartiteGraph complete_bipartite(int n);

// Column c becomes the matching {(i, X[i][c] - 1)} of K_{n,n}. Every column
// must be a permutation of 1..n.
std::vector<Matching> drisko_matrix_to_matchings(const IntMatrix& x);

// The full instance for an n x m row-Latin matrix: K_{n,n}, its matroid pair,
// one set per column and target n.
RainbowInstance drisko_instance(const IntMatrix& x);

// X holds ground elements of `m` (0-based), n rows and 2n-1 columns. The
// instance lives on V x [n] with (v, j) at id v*n + j: M' keeps distinct
// first coordinates with M-independent projection, N keeps distinct second
// coordinates, A_i = {(X[j][i], j)}. Throws Error listing the columns whose
// sets are dependent in M'.
RainbowInstance chappell_matrix_to_instance(
    const std::vector<std::vector<Element>>& x, const Matroid& m, int n);

// 1-based column indices whose sets would not be independent in M'.
std::vector<int> chappell_dependent_columns(
    const std::vector<std::vector<Element>>& x, const Matroid& m);

struct Cell {
  int row = 0;  // 0-based
  int col = 0;  // 0-based
  friend bool operator==(const Cell&, const Cell&) = default;
};
using Diagonal = std::vector<Cell>;

enum class MatrixEncoding {
  kDrisko,    // element i*n + j: row i
  kChappell,  // element v*n + j: row j
};

// Layer i of the selection is column i; the element determines the row.
// Throws Error if two picks share a row or column.
Diagonal selection_to_diagonal(const RainbowSelection& sel, int rows,
                               MatrixEncoding encoding);

// Cycle of length 2n with n-1 copies of each perfect matching. Vertices
// alternate a_0 b_0 a_1 b_1 ...; edge 2i is (a_i, b_i) and edge 2i+1 is
// (a_{i+1 mod n}, b_i).
std::pair<BipartiteGraph, std::vector<Matching>> gen_cycle_tightness(int n);

// K_{n,n} for even n with M_i = {(j, j+i mod n)}, i = 1..n.
std::pair<BipartiteGraph, std::vector<Matching>> gen_complete_bipartite_example(
    int n);

}  // namespace rainbow

#endif  // RAINBOW_REDUCTIONS_H_
