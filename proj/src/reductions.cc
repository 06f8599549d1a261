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

#include "rainbow/reductions.h"

#include <algorithm>
#include <string>

namespace rainbow {

bool BipartiteGraph::is_matching(ElementSet s) const {
  std::vector<bool> used_a(side_a, false);
  std::vector<bool> used_b(side_b, false);
  for (Element id : s) {
    const auto [a, b] = edges.at(id);
    if (used_a[a] || used_b[b]) return false;
    used_a[a] = true;
    used_b[b] = true;
  }
  return true;
}

std::pair<Matroid, Matroid> bipartite_to_matroid_pair(const BipartiteGraph& g) {
  std::vector<ElementSet> by_a(g.side_a);
  std::vector<ElementSet> by_b(g.side_b);
  for (std::size_t id = 0; id < g.edges.size(); ++id) {
    const auto [a, b] = g.edges[id];
    if (a < 0 || a >= g.side_a || b < 0 || b >= g.side_b) {
      throw Error("graph edge " + std::to_string(id) + " has an endpoint out of range");
    }
    by_a[a].insert(static_cast<Element>(id));
    by_b[b].insert(static_cast<Element>(id));
  }
  const int size = static_cast<int>(g.edges.size());
  return {partition_matroid(size, by_a), partition_matroid(size, by_b)};
}

RainbowInstance matchings_to_instance(const BipartiteGraph& g,
                                      const std::vector<Matching>& matchings,
                                      int n) {
  for (std::size_t i = 0; i < matchings.size(); ++i) {
    if (!matchings[i].is_subset_of(g.edge_set()) ||
        !g.is_matching(matchings[i])) {
      throw Error("set " + std::to_string(i + 1) + " " +
                  matchings[i].to_string() + " is not a matching");
    }
  }
  auto [ma, mb] = bipartite_to_matroid_pair(g);
  return RainbowInstance(std::move(ma), std::move(mb), matchings, n);
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<int>>& columns) {
  IntMatrix x;
  x.cols = static_cast<int>(columns.size());
  x.rows = columns.empty() ? 0 : static_cast<int>(columns.front().size());
  x.entries.assign(x.rows, std::vector<int>(x.cols, 0));
  for (int c = 0; c < x.cols; ++c) {
    if (static_cast<int>(columns[c].size()) != x.rows) {
      throw Error("matrix columns have different lengths");
    }
    for (int r = 0; r < x.rows; ++r) x.entries[r][c] = columns[c][r];
  }
  return x;
}

BipartiteGraph complete_bipartite(int n) {
  if (n < 1 || n * n > kMaxElements) {
    throw ScaleLimitError("K_{n,n} needs 1 <= n <= 8");
  }
  BipartiteGraph g;
  g.side_a = n;
  g.side_b = n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g.edges.emplace_back(i, j);
  }
  return g;
}

std::vector<Matching> drisko_matrix_to_matchings(const IntMatrix& x) {
  if (x.rows < 1 || x.cols < 1) throw Error("matrix dimensions must be positive");
  const int n = x.rows;
  std::vector<Matching> out;
  for (int c = 0; c < x.cols; ++c) {
    std::vector<bool> seen(n + 1, false);
    Matching m;
    for (int r = 0; r < n; ++r) {
      const int v = x.entries[r][c];
      if (v < 1 || v > n || seen[v]) {
        throw Error("column " + std::to_string(c + 1) +
                    " is not a permutation of 1.." + std::to_string(n));
      }
      seen[v] = true;
      m.insert(r * n + (v - 1));
    }
    out.push_back(m);
  }
  return out;
}

RainbowInstance drisko_instance(const IntMatrix& x) {
  const std::vector<Matching> matchings = drisko_matrix_to_matchings(x);
  return matchings_to_instance(complete_bipartite(x.rows), matchings, x.rows);
}

std::vector<int> chappell_dependent_columns(
    const std::vector<std::vector<Element>>& x, const Matroid& m) {
  std::vector<int> bad;
  if (x.empty()) return bad;
  const std::size_t cols = x.front().size();
  for (std::size_t c = 0; c < cols; ++c) {
    ElementSet column;
    bool distinct = true;
    for (const auto& row : x) {
      if (column.contains(row[c])) distinct = false;
      column.insert(row[c]);
    }
    if (!distinct || !m.is_independent(column)) {
      bad.push_back(static_cast<int>(c) + 1);
    }
  }
  return bad;
}

RainbowInstance chappell_matrix_to_instance(
    const std::vector<std::vector<Element>>& x, const Matroid& m, int n) {
  if (n < 1 || static_cast<int>(x.size()) != n) {
    throw Error("matrix must have n >= 1 rows");
  }
  const std::size_t cols = x.front().size();
  if (static_cast<int>(cols) != 2 * n - 1) {
    throw Error("matrix must have 2n-1 columns");
  }
  const int v = m.ground_size();
  if (m.ground() != ElementSet::range(v)) {
    throw Error("matroid ground must be {0..k-1}");
  }
  for (const auto& row : x) {
    if (row.size() != cols) throw Error("matrix rows have different lengths");
    for (Element e : row) {
      if (!m.ground().contains(e)) {
        throw Error("matrix entry " + std::to_string(e) +
                    " is outside the ground set");
      }
    }
  }
  if (v * n > kMaxElements) {
    throw ScaleLimitError("V x [n] exceeds " + std::to_string(kMaxElements) +
                          " elements");
  }
  const std::vector<int> bad = chappell_dependent_columns(x, m);
  if (!bad.empty()) {
    std::string list;
    for (int c : bad) list += (list.empty() ? "" : ", ") + std::to_string(c);
    throw Error("columns " + list + " are not independent in the lifted matroid");
  }

  std::vector<Element> first(v * n);
  std::vector<ElementSet> by_second(n);
  for (int e = 0; e < v; ++e) {
    for (int j = 0; j < n; ++j) {
      first[e * n + j] = e;
      by_second[j].insert(e * n + j);
    }
  }
  std::vector<ElementSet> sets(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    for (int j = 0; j < n; ++j) sets[c].insert(x[j][c] * n + j);
  }
  return RainbowInstance(pullback_matroid(m, first),
                         partition_matroid(v * n, by_second), std::move(sets), n);
}

Diagonal selection_to_diagonal(const RainbowSelection& sel, int rows,
                               MatrixEncoding encoding) {
  Diagonal cells;
  for (const LayeredElement& p : sel.chosen) {
    Cell cell;
    cell.col = p.layer - 1;
    cell.row = encoding == MatrixEncoding::kDrisko ? p.element / rows
                                                   : p.element % rows;
    for (const Cell& other : cells) {
      if (other.row == cell.row) {
        throw Error("two picks share matrix row " + std::to_string(cell.row + 1));
      }
      if (other.col == cell.col) {
        throw Error("two picks share matrix column " + std::to_string(cell.col + 1));
      }
    }
    cells.push_back(cell);
  }
  return cells;
}

std::pair<BipartiteGraph, std::vector<Matching>> gen_cycle_tightness(int n) {
  if (n < 2) throw Error("cycle family needs n >= 2");
  if (2 * n > kMaxElements) throw ScaleLimitError("cycle too long");
  BipartiteGraph g;
  g.side_a = n;
  g.side_b = n;
  Matching even;
  Matching odd;
  for (int i = 0; i < n; ++i) {
    g.edges.emplace_back(i, i);
    g.edges.emplace_back((i + 1) % n, i);
    even.insert(2 * i);
    odd.insert(2 * i + 1);
  }
  std::vector<Matching> matchings(n - 1, even);
  matchings.insert(matchings.end(), n - 1, odd);
  return {g, matchings};
}

std::pair<BipartiteGraph, std::vector<Matching>> gen_complete_bipartite_example(
    int n) {
  if (n < 2 || n % 2 != 0) {
    throw Error("complete bipartite family needs an even n >= 2");
  }
  BipartiteGraph g = complete_bipartite(n);
  std::vector<Matching> matchings;
  for (int i = 1; i <= n; ++i) {
    Matching m;
    for (int j = 0; j < n; ++j) m.insert(j * n + (j + i) % n);
    matchings.push_back(m);
  }
  return {g, matchings};
}

}  // namespace rainbow
