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

#include "oracles.h"

#include <algorithm>
#include <boost/rational.hpp>
#include <functional>
#include <set>

namespace rainbow::testing {

namespace {

using Rational = boost::rational<long long>;

int dense_rank(std::vector<std::vector<Rational>> a) {
  int rank = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r][c].numerator() != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c].numerator() == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (int k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t table_size(ElementSet ground) {
  return ground.empty() ? 1 : std::size_t{1} << (ground.max() + 1);
}

// Brute-force rank of every subset of the ground, indexed by bits.
std::vector<int> rank_table(const Matroid& m) {
  const std::vector<bool> indep = independence_table(m);
  std::vector<int> r(indep.size(), 0);
  for (ElementSet s : subsets(m.ground())) {
    if (indep[s.bits()]) {
      r[s.bits()] = s.size();
      continue;
    }
    int best = 0;
    for (Element x : s) best = std::max(best, r[s.without(x).bits()]);
    r[s.bits()] = best;
  }
  return r;
}

}  // namespace

std::vector<ElementSet> subsets(ElementSet s) {
  std::vector<ElementSet> out;
  std::uint64_t sub = 0;
  do {
    out.emplace_back(sub);
    sub = (sub - s.bits()) & s.bits();
  } while (sub != 0);
  return out;
}

bool size_then_lex(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.to_vector() < b.to_vector();
}

std::vector<bool> independence_table(const Matroid& m) {
  std::vector<bool> t(table_size(m.ground()), false);
  for (ElementSet s : subsets(m.ground())) t[s.bits()] = m.is_independent(s);
  return t;
}

int brute_rank(const Matroid& m, ElementSet s) {
  int best = 0;
  for (ElementSet t : subsets(s)) {
    if (t.size() > best && m.is_independent(t)) best = t.size();
  }
  return best;
}

std::vector<ElementSet> brute_circuits(const Matroid& m) {
  const std::vector<bool> indep = independence_table(m);
  std::vector<ElementSet> out;
  for (ElementSet s : subsets(m.ground())) {
    if (indep[s.bits()]) continue;
    bool minimal = true;
    for (Element x : s) minimal = minimal && indep[s.without(x).bits()];
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

std::vector<ElementSet> brute_flats(const Matroid& m) {
  const std::vector<int> r = rank_table(m);
  std::vector<ElementSet> out;
  for (ElementSet s : subsets(m.ground())) {
    bool flat = true;
    for (Element x : m.ground() - s) flat = flat && r[s.with(x).bits()] > r[s.bits()];
    if (flat) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

bool brute_quotient_independent(const Matroid& m, ElementSet s, ElementSet e) {
  for (ElementSet f : subsets(m.ground() - s)) {
    if (m.is_independent(f) && !m.is_independent(e | f)) return false;
  }
  return true;
}

std::vector<ElementSet> brute_faces(const SimplicialComplex& c) {
  std::set<std::uint64_t> seen;
  for (ElementSet f : c.facets()) {
    for (ElementSet s : subsets(f)) seen.insert(s.bits());
  }
  std::vector<ElementSet> out;
  for (std::uint64_t b : seen) out.emplace_back(b);
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

std::vector<ElementSet> brute_independence_facets(const Hypergraph& h) {
  std::vector<ElementSet> indep;
  for (ElementSet s : subsets(h.ground())) {
    bool ok = true;
    for (ElementSet e : h.edges()) ok = ok && !e.is_subset_of(s);
    if (ok) indep.push_back(s);
  }
  std::vector<ElementSet> facets;
  for (ElementSet s : indep) {
    bool maximal = true;
    for (ElementSet t : indep) maximal = maximal && !(s != t && s.is_subset_of(t));
    if (maximal) facets.push_back(s);
  }
  std::sort(facets.begin(), facets.end(), size_then_lex);
  return facets;
}

std::vector<int> dense_betti(const SimplicialComplex& c) {
  const std::vector<ElementSet> all = brute_faces(c);
  if (all.empty()) return {};
  int top = 0;
  for (ElementSet f : all) top = std::max(top, f.size());
  std::vector<std::vector<ElementSet>> by_size(top + 2);
  for (ElementSet f : all) by_size[f.size()].push_back(f);
  // rank_of[j]: rank of the map from size-j faces to size-(j-1) faces.
  std::vector<int> rank_of(top + 2, 0);
  for (int j = 1; j <= top; ++j) {
    const auto& upper = by_size[j];
    const auto& lower = by_size[j - 1];
    std::vector<std::vector<Rational>> mat(lower.size(),
                                           std::vector<Rational>(upper.size(), 0));
    for (std::size_t col = 0; col < upper.size(); ++col) {
      const std::vector<Element> verts = upper[col].to_vector();
      for (std::size_t i = 0; i < verts.size(); ++i) {
        const ElementSet face = upper[col].without(verts[i]);
        const auto row = std::find(lower.begin(), lower.end(), face) - lower.begin();
        mat[row][col] = (i % 2 == 0) ? 1 : -1;
      }
    }
    rank_of[j] = dense_rank(mat);
  }
  std::vector<int> betti(top + 1);
  for (int j = 0; j <= top; ++j) {
    betti[j] = static_cast<int>(by_size[j].size()) - rank_of[j] - rank_of[j + 1];
  }
  return betti;
}

long long dense_eta(const SimplicialComplex& c) {
  const std::vector<int> b = dense_betti(c);
  if (b.empty()) return 0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (b[k] != 0) return static_cast<long long>(k);
  }
  return -1;
}

bool brute_rainbow_exists(const RainbowInstance& inst) {
  const auto& sets = inst.sets();
  const int target = inst.target();
  std::function<bool(std::size_t, ElementSet, int)> go =
      [&](std::size_t layer, ElementSet picked, int count) -> bool {
    if (count == target) {
      return inst.matroid_m().is_independent(picked) &&
             inst.matroid_n().is_independent(picked);
    }
    if (layer == sets.size()) return false;
    for (Element x : sets[layer]) {
      if (!picked.contains(x) && go(layer + 1, picked.with(x), count + 1)) return true;
    }
    return go(layer + 1, picked, count);
  };
  return go(0, ElementSet(), 0);
}

bool brute_drisko_diagonal(const IntMatrix& x) {
  std::vector<bool> used_col(x.cols, false);
  std::function<bool(int, std::uint32_t)> go = [&](int row, std::uint32_t values) {
    if (row == x.rows) return values == (1u << x.rows) - 1;
    for (int c = 0; c < x.cols; ++c) {
      if (used_col[c]) continue;
      const std::uint32_t bit = 1u << (x.entries[row][c] - 1);
      if (values & bit) continue;
      used_col[c] = true;
      const bool found = go(row + 1, values | bit);
      used_col[c] = false;
      if (found) return true;
    }
    return false;
  };
  return go(0, 0);
}

SimplicialComplex random_complex(int vertices, Rng& rng) {
  const ElementSet ground = ElementSet::range(vertices);
  if (rng.coin(1, 25)) return SimplicialComplex::void_complex(ground);
  const int count = rng.uniform(0, 5);
  std::vector<ElementSet> facets{ElementSet()};
  for (int i = 0; i < count; ++i) {
    ElementSet f;
    for (Element x = 0; x < vertices; ++x) {
      if (rng.coin(1, 2)) f.insert(x);
    }
    facets.push_back(f);
  }
  return SimplicialComplex(ground, facets);
}

Hypergraph random_hypergraph(int vertices, Rng& rng) {
  const int count = rng.uniform(0, vertices + 2);
  std::vector<ElementSet> edges;
  std::vector<Element> order = ElementSet::range(vertices).to_vector();
  for (int i = 0; i < count; ++i) {
    rng.shuffle(order);
    ElementSet e;
    const int size = rng.uniform(1, std::min(vertices, 3));
    for (int j = 0; j < size; ++j) e.insert(order[j]);
    edges.push_back(e);
  }
  return Hypergraph(ElementSet::range(vertices), edges);
}

std::vector<std::pair<std::string, Matroid>> random_realizations(int g, Rng& rng) {
  std::vector<std::pair<std::string, Matroid>> out;
  out.emplace_back("uniform", uniform_matroid(g, rng.uniform(0, g)));
  out.emplace_back("free", free_matroid(g));
  out.emplace_back("partition", random_matroid(MatroidKind::kPartition, g, 0, rng));
  out.emplace_back("graphic", random_matroid(MatroidKind::kGraphic, g, 0, rng));
  out.emplace_back("linear", random_matroid(MatroidKind::kLinear, g, 0, rng));
  const Matroid base = random_matroid(MatroidKind::kLinear, g, 0, rng);
  out.emplace_back("circuits", from_circuits(g, brute_circuits(base)));
  const Matroid graphic = random_matroid(MatroidKind::kGraphic, g, 0, rng);
  std::vector<ElementSet> family;
  for (ElementSet s : subsets(graphic.ground())) {
    if (graphic.is_independent(s)) family.push_back(s);
  }
  out.emplace_back("independent", from_independent_sets(g, family));
  std::vector<Element> image(g);
  const int base_size = std::max(1, g - 2);
  for (Element& x : image) x = rng.uniform(0, base_size - 1);
  out.emplace_back("pullback",
                   pullback_matroid(uniform_matroid(base_size, rng.uniform(0, base_size)),
                                    image));
  if (g > 0) {
    const Matroid source = random_matroid(MatroidKind::kGraphic, g + 1, 0, rng);
    out.emplace_back("contract", contract(source, ElementSet{g}));
    const Matroid wide = random_matroid(MatroidKind::kLinear, g + 1, 0, rng);
    out.emplace_back("restrict", restrict(wide, ElementSet::range(g)));
  }
  out.emplace_back("truncate",
                   truncate(random_matroid(MatroidKind::kLinear, g, 0, rng),
                            rng.uniform(0, g)));
  return out;
}

std::string check_rank_axioms(const Matroid& m) {
  const std::vector<int> r = rank_table(m);
  const std::vector<ElementSet> all = subsets(m.ground());
  if (m.rank(ElementSet()) != 0) return "rank of the empty set is not 0";
  for (ElementSet s : all) {
    const int rs = m.rank(s);
    if (rs != r[s.bits()]) {
      return "rank " + s.to_string() + " = " + std::to_string(rs) +
             ", brute force " + std::to_string(r[s.bits()]);
    }
    for (Element x : m.ground() - s) {
      const int rx = m.rank(s.with(x));
      if (rx < rs || rx > rs + 1) return "unit increase fails at " + s.to_string();
    }
  }
  for (ElementSet s : all) {
    for (ElementSet t : all) {
      if (r[(s | t).bits()] + r[(s & t).bits()] > r[s.bits()] + r[t.bits()]) {
        return "submodularity fails at " + s.to_string() + ", " + t.to_string();
      }
    }
  }
  return "";
}

std::string check_circuit_elimination(const Matroid& m) {
  const std::vector<ElementSet> c = circuits(m);
  if (c != brute_circuits(m)) return "circuits differ from brute force";
  for (ElementSet a : c) {
    for (ElementSet b : c) {
      if (a == b) continue;
      if (a.is_subset_of(b)) return "not an antichain";
      for (Element x : a & b) {
        const ElementSet pool = (a | b).without(x);
        const bool found = std::any_of(c.begin(), c.end(),
                                       [&](ElementSet d) { return d.is_subset_of(pool); });
        if (!found) {
          return "elimination fails for " + a.to_string() + " " + b.to_string() +
                 " at " + std::to_string(x);
        }
      }
    }
  }
  return "";
}

std::string check_contraction_formula(const Matroid& m) {
  for (ElementSet s : subsets(m.ground())) {
    const Matroid c = contract(m, s);
    if (c.ground() != m.ground() - s) return "contraction ground wrong for " + s.to_string();
    const int rs = m.rank(s);
    for (ElementSet t : subsets(m.ground() - s)) {
      if (c.rank(t) != m.rank(t | s) - rs) {
        return "contraction rank wrong for S=" + s.to_string() + " T=" + t.to_string();
      }
    }
  }
  return "";
}

std::string check_quotient_equivalence(const Matroid& m) {
  const std::vector<bool> indep = independence_table(m);
  for (ElementSet s : subsets(m.ground())) {
    const Matroid q = quotient_to(m, s);
    if (q.ground() != s) return "quotient ground wrong for " + s.to_string();
    const std::vector<ElementSet> outside = subsets(m.ground() - s);
    for (ElementSet e : subsets(s)) {
      bool expected = true;
      for (ElementSet f : outside) {
        if (indep[f.bits()] && !indep[(e | f).bits()]) {
          expected = false;
          break;
        }
      }
      if (q.is_independent(e) != expected) {
        return "quotient differs for S=" + s.to_string() + " e=" + e.to_string();
      }
    }
  }
  return "";
}

std::string check_loops_and_coloops(const Matroid& m) {
  const std::vector<ElementSet> c = circuits(m);
  for (Element x : m.ground()) {
    const bool singleton = std::find(c.begin(), c.end(), ElementSet{x}) != c.end();
    if (m.is_loop(x) != singleton) return "loop mismatch at " + std::to_string(x);
    const bool in_circuit =
        std::any_of(c.begin(), c.end(), [x](ElementSet d) { return d.contains(x); });
    if (is_coloop(m, x) == in_circuit) return "coloop mismatch at " + std::to_string(x);
  }
  return "";
}

}  // namespace rainbow::testing
