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

#include "rainbow/rainbow.h"

#include <algorithm>
#include <numeric>
#include <utility>

namespace rainbow {

RainbowInstance::RainbowInstance(Matroid m, Matroid n,
                                 std::vector<ElementSet> sets, int target)
    : m_(std::move(m)), n_(std::move(n)), sets_(std::move(sets)), target_(target) {
  if (m_.ground() != n_.ground()) {
    throw Error("matroids M and N live on different ground sets");
  }
  if (target_ < 0) throw Error("target must be nonnegative");
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    const std::string name = "set " + std::to_string(i + 1);
    if (!sets_[i].is_subset_of(m_.ground())) {
      throw Error(name + " " + sets_[i].to_string() + " leaves the ground set");
    }
    if (!m_.is_independent(sets_[i])) {
      throw Error(name + " " + sets_[i].to_string() + " is not independent in M");
    }
    if (!n_.is_independent(sets_[i])) {
      throw Error(name + " " + sets_[i].to_string() + " is not independent in N");
    }
  }
}

bool satisfies_size_hypothesis(const RainbowInstance& inst) {
  const int n = inst.target();
  const auto& sets = inst.sets();
  if (static_cast<int>(sets.size()) != 2 * n - 1) return false;
  for (int i = 1; i <= static_cast<int>(sets.size()); ++i) {
    if (sets[i - 1].size() < std::min(i, n)) return false;
  }
  return true;
}

std::vector<int> sort_sets_by_size(std::vector<ElementSet>& sets) {
  std::vector<int> order(sets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&sets](int a, int b) {
    return sets[a].size() < sets[b].size();
  });
  std::vector<ElementSet> sorted;
  std::vector<int> origin;
  for (int i : order) {
    sorted.push_back(sets[i]);
    origin.push_back(i + 1);
  }
  sets = std::move(sorted);
  return origin;
}

LayeredGround layered_ground(const std::vector<ElementSet>& sets) {
  LayeredGround out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (Element x : sets[i]) out.push_back({x, static_cast<int>(i) + 1});
  }
  if (static_cast<int>(out.size()) > kMaxElements) {
    throw ScaleLimitError("layered ground has " + std::to_string(out.size()) +
                          " pairs, above the limit of " +
                          std::to_string(kMaxElements));
  }
  return out;
}

Matroid lift_matroid(const Matroid& m, const LayeredGround& layered) {
  std::vector<Element> image;
  image.reserve(layered.size());
  for (const LayeredElement& p : layered) image.push_back(p.element);
  return pullback_matroid(m, image);
}

SimplicialComplex build_complex(const Matroid& n, const LayeredGround& layered) {
  const ElementSet ground = ElementSet::range(static_cast<int>(layered.size()));
  return SimplicialComplex::from_predicate(ground, [&](ElementSet s) {
    ElementSet elements;
    std::vector<int> layers;
    for (Element j : s) {
      const LayeredElement& p = layered[j];
      if (elements.contains(p.element)) return false;
      if (std::find(layers.begin(), layers.end(), p.layer) != layers.end()) {
        return false;
      }
      elements.insert(p.element);
      layers.push_back(p.layer);
    }
    return n.is_independent(elements);
  });
}

Hypergraph layered_hypergraph(const Matroid& n, const LayeredGround& layered) {
  const int size = static_cast<int>(layered.size());
  std::vector<ElementSet> edges;
  for (int a = 0; a < size; ++a) {
    for (int b = a + 1; b < size; ++b) {
      if (layered[a].layer == layered[b].layer ||
          layered[a].element == layered[b].element) {
        edges.push_back(ElementSet{a, b});
      }
    }
  }
  // Each circuit lifts to every choice of one pair per circuit element.
  for (ElementSet circuit : circuits(n)) {
    std::vector<std::vector<Element>> options;
    for (Element x : circuit) {
      std::vector<Element> pairs;
      for (int j = 0; j < size; ++j) {
        if (layered[j].element == x) pairs.push_back(j);
      }
      options.push_back(std::move(pairs));
    }
    std::vector<ElementSet> partial{ElementSet()};
    for (const auto& pairs : options) {
      std::vector<ElementSet> grown;
      for (ElementSet p : partial) {
        for (Element j : pairs) grown.push_back(p.with(j));
      }
      partial = std::move(grown);
    }
    edges.insert(edges.end(), partial.begin(), partial.end());
  }
  return Hypergraph(ElementSet::range(size), std::move(edges));
}

std::string RainbowSelection::to_string() const {
  std::string out;
  for (const LayeredElement& p : chosen) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(p.element) + " " + std::to_string(p.layer) + ")";
  }
  return out;
}

namespace {

class RainbowSearch {
 public:
  explicit RainbowSearch(const RainbowInstance& inst)
      : inst_(inst), sets_(inst.sets()), suffix_(sets_.size() + 1) {
    for (std::size_t i = sets_.size(); i-- > 0;) {
      suffix_[i] = suffix_[i + 1] | sets_[i];
    }
  }

  std::optional<RainbowSelection> run() {
    if (dfs(0, ElementSet())) return RainbowSelection{chosen_};
    return std::nullopt;
  }

 private:
  bool dfs(std::size_t layer, ElementSet picked) {
    const int target = inst_.target();
    const int have = static_cast<int>(chosen_.size());
    if (have == target) return true;
    if (have + static_cast<int>(sets_.size() - layer) < target) return false;
    const ElementSet reachable = picked | suffix_[layer];
    if (inst_.matroid_m().rank(reachable) < target ||
        inst_.matroid_n().rank(reachable) < target) {
      return false;
    }
    for (Element x : sets_[layer] - picked) {
      const ElementSet next = picked.with(x);
      if (!inst_.matroid_m().is_independent(next) ||
          !inst_.matroid_n().is_independent(next)) {
        continue;
      }
      chosen_.push_back({x, static_cast<int>(layer) + 1});
      if (dfs(layer + 1, next)) return true;
      chosen_.pop_back();
    }
    return dfs(layer + 1, picked);
  }

  const RainbowInstance& inst_;
  const std::vector<ElementSet>& sets_;
  std::vector<ElementSet> suffix_;
  std::vector<LayeredElement> chosen_;
};

}  // namespace

std::optional<RainbowSelection> find_rainbow(const RainbowInstance& inst) {
  int pairs = 0;
  for (ElementSet s : inst.sets()) pairs += s.size();
  if (pairs > kMaxLayeredPairs) {
    throw ScaleLimitError("instance has " + std::to_string(pairs) +
                          " (element, set) pairs; exact search is limited to " +
                          std::to_string(kMaxLayeredPairs));
  }
  return RainbowSearch(inst).run();
}

bool verify_selection(const RainbowInstance& inst, const RainbowSelection& sel) {
  if (static_cast<int>(sel.chosen.size()) != inst.target()) return false;
  std::vector<bool> used(inst.sets().size() + 1, false);
  ElementSet elements;
  for (const LayeredElement& p : sel.chosen) {
    if (p.layer < 1 || p.layer > static_cast<int>(inst.sets().size())) {
      return false;
    }
    if (used[p.layer]) return false;
    used[p.layer] = true;
    if (!inst.sets()[p.layer - 1].contains(p.element)) return false;
    if (elements.contains(p.element)) return false;
    elements.insert(p.element);
  }
  return inst.matroid_m().is_independent(elements) &&
         inst.matroid_n().is_independent(elements);
}

std::optional<ElementSet> find_basis_in_complex(const Matroid& m,
                                                const SimplicialComplex& c) {
  // A basis inside some face exists iff some facet has full rank; its greedy
  // basis is then a face.
  const int r = m.rank();
  for (ElementSet facet : c.facets()) {
    const ElementSet inside = facet & m.ground();
    if (m.rank(inside) < r) continue;
    ElementSet basis;
    for (Element x : inside) {
      if (m.is_independent(basis.with(x))) basis.insert(x);
    }
    return basis;
  }
  return std::nullopt;
}

MatchabilityReport matchability_check(const Matroid& m,
                                      const SimplicialComplex& c, bool strict) {
  if (m.ground() != c.ground()) {
    throw Error("matroid and complex live on different ground sets");
  }
  MatchabilityReport report;
  report.hypothesis_ok = true;
  auto check = [&](ElementSet f) {
    ++report.sets_checked;
    const ElementSet s = m.ground() - f;
    const EtaValue lhs = eta(restrict_complex(c, s));
    const int rhs = quotient_to(m, s).rank();
    if (lhs < EtaValue(rhs) && report.hypothesis_ok) {
      report.hypothesis_ok = false;
      report.failing_flat = f;
    }
  };
  if (strict) {
    std::vector<ElementSet> all;
    for_each_subset(m.ground(), [&all](ElementSet f) { all.push_back(f); });
    sort_shortlex(all);
    for (ElementSet f : all) {
      check(f);
      if (!report.hypothesis_ok) break;
    }
  } else {
    for (const Flat& f : flats(m)) {
      check(f.set);
      if (!report.hypothesis_ok) break;
    }
  }
  report.basis_found = find_basis_in_complex(m, c);
  if (report.hypothesis_ok && !report.basis_found) {
    throw Error("matchability hypothesis holds but no basis lies in the complex");
  }
  return report;
}

SimplicialComplex partition_intersection_complex(
    const std::vector<ElementSet>& blocks, const Matroid& n) {
  ElementSet covered;
  for (ElementSet b : blocks) covered |= b;
  return SimplicialComplex::from_predicate(n.ground(), [&](ElementSet s) {
    if (!s.is_subset_of(covered)) return false;
    for (ElementSet b : blocks) {
      if ((s & b).size() > 1) return false;
    }
    return n.is_independent(s);
  });
}

namespace {

void validate_blocks(const std::vector<ElementSet>& blocks, const Matroid& n) {
  ElementSet seen;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!blocks[i].is_subset_of(n.ground())) {
      throw Error("block " + std::to_string(i + 1) + " leaves the ground set");
    }
    if (blocks[i].intersects(seen)) {
      throw Error("block " + std::to_string(i + 1) + " overlaps an earlier block");
    }
    seen |= blocks[i];
  }
}

}  // namespace

std::optional<std::vector<int>> find_lemma_indices(
    const std::vector<ElementSet>& blocks, const Matroid& n, int ell) {
  const int need = 2 * ell - 1;
  if (ell < 1 || static_cast<int>(blocks.size()) < need) return std::nullopt;
  std::vector<int> order(blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> ranks(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) ranks[i] = n.rank(blocks[i]);
  // The best choice is the `need` highest-rank blocks, listed by ascending
  // rank.
  std::stable_sort(order.begin(), order.end(),
                   [&ranks](int a, int b) { return ranks[a] > ranks[b]; });
  order.resize(need);
  std::stable_sort(order.begin(), order.end(),
                   [&ranks](int a, int b) { return ranks[a] < ranks[b]; });
  std::vector<int> indices;
  for (int j = 1; j <= need; ++j) {
    if (ranks[order[j - 1]] < std::min(j, ell)) return std::nullopt;
    indices.push_back(order[j - 1] + 1);
  }
  return indices;
}

LemmaResult lemma_main_check(const std::vector<ElementSet>& blocks,
                             const Matroid& n, int ell,
                             const std::vector<int>& indices) {
  if (ell < 1) throw Error("ell must be at least 1");
  validate_blocks(blocks, n);
  LemmaResult result;
  const int need = 2 * ell - 1;
  if (static_cast<int>(blocks.size()) < need) {
    result.reason = "fewer than 2*ell-1 blocks";
    return result;
  }
  if (static_cast<int>(indices.size()) != need) {
    result.reason = "expected " + std::to_string(need) + " indices";
    return result;
  }
  std::vector<bool> used(blocks.size() + 1, false);
  for (int j = 1; j <= need; ++j) {
    const int i = indices[j - 1];
    if (i < 1 || i > static_cast<int>(blocks.size()) || used[i]) {
      result.reason = "index " + std::to_string(i) + " is out of range or repeated";
      return result;
    }
    used[i] = true;
    if (n.rank(blocks[i - 1]) < std::min(j, ell)) {
      result.reason = "rank of block " + std::to_string(i) + " is below " +
                      std::to_string(std::min(j, ell));
      return result;
    }
  }

  const SimplicialComplex filtered = partition_intersection_complex(blocks, n);
  ElementSet covered;
  for (ElementSet b : blocks) covered |= b;
  std::vector<ElementSet> edges = circuits(restrict(n, covered));
  for (ElementSet b : blocks) {
    for (Element x : b) {
      for (Element y : b) {
        if (x < y) edges.push_back(ElementSet{x, y});
      }
    }
  }
  const SimplicialComplex from_hypergraph =
      independence_complex(Hypergraph(covered, std::move(edges)));
  if (filtered.facets() != from_hypergraph.facets()) {
    throw Error("partition intersection and its hypergraph form disagree");
  }

  result.eta = eta(filtered);
  result.status = result.eta >= EtaValue(ell) ? LemmaResult::Status::kHolds
                                              : LemmaResult::Status::kViolation;
  return result;
}

FlatTrace main_theorem_flat_trace(const RainbowInstance& inst) {
  const int n = inst.target();
  const LayeredGround layered = layered_ground(inst.sets());
  const Matroid lifted_m = lift_matroid(truncate(inst.matroid_m(), n), layered);
  const Matroid lifted_n = lift_matroid(inst.matroid_n(), layered);
  const SimplicialComplex c = build_complex(inst.matroid_n(), layered);
  FlatTrace trace;
  for (const Flat& f : flats(lifted_m)) {
    if (f.rank >= n) continue;
    FlatTraceRow row;
    row.flat = f.set;
    row.rank = f.rank;
    const ElementSet complement = lifted_m.ground() - f.set;
    row.quotient_rank = quotient_to(lifted_m, complement).rank();
    row.eta_restricted = eta(restrict_complex(c, complement));
    if (row.eta_restricted < EtaValue(n - f.rank)) trace.all_bounds_hold = false;

    std::vector<ElementSet> blocks(inst.sets().size());
    for (Element j : complement) blocks[layered[j].layer - 1].insert(j);
    const Matroid restricted_n = restrict(lifted_n, complement);
    const int ell = n - f.rank;
    if (auto indices = find_lemma_indices(blocks, restricted_n, ell)) {
      const LemmaResult lemma =
          lemma_main_check(blocks, restricted_n, ell, *indices);
      row.lemma_applicable = true;
      row.lemma_eta = lemma.eta;
    }
    trace.rows.push_back(row);
  }
  return trace;
}

}  // namespace rainbow
