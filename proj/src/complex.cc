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

#include "rainbow/complex.h"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

namespace rainbow {

namespace {

std::vector<ElementSet> maximal_sets(std::vector<ElementSet> sets) {
  std::sort(sets.begin(), sets.end(),
            [](ElementSet a, ElementSet b) { return a.size() > b.size(); });
  std::vector<ElementSet> kept;
  for (ElementSet s : sets) {
    const bool covered = std::any_of(kept.begin(), kept.end(), [s](ElementSet k) {
      return s.is_subset_of(k);
    });
    if (!covered) kept.push_back(s);
  }
  sort_shortlex(kept);
  return kept;
}

void too_many_faces() {
  throw ScaleLimitError("complex has more than " + std::to_string(kMaxFaces) +
                        " faces");
}

}  // namespace

Hypergraph::Hypergraph(ElementSet ground, std::vector<ElementSet> edges)
    : ground_(ground), edges_(std::move(edges)) {
  for (ElementSet e : edges_) {
    if (!e.is_subset_of(ground_)) {
      throw Error("hypergraph edge " + e.to_string() + " leaves the ground set " +
                  ground_.to_string());
    }
  }
  sort_shortlex(edges_);
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Hypergraph::has_edge(ElementSet e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e, shortlex_less);
}

bool Hypergraph::contains_other_edge(ElementSet e) const {
  return std::any_of(edges_.begin(), edges_.end(), [e](ElementSet f) {
    return f != e && f.is_subset_of(e);
  });
}

SimplicialComplex::SimplicialComplex(ElementSet ground,
                                     std::vector<ElementSet> generators)
    : ground_(ground) {
  for (ElementSet g : generators) {
    if (!g.is_subset_of(ground_)) {
      throw Error("face " + g.to_string() + " leaves the ground set " +
                  ground_.to_string());
    }
  }
  facets_ = maximal_sets(std::move(generators));
}

SimplicialComplex SimplicialComplex::void_complex(ElementSet ground) {
  return SimplicialComplex(ground, {});
}

SimplicialComplex SimplicialComplex::full_simplex(ElementSet ground) {
  return SimplicialComplex(ground, {ground});
}

SimplicialComplex SimplicialComplex::from_predicate(
    ElementSet ground, const std::function<bool(ElementSet)>& is_face) {
  if (!is_face(ElementSet())) return void_complex(ground);
  std::vector<ElementSet> maximal;
  std::size_t visited = 0;
  const std::vector<Element> order = ground.to_vector();
  // Each face is reached once, by adding elements in increasing order.
  std::vector<std::pair<ElementSet, std::size_t>> stack{{ElementSet(), 0}};
  while (!stack.empty()) {
    auto [face, next] = stack.back();
    stack.pop_back();
    if (++visited > kMaxFaces) too_many_faces();
    bool extendable = false;
    for (Element x : ground - face) {
      if (is_face(face.with(x))) {
        extendable = true;
        break;
      }
    }
    if (!extendable) maximal.push_back(face);
    for (std::size_t i = next; i < order.size(); ++i) {
      const ElementSet bigger = face.with(order[i]);
      if (bigger != face && is_face(bigger)) stack.emplace_back(bigger, i + 1);
    }
  }
  SimplicialComplex c;
  c.ground_ = ground;
  sort_shortlex(maximal);
  c.facets_ = std::move(maximal);
  return c;
}

bool SimplicialComplex::contains(ElementSet face) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [face](ElementSet f) { return face.is_subset_of(f); });
}

ElementSet SimplicialComplex::vertices() const {
  ElementSet out;
  for (ElementSet f : facets_) out |= f;
  return out;
}

int SimplicialComplex::dimension() const {
  int largest = -1;
  for (ElementSet f : facets_) largest = std::max(largest, f.size());
  return largest - 1;
}

std::vector<std::vector<ElementSet>> SimplicialComplex::faces() const {
  std::unordered_set<ElementSet> seen;
  for (ElementSet f : facets_) {
    if (f.size() >= 63) too_many_faces();
    for_each_subset(f, [&](ElementSet s) {
      if (seen.insert(s).second && seen.size() > kMaxFaces) too_many_faces();
    });
  }
  std::vector<std::vector<ElementSet>> out(dimension() + 2);
  for (ElementSet s : seen) out[s.size()].push_back(s);
  for (auto& level : out) sort_shortlex(level);
  return out;
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t total = 0;
  for (const auto& level : faces()) total += level.size();
  return total;
}

SimplicialComplex independence_complex(const Hypergraph& h) {
  const auto& edges = h.edges();
  return SimplicialComplex::from_predicate(h.ground(), [&edges](ElementSet s) {
    return std::none_of(edges.begin(), edges.end(),
                        [s](ElementSet e) { return e.is_subset_of(s); });
  });
}

Hypergraph delete_edge(const Hypergraph& h, ElementSet e) {
  if (!h.has_edge(e)) {
    throw Error("cannot delete " + e.to_string() + ": not an edge");
  }
  std::vector<ElementSet> rest;
  for (ElementSet f : h.edges()) {
    if (f != e) rest.push_back(f);
  }
  return Hypergraph(h.ground(), std::move(rest));
}

Hypergraph contract_hypergraph(const Hypergraph& h, ElementSet s) {
  if (!s.is_subset_of(h.ground())) {
    throw Error("contracted set " + s.to_string() + " leaves the ground set");
  }
  std::vector<ElementSet> edges;
  for (ElementSet e : h.edges()) {
    if (!e.is_subset_of(s)) edges.push_back(e - s);
  }
  return Hypergraph(h.ground() - s, std::move(edges));
}

Hypergraph intersect_hypergraphs(const Hypergraph& a, const Hypergraph& b) {
  if (a.ground() != b.ground()) {
    throw Error("hypergraphs live on different ground sets " +
                a.ground().to_string() + " and " + b.ground().to_string());
  }
  std::vector<ElementSet> common;
  for (ElementSet e : a.edges()) {
    if (b.has_edge(e)) common.push_back(e);
  }
  return Hypergraph(a.ground(), std::move(common));
}

SimplicialComplex restrict_complex(const SimplicialComplex& c, ElementSet s) {
  if (!s.is_subset_of(c.ground())) {
    throw Error("restriction set " + s.to_string() + " leaves the ground set");
  }
  std::vector<ElementSet> pieces;
  for (ElementSet f : c.facets()) pieces.push_back(f & s);
  return SimplicialComplex(s, std::move(pieces));
}

SimplicialComplex intersect_complexes(const SimplicialComplex& a,
                                      const SimplicialComplex& b) {
  std::vector<ElementSet> pieces;
  for (ElementSet f : a.facets()) {
    for (ElementSet g : b.facets()) pieces.push_back(f & g);
  }
  return SimplicialComplex(a.ground() & b.ground(), std::move(pieces));
}

SimplicialComplex matroid_complex(const Matroid& m) {
  return SimplicialComplex::from_predicate(
      m.ground(), [&m](ElementSet s) { return m.is_independent(s); });
}

std::optional<Element> cone_apex(const SimplicialComplex& c) {
  if (c.is_void()) return std::nullopt;
  ElementSet common = c.facets().front();
  for (ElementSet f : c.facets()) common &= f;
  if (common.empty()) return std::nullopt;
  return common.min();
}

}  // namespace rainbow
