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

#ifndef RAINBOW_COMPLEX_H_
#define RAINBOW_COMPLEX_H_

#include <functional>
#include <optional>
#include <vector>

#include "rainbow/element_set.h"
#include "rainbow/matroid.h"

namespace rainbow {

// Faces beyond this count are refused by face enumeration.
inline constexpr std::size_t kMaxFaces = std::size_t{1} << 20;

// A set family over a ground set. Edges are kept unique and in shortlex
// order; they are not required to form an antichain.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(ElementSet ground, std::vector<ElementSet> edges);

  ElementSet ground() const { return ground_; }
  const std::vector<ElementSet>& edges() const { return edges_; }
  bool has_edge(ElementSet e) const;
  // True if some other edge is a proper subset of e.
  bool contains_other_edge(ElementSet e) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  ElementSet ground_;
  std::vector<ElementSet> edges_;
};

// A simplicial complex stored by its facets. The void complex has no faces
// at all; the complex {∅} has the single facet ∅.
class SimplicialComplex {
 public:
  // The void complex on an empty ground.
  SimplicialComplex() = default;
  // Facets are maximalized; any listed set becomes a face.
  SimplicialComplex(ElementSet ground, std::vector<ElementSet> generators);

  static SimplicialComplex void_complex(ElementSet ground);
  static SimplicialComplex full_simplex(ElementSet ground);
  // The faces are the sets within `ground` that satisfy a downward-closed
  // predicate.
  static SimplicialComplex from_predicate(
      ElementSet ground, const std::function<bool(ElementSet)>& is_face);

  ElementSet ground() const { return ground_; }
  const std::vector<ElementSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool contains(ElementSet face) const;
  // Union of all faces.
  ElementSet vertices() const;
  // Largest face size minus one; -1 for {∅}, -2 for the void complex.
  int dimension() const;

  // faces()[j] holds the faces with j elements, each list shortlex.
  std::vector<std::vector<ElementSet>> faces() const;
  std::size_t face_count() const;

  friend bool operator==(const SimplicialComplex&,
                         const SimplicialComplex&) = default;

 private:
  ElementSet ground_;
  std::vector<ElementSet> facets_;
};

// Sets containing no edge of h.
SimplicialComplex independence_complex(const Hypergraph& h);
// Rejects e when it is not an edge.
Hypergraph delete_edge(const Hypergraph& h, ElementSet e);
// (V \ S, { e \ S : e not inside S }). The resulting family is not
// minimalized.
Hypergraph contract_hypergraph(const Hypergraph& h, ElementSet s);
// Common edges; the grounds must agree.
Hypergraph intersect_hypergraphs(const Hypergraph& a, const Hypergraph& b);

SimplicialComplex restrict_complex(const SimplicialComplex& c, ElementSet s);
// Faces lying in both complexes.
SimplicialComplex intersect_complexes(const SimplicialComplex& a,
                                      const SimplicialComplex& b);
// The complex of independent sets of a matroid.
SimplicialComplex matroid_complex(const Matroid& m);

// Smallest vertex lying in every facet, if any.
std::optional<Element> cone_apex(const SimplicialComplex& c);

}  // namespace rainbow

#endif  // RAINBOW_COMPLEX_H_
