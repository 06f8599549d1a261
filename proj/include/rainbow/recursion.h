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

// Deletion/contraction bounds on eta of independence complexes.
//
// For an edge e of H that contains no other edge,
//   eta(I(H)) >= min(eta(I(H - e)), eta(I(H / e)) + |e| - 1).
// This header checks the inequality with exact homology and searches for
// trees of such steps that bound eta from below without any homology.

#ifndef RAINBOW_RECURSION_H_
#define RAINBOW_RECURSION_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "rainbow/complex.h"
#include "rainbow/homology.h"

namespace rainbow {

struct RecursionCheck {
  EtaValue whole;       // eta(I(H))
  EtaValue deleted;     // eta(I(H - e))
  EtaValue contracted;  // eta(I(H / e))
  EtaValue bound;       // min(deleted, contracted + |e| - 1)
  bool holds = false;
};

// Throws Error if e is not an edge of h or contains another edge.
RecursionCheck eta_recursion_check(const Hypergraph& h, ElementSet e);

struct CertificateNode {
  enum class Kind {
    kTrivial,  // eta >= 0 always
    kCone,     // `apex` lies in no edge, so I(H) is a cone
    kSplit,    // deletion/contraction on `edge`
  };
  Kind kind = Kind::kTrivial;
  Element apex = -1;
  ElementSet edge;
  int deleted = -1;     // child index proving the bound for H - edge
  int contracted = -1;  // child index proving the bound for H / edge
  EtaValue proves;      // bound established at this node
};

struct Certificate {
  std::vector<CertificateNode> nodes;
  int root = -1;

  EtaValue proves() const { return nodes.at(root).proves; }
};

// Depth-first search for a certificate that eta(I(h)) >= target, visiting at
// most `budget` search nodes. Edges through a fixed pivot vertex are tried
// first, larger edges before smaller ones. Returns nothing when the budget
// runs out or no tree of this shape exists.
std::optional<Certificate> eta_lower_bound_certificate(const Hypergraph& h,
                                                       int target,
                                                       std::size_t budget);

// Re-derives every step of `cert` against h and returns the bound it proves.
// Throws Error if any step is invalid or a node claims more than it shows.
EtaValue replay_certificate(const Hypergraph& h, const Certificate& cert);

}  // namespace rainbow

#endif  // RAINBOW_RECURSION_H_
