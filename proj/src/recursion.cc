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

#include "rainbow/recursion.h"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace rainbow {

RecursionCheck eta_recursion_check(const Hypergraph& h, ElementSet e) {
  if (!h.has_edge(e)) throw Error(e.to_string() + " is not an edge");
  if (h.contains_other_edge(e)) {
    throw Error("edge " + e.to_string() + " contains another edge");
  }
  RecursionCheck check;
  check.whole = eta(independence_complex(h));
  check.deleted = eta(independence_complex(delete_edge(h, e)));
  check.contracted = eta(independence_complex(contract_hypergraph(h, e)));
  check.bound = min(check.deleted, check.contracted + (e.size() - 1));
  check.holds = check.whole >= check.bound;
  return check;
}

namespace {

bool has_empty_edge(const Hypergraph& h) {
  return !h.edges().empty() && h.edges().front().empty();
}

std::optional<Element> free_vertex(const Hypergraph& h) {
  ElementSet covered;
  for (ElementSet e : h.edges()) covered |= e;
  const ElementSet free = h.ground() - covered;
  if (free.empty()) return std::nullopt;
  return free.min();
}

class CertificateSearch {
 public:
  CertificateSearch(std::size_t budget, Certificate& out)
      : budget_(budget), out_(out) {}

  // Index of a node proving eta(I(h)) >= target, or -1.
  int prove(const Hypergraph& h, int target) {
    if (budget_ == 0) return -1;
    --budget_;
    CertificateNode node;
    if (target <= 0) {
      node.proves = EtaValue(0);
      return push(node);
    }
    if (has_empty_edge(h)) return -1;
    if (auto apex = free_vertex(h)) {
      node.kind = CertificateNode::Kind::kCone;
      node.apex = *apex;
      node.proves = EtaValue::infinity();
      return push(node);
    }
    const std::string key = memo_key(h, target);
    if (failed_.contains(key)) return -1;

    for (Element pivot : h.ground()) {
      std::vector<ElementSet> candidates;
      for (ElementSet e : h.edges()) {
        if (e.contains(pivot) && !h.contains_other_edge(e)) {
          candidates.push_back(e);
        }
      }
      std::stable_sort(candidates.begin(), candidates.end(),
                       [](ElementSet a, ElementSet b) {
                         return a.size() > b.size();
                       });
      for (ElementSet e : candidates) {
        const std::size_t mark = out_.nodes.size();
        const int deleted = prove(delete_edge(h, e), target);
        if (deleted < 0) {
          out_.nodes.resize(mark);
          continue;
        }
        const int contracted =
            prove(contract_hypergraph(h, e), target - (e.size() - 1));
        if (contracted < 0) {
          out_.nodes.resize(mark);
          continue;
        }
        node.kind = CertificateNode::Kind::kSplit;
        node.edge = e;
        node.deleted = deleted;
        node.contracted = contracted;
        node.proves = min(out_.nodes[deleted].proves,
                          out_.nodes[contracted].proves + (e.size() - 1));
        return push(node);
      }
      if (budget_ == 0) return -1;
    }
    failed_.insert(key);
    return -1;
  }

 private:
  int push(const CertificateNode& node) {
    out_.nodes.push_back(node);
    return static_cast<int>(out_.nodes.size()) - 1;
  }

  static std::string memo_key(const Hypergraph& h, int target) {
    std::string key = std::to_string(h.ground().bits()) + ":" +
                      std::to_string(target);
    for (ElementSet e : h.edges()) key += "," + std::to_string(e.bits());
    return key;
  }

  std::size_t budget_;
  Certificate& out_;
  std::unordered_set<std::string> failed_;
};

EtaValue replay_node(const Hypergraph& h, const Certificate& cert, int index) {
  if (index < 0 || index >= static_cast<int>(cert.nodes.size())) {
    throw Error("certificate refers to a missing node");
  }
  const CertificateNode& node = cert.nodes[index];
  EtaValue shown;
  switch (node.kind) {
    case CertificateNode::Kind::kTrivial:
      shown = EtaValue(0);
      break;
    case CertificateNode::Kind::kCone: {
      if (!h.ground().contains(node.apex) || has_empty_edge(h)) {
        throw Error("cone step with an invalid apex");
      }
      for (ElementSet e : h.edges()) {
        if (e.contains(node.apex)) {
          throw Error("cone apex " + std::to_string(node.apex) +
                      " lies in edge " + e.to_string());
        }
      }
      shown = EtaValue::infinity();
      break;
    }
    case CertificateNode::Kind::kSplit: {
      if (!h.has_edge(node.edge) || h.contains_other_edge(node.edge)) {
        throw Error("split on " + node.edge.to_string() +
                    ", which is not a minimal edge");
      }
      const EtaValue deleted =
          replay_node(delete_edge(h, node.edge), cert, node.deleted);
      const EtaValue contracted =
          replay_node(contract_hypergraph(h, node.edge), cert, node.contracted);
      shown = min(deleted, contracted + (node.edge.size() - 1));
      break;
    }
  }
  if (node.proves > shown) {
    throw Error("certificate node claims " + node.proves.to_string() +
                " but only shows " + shown.to_string());
  }
  return shown;
}

}  // namespace

std::optional<Certificate> eta_lower_bound_certificate(const Hypergraph& h,
                                                       int target,
                                                       std::size_t budget) {
  Certificate cert;
  CertificateSearch search(budget, cert);
  const int root = search.prove(h, target);
  if (root < 0) return std::nullopt;
  cert.root = root;
  return cert;
}

EtaValue replay_certificate(const Hypergraph& h, const Certificate& cert) {
  return replay_node(h, cert, cert.root);
}

}  // namespace rainbow
