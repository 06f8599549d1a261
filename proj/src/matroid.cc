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

#include "rainbow/matroid.h"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace rainbow {

struct Matroid::RankMemo {
  static constexpr std::size_t kCapacity = 1 << 16;
  std::mutex mu;
  std::unordered_map<std::uint64_t, int> ranks;
};

Matroid::Matroid(ElementSet ground, std::shared_ptr<const MatroidOracle> oracle)
    : ground_(ground),
      oracle_(std::move(oracle)),
      memo_(std::make_shared<RankMemo>()) {}

void Matroid::require_subset(ElementSet s) const {
  if (!s.is_subset_of(ground_)) {
    throw Error("set " + s.to_string() + " is not inside the ground set " +
                ground_.to_string());
  }
}

bool Matroid::is_independent(ElementSet s) const {
  require_subset(s);
  return oracle_->independent(s);
}

int Matroid::rank(ElementSet s) const {
  require_subset(s);
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto it = memo_->ranks.find(s.bits());
    if (it != memo_->ranks.end()) return it->second;
  }
  // Greedy is exact for matroids.
  ElementSet basis;
  for (Element x : s) {
    if (oracle_->independent(basis.with(x))) basis.insert(x);
  }
  const int r = basis.size();
  std::lock_guard<std::mutex> lock(memo_->mu);
  if (memo_->ranks.size() >= RankMemo::kCapacity) memo_->ranks.clear();
  memo_->ranks.emplace(s.bits(), r);
  return r;
}

namespace {

bool is_dense_range(ElementSet s) { return s == ElementSet::range(s.size()); }

std::string join_set(ElementSet s, char sep) {
  std::string out;
  for (Element x : s) {
    if (!out.empty()) out += sep;
    out += std::to_string(x);
  }
  return out;
}

class UniformOracle : public MatroidOracle {
 public:
  explicit UniformOracle(int k) : k_(k) {}
  bool independent(ElementSet s) const override { return s.size() <= k_; }
  std::optional<std::string> describe() const override {
    return "uniform " + std::to_string(k_);
  }

 private:
  int k_;
};

class PartitionOracle : public MatroidOracle {
 public:
  PartitionOracle(ElementSet ground, std::vector<ElementSet> blocks)
      : ground_(ground), blocks_(std::move(blocks)) {
    for (ElementSet b : blocks_) covered_ |= b;
  }
  bool independent(ElementSet s) const override {
    if (!s.is_subset_of(covered_)) return false;
    for (ElementSet b : blocks_) {
      if ((s & b).size() > 1) return false;
    }
    return true;
  }
  std::optional<std::string> describe() const override {
    if (!is_dense_range(ground_)) return std::nullopt;
    std::string out = "partition";
    std::string body;
    for (ElementSet b : blocks_) {
      if (b.empty()) continue;
      if (!body.empty()) body += '|';
      body += join_set(b, ',');
    }
    if (!body.empty()) out += " " + body;
    return out;
  }

 private:
  ElementSet ground_;
  ElementSet covered_;
  std::vector<ElementSet> blocks_;
};

class GraphicOracle : public MatroidOracle {
 public:
  GraphicOracle(int vertices, std::vector<GraphEdge> edges)
      : vertices_(vertices), edges_(std::move(edges)) {
    by_id_.assign(kMaxElements, -1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      by_id_[edges_[i].id] = static_cast<int>(i);
    }
  }
  bool independent(ElementSet s) const override {
    std::vector<int> parent(vertices_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
      }
      return v;
    };
    for (Element id : s) {
      const GraphEdge& e = edges_[by_id_[id]];
      const int a = find(e.u);
      const int b = find(e.v);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  }
  std::optional<std::string> describe() const override {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i].id != static_cast<Element>(i)) return std::nullopt;
    }
    std::string out = "graphic " + std::to_string(vertices_);
    std::string body;
    for (const GraphEdge& e : edges_) {
      if (!body.empty()) body += ',';
      body += std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    if (!body.empty()) out += " " + body;
    return out;
  }

 private:
  int vertices_;
  std::vector<GraphEdge> edges_;
  std::vector<int> by_id_;
};

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int inverse_mod(int a, int p) {
  // Fermat: a^(p-2).
  long long result = 1;
  long long base = a;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<int>(result);
}

class LinearOracle : public MatroidOracle {
 public:
  LinearOracle(int prime, std::vector<std::vector<int>> columns)
      : prime_(prime), columns_(std::move(columns)) {}

  bool independent(ElementSet s) const override {
    std::vector<std::vector<int>> rows;
    rows.reserve(s.size());
    for (Element x : s) rows.push_back(columns_[x]);
    const std::size_t dim = columns_.empty() ? 0 : columns_.front().size();
    if (rows.size() > dim) return false;
    // Row-reduce the chosen vectors; independent iff every one gets a pivot.
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < dim && pivot_row < rows.size(); ++col) {
      std::size_t r = pivot_row;
      while (r < rows.size() && rows[r][col] == 0) ++r;
      if (r == rows.size()) continue;
      std::swap(rows[r], rows[pivot_row]);
      const int inv = inverse_mod(rows[pivot_row][col], prime_);
      for (std::size_t other = pivot_row + 1; other < rows.size(); ++other) {
        const int factor = rows[other][col] * inv % prime_;
        if (factor == 0) continue;
        for (std::size_t c = col; c < dim; ++c) {
          rows[other][c] =
              ((rows[other][c] - factor * rows[pivot_row][c]) % prime_ + prime_) %
              prime_;
        }
      }
      ++pivot_row;
    }
    return pivot_row == rows.size();
  }

  std::optional<std::string> describe() const override {
    std::string out = "linear " + std::to_string(prime_);
    std::string body;
    for (const auto& col : columns_) {
      if (!body.empty()) body += ';';
      for (std::size_t i = 0; i < col.size(); ++i) {
        if (i > 0) body += ',';
        body += std::to_string(col[i]);
      }
    }
    if (!body.empty()) out += " " + body;
    return out;
  }

 private:
  int prime_;
  std::vector<std::vector<int>> columns_;
};

class CircuitOracle : public MatroidOracle {
 public:
  CircuitOracle(ElementSet ground, std::vector<ElementSet> circuits)
      : ground_(ground), circuits_(std::move(circuits)) {}
  bool independent(ElementSet s) const override {
    for (ElementSet c : circuits_) {
      if (c.is_subset_of(s)) return false;
    }
    return true;
  }
  std::optional<std::string> describe() const override {
    if (!is_dense_range(ground_)) return std::nullopt;
    std::string out = "circuits";
    for (ElementSet c : circuits_) out += " { " + join_set(c, ' ') + " }";
    return out;
  }

 private:
  ElementSet ground_;
  std::vector<ElementSet> circuits_;
};

class FamilyOracle : public MatroidOracle {
 public:
  FamilyOracle(ElementSet ground, const std::vector<ElementSet>& family)
      : ground_(ground), members_(std::size_t{1} << (ground.max() + 1), false) {
    for (ElementSet s : family) members_[s.bits()] = true;
  }
  bool independent(ElementSet s) const override { return members_[s.bits()]; }
  std::optional<std::string> describe() const override {
    if (!is_dense_range(ground_)) return std::nullopt;
    std::vector<ElementSet> family;
    for_each_subset(ground_, [&](ElementSet s) {
      if (members_[s.bits()]) family.push_back(s);
    });
    sort_shortlex(family);
    std::string out = "independent";
    for (ElementSet s : family) {
      out += s.empty() ? " { }" : " { " + join_set(s, ' ') + " }";
    }
    return out;
  }

 private:
  ElementSet ground_;
  std::vector<bool> members_;
};

class ContractionOracle : public MatroidOracle {
 public:
  ContractionOracle(Matroid base, ElementSet contracted)
      : base_(std::move(base)),
        contracted_(contracted),
        contracted_rank_(base_.rank(contracted)) {}
  bool independent(ElementSet s) const override {
    return base_.rank(s | contracted_) == s.size() + contracted_rank_;
  }

 private:
  Matroid base_;
  ElementSet contracted_;
  int contracted_rank_;
};

class RestrictionOracle : public MatroidOracle {
 public:
  explicit RestrictionOracle(Matroid base) : base_(std::move(base)) {}
  bool independent(ElementSet s) const override {
    return base_.is_independent(s);
  }

 private:
  Matroid base_;
};

class TruncationOracle : public MatroidOracle {
 public:
  TruncationOracle(Matroid base, int k) : base_(std::move(base)), k_(k) {}
  bool independent(ElementSet s) const override {
    return s.size() <= k_ && base_.is_independent(s);
  }

 private:
  Matroid base_;
  int k_;
};

class PullbackOracle : public MatroidOracle {
 public:
  PullbackOracle(Matroid base, std::vector<Element> image)
      : base_(std::move(base)), image_(std::move(image)) {}
  bool independent(ElementSet s) const override {
    ElementSet projected;
    for (Element x : s) {
      const Element y = image_[x];
      if (projected.contains(y)) return false;
      projected.insert(y);
    }
    return base_.is_independent(projected);
  }

 private:
  Matroid base_;
  std::vector<Element> image_;
};

void require_enumerable(ElementSet ground) {
  if (ground.size() > kMaxEnumerationGround) {
    throw ScaleLimitError("ground of " + std::to_string(ground.size()) +
                          " elements exceeds the enumeration limit of " +
                          std::to_string(kMaxEnumerationGround));
  }
}

void require_explicit(ElementSet ground) {
  if (!ground.empty() && ground.max() >= kMaxExplicitGround) {
    throw ScaleLimitError("explicit matroids are limited to " +
                          std::to_string(kMaxExplicitGround) + " elements");
  }
}

}  // namespace

Matroid uniform_matroid(int n, int k) {
  if (n < 0 || k < 0) throw Error("uniform matroid needs n, k >= 0");
  if (k > n) {
    throw Error("uniform matroid rank " + std::to_string(k) +
                " exceeds ground size " + std::to_string(n));
  }
  return Matroid(ElementSet::range(n), std::make_shared<UniformOracle>(k));
}

Matroid free_matroid(int n) { return uniform_matroid(n, n); }

Matroid partition_matroid(int ground_size,
                          const std::vector<ElementSet>& blocks) {
  const ElementSet ground = ElementSet::range(ground_size);
  ElementSet seen;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!blocks[i].is_subset_of(ground)) {
      throw Error("partition block " + std::to_string(i) + " " +
                  blocks[i].to_string() + " leaves the ground set");
    }
    if (blocks[i].intersects(seen)) {
      for (std::size_t j = 0; j < i; ++j) {
        if (blocks[i].intersects(blocks[j])) {
          throw Error("partition blocks " + std::to_string(j) + " " +
                      blocks[j].to_string() + " and " + std::to_string(i) +
                      " " + blocks[i].to_string() + " overlap");
        }
      }
    }
    seen |= blocks[i];
  }
  return Matroid(ground, std::make_shared<PartitionOracle>(ground, blocks));
}

Matroid partition_matroid(const std::vector<ElementSet>& blocks) {
  ElementSet all;
  for (ElementSet b : blocks) all |= b;
  return partition_matroid(all.empty() ? 0 : all.max() + 1, blocks);
}

Matroid graphic_matroid(int vertices, const std::vector<GraphEdge>& edges) {
  ElementSet ground;
  for (const GraphEdge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= vertices || e.v >= vertices) {
      throw Error("graph edge " + std::to_string(e.id) +
                  " has an endpoint outside [0, " + std::to_string(vertices) +
                  ")");
    }
    if (ground.contains(e.id)) {
      throw Error("duplicate graph edge id " + std::to_string(e.id));
    }
    ground.insert(e.id);
  }
  return Matroid(ground, std::make_shared<GraphicOracle>(vertices, edges));
}

Matroid linear_matroid(int prime, const std::vector<std::vector<int>>& columns) {
  if (!is_prime(prime)) {
    throw Error("linear matroid modulus " + std::to_string(prime) +
                " is not prime");
  }
  std::vector<std::vector<int>> reduced = columns;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (reduced[i].size() != reduced.front().size()) {
      throw Error("linear matroid column " + std::to_string(i) +
                  " has a different length");
    }
    for (int& v : reduced[i]) v = ((v % prime) + prime) % prime;
  }
  return Matroid(ElementSet::range(static_cast<int>(columns.size())),
                 std::make_shared<LinearOracle>(prime, std::move(reduced)));
}

CircuitReport check_circuit_axioms(ElementSet ground,
                                   const std::vector<ElementSet>& family) {
  CircuitReport report;
  for (ElementSet c : family) {
    if (!c.is_subset_of(ground)) {
      report.ok = false;
      report.reason = "circuit " + c.to_string() + " leaves the ground set";
      report.c1 = c;
      return report;
    }
    if (c.empty()) {
      report.ok = false;
      report.reason = "the empty set cannot be a circuit";
      return report;
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i != j && family[i].is_subset_of(family[j])) {
        report.ok = false;
        report.reason = "circuit family is not an antichain: " +
                        family[i].to_string() + " inside " +
                        family[j].to_string();
        report.c1 = family[i];
        report.c2 = family[j];
        return report;
      }
    }
  }
  // Strong elimination: for x in c1 & c2 and y in c1 \ c2 some circuit inside
  // c1 | c2 avoids x and contains y.
  for (ElementSet c1 : family) {
    for (ElementSet c2 : family) {
      if (c1 == c2) continue;
      const ElementSet u = c1 | c2;
      for (Element x : c1 & c2) {
        for (Element y : c1 - c2) {
          const bool found = std::any_of(
              family.begin(), family.end(), [&](ElementSet c3) {
                return c3.is_subset_of(u) && !c3.contains(x) && c3.contains(y);
              });
          if (!found) {
            report.ok = false;
            report.reason = "circuit elimination fails for " + c1.to_string() +
                            ", " + c2.to_string() + " at x=" +
                            std::to_string(x) + ", y=" + std::to_string(y);
            report.c1 = c1;
            report.c2 = c2;
            report.x = x;
            report.y = y;
            return report;
          }
        }
      }
    }
  }
  return report;
}

Matroid from_circuits(ElementSet ground, const std::vector<ElementSet>& circuits) {
  require_explicit(ground);
  std::vector<ElementSet> family = circuits;
  sort_shortlex(family);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  CircuitReport report = check_circuit_axioms(ground, family);
  if (!report.ok) throw Error(report.reason);
  return Matroid(ground, std::make_shared<CircuitOracle>(ground, std::move(family)));
}

Matroid from_circuits(int ground_size, const std::vector<ElementSet>& circuits) {
  return from_circuits(ElementSet::range(ground_size), circuits);
}

std::string AxiomReport::to_string() const {
  switch (violation) {
    case AxiomViolation::kNone:
      return "ok";
    case AxiomViolation::kMissingEmptySet:
      return "the empty set is not independent";
    case AxiomViolation::kNotDownwardClosed:
      return "not downward closed: " + first.to_string() +
             " is independent but its subset " + second.to_string() + " is not";
    case AxiomViolation::kExchange:
      return "exchange fails: no element of " + (second - first).to_string() +
             " extends " + first.to_string();
    case AxiomViolation::kOutsideGround:
      return "set " + first.to_string() + " leaves the ground set";
  }
  return "unknown";
}

AxiomReport check_matroid_axioms(ElementSet ground,
                                 const std::vector<ElementSet>& family) {
  AxiomReport report;
  std::unordered_set<ElementSet> members(family.begin(), family.end());
  for (ElementSet s : family) {
    if (!s.is_subset_of(ground)) {
      report.violation = AxiomViolation::kOutsideGround;
      report.first = s;
      return report;
    }
  }
  if (!members.contains(ElementSet())) {
    report.violation = AxiomViolation::kMissingEmptySet;
    return report;
  }
  std::vector<ElementSet> sorted(members.begin(), members.end());
  sort_shortlex(sorted);
  for (ElementSet t : sorted) {
    // Largest element first, so the reported subset is shortlex-smallest.
    const std::vector<Element> elems = t.to_vector();
    for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
      const Element x = *it;
      if (!members.contains(t.without(x))) {
        report.violation = AxiomViolation::kNotDownwardClosed;
        report.first = t;
        report.second = t.without(x);
        return report;
      }
    }
  }
  // With downward closure in place, exchange between consecutive sizes
  // implies the general exchange property.
  int max_size = 0;
  for (ElementSet s : sorted) max_size = std::max(max_size, s.size());
  std::vector<std::vector<ElementSet>> by_size(max_size + 1);
  for (ElementSet s : sorted) by_size[s.size()].push_back(s);
  for (int k = 0; k < max_size; ++k) {
    for (ElementSet s : by_size[k]) {
      for (ElementSet t : by_size[k + 1]) {
        bool extended = false;
        for (Element x : t - s) {
          if (members.contains(s.with(x))) {
            extended = true;
            break;
          }
        }
        if (!extended) {
          report.violation = AxiomViolation::kExchange;
          report.first = s;
          report.second = t;
          return report;
        }
      }
    }
  }
  return report;
}

Matroid from_independent_sets(int ground_size,
                              const std::vector<ElementSet>& family) {
  const ElementSet ground = ElementSet::range(ground_size);
  require_explicit(ground);
  AxiomReport report = check_matroid_axioms(ground, family);
  if (!report.ok()) throw Error("not a matroid: " + report.to_string());
  return Matroid(ground, std::make_shared<FamilyOracle>(ground, family));
}

Matroid pullback_matroid(const Matroid& base, const std::vector<Element>& image) {
  for (Element y : image) {
    if (!base.ground().contains(y)) {
      throw Error("pullback image " + std::to_string(y) +
                  " is outside the base ground set");
    }
  }
  return Matroid(ElementSet::range(static_cast<int>(image.size())),
                 std::make_shared<PullbackOracle>(base, image));
}

std::vector<ElementSet> circuits(const Matroid& m) {
  require_enumerable(m.ground());
  std::vector<ElementSet> out;
  for_each_subset(m.ground(), [&](ElementSet c) {
    if (c.empty() || m.is_independent(c)) return;
    for (Element x : c) {
      if (!m.is_independent(c.without(x))) return;
    }
    out.push_back(c);
  });
  sort_shortlex(out);
  return out;
}

bool is_coloop(const Matroid& m, Element x) {
  // x lies in no circuit iff removing it drops the rank of the ground.
  return m.rank(m.ground().without(x)) < m.rank();
}

ElementSet closure(const Matroid& m, ElementSet s) {
  const int r = m.rank(s);
  ElementSet out = s;
  for (Element x : m.ground() - s) {
    if (m.rank(s.with(x)) == r) out.insert(x);
  }
  return out;
}

bool is_flat(const Matroid& m, ElementSet s) { return closure(m, s) == s; }

std::vector<Flat> flats(const Matroid& m) {
  std::vector<Flat> out;
  std::unordered_set<ElementSet> seen;
  std::vector<ElementSet> level{closure(m, ElementSet())};
  seen.insert(level.front());
  int r = 0;
  while (!level.empty()) {
    std::vector<ElementSet> next;
    for (ElementSet f : level) {
      out.push_back({f, r});
      for (Element x : m.ground() - f) {
        const ElementSet g = closure(m, f.with(x));
        if (seen.insert(g).second) next.push_back(g);
      }
    }
    level = std::move(next);
    ++r;
  }
  std::sort(out.begin(), out.end(), [](const Flat& a, const Flat& b) {
    return shortlex_less(a.set, b.set);
  });
  return out;
}

Matroid contract(const Matroid& m, ElementSet s) {
  if (!s.is_subset_of(m.ground())) {
    throw Error("contracted set " + s.to_string() + " leaves the ground set");
  }
  if (s.empty()) return m;
  return Matroid(m.ground() - s, std::make_shared<ContractionOracle>(m, s));
}

Matroid restrict(const Matroid& m, ElementSet s) {
  if (!s.is_subset_of(m.ground())) {
    throw Error("restriction set " + s.to_string() + " leaves the ground set");
  }
  if (s == m.ground()) return m;
  return Matroid(s, std::make_shared<RestrictionOracle>(m));
}

Matroid truncate(const Matroid& m, int k) {
  if (k < 0) throw Error("truncation rank must be nonnegative");
  if (k >= m.rank()) return m;
  return Matroid(m.ground(), std::make_shared<TruncationOracle>(m, k));
}

Matroid quotient_to(const Matroid& m, ElementSet s) {
  if (!s.is_subset_of(m.ground())) {
    throw Error("quotient set " + s.to_string() + " leaves the ground set");
  }
  return contract(m, m.ground() - s);
}

std::vector<ElementSet> independent_sets(const Matroid& m) {
  require_enumerable(m.ground());
  std::vector<ElementSet> out;
  for_each_subset(m.ground(), [&](ElementSet s) {
    if (m.is_independent(s)) out.push_back(s);
  });
  sort_shortlex(out);
  return out;
}

bool equivalent(const Matroid& a, const Matroid& b) {
  if (a.ground() != b.ground()) return false;
  require_enumerable(a.ground());
  bool same = true;
  for_each_subset(a.ground(), [&](ElementSet s) {
    if (same && a.is_independent(s) != b.is_independent(s)) same = false;
  });
  return same;
}

}  // namespace rainbow
