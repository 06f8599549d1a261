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

#include "rainbow/homology.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace rainbow {

std::int64_t EtaValue::value() const {
  if (infinite_) throw Error("eta value is infinite");
  return value_;
}

std::string EtaValue::to_string() const {
  return infinite_ ? "inf" : std::to_string(value_);
}

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
  return out;
}
std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
  return out;
}
std::int64_t abs_gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
BigInt abs_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

// Column reduction over the integers. Each step replaces the working column
// by a*col - b*pivot with a != 0, which keeps the span of every prefix of
// columns fixed, and then divides out the content to keep entries small.
template <typename Int>
int reduce_rank(const std::vector<SparseColumn>& columns) {
  using Column = std::vector<std::pair<int, Int>>;
  std::unordered_map<int, Column> pivots;
  int rank = 0;
  Column merged;
  for (const SparseColumn& raw : columns) {
    Column col;
    col.reserve(raw.size());
    for (const auto& [row, v] : raw) {
      if (v != 0) col.emplace_back(row, Int(v));
    }
    while (!col.empty()) {
      auto it = pivots.find(col.back().first);
      if (it == pivots.end()) {
        pivots.emplace(col.back().first, std::move(col));
        ++rank;
        break;
      }
      const Column& pivot = it->second;
      Int a = pivot.back().second;
      Int b = col.back().second;
      const Int g = abs_gcd(a, b);
      a /= g;
      b /= g;
      merged.clear();
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < col.size() || j < pivot.size()) {
        if (j == pivot.size() ||
            (i < col.size() && col[i].first < pivot[j].first)) {
          merged.emplace_back(col[i].first, mul(a, col[i].second));
          ++i;
        } else if (i == col.size() || pivot[j].first < col[i].first) {
          merged.emplace_back(pivot[j].first, sub(Int(0), mul(b, pivot[j].second)));
          ++j;
        } else {
          Int v = sub(mul(a, col[i].second), mul(b, pivot[j].second));
          if (v != 0) merged.emplace_back(col[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      Int content = 0;
      for (const auto& entry : merged) content = abs_gcd(content, entry.second);
      if (content > 1) {
        for (auto& entry : merged) entry.second /= content;
      }
      col.swap(merged);
    }
  }
  return rank;
}

}  // namespace

int exact_rank(const std::vector<SparseColumn>& columns) {
  try {
    return reduce_rank<std::int64_t>(columns);
  } catch (const Overflow&) {
    return reduce_rank<BigInt>(columns);
  }
}

std::vector<SparseColumn> boundary_columns(const std::vector<ElementSet>& upper,
                                           const std::vector<ElementSet>& lower) {
  std::unordered_map<ElementSet, int> index;
  index.reserve(lower.size());
  for (std::size_t i = 0; i < lower.size(); ++i) {
    index.emplace(lower[i], static_cast<int>(i));
  }
  std::vector<SparseColumn> columns;
  columns.reserve(upper.size());
  for (ElementSet face : upper) {
    SparseColumn col;
    int position = 0;
    for (Element x : face) {
      auto it = index.find(face.without(x));
      if (it == index.end()) {
        throw Error("face " + face.without(x).to_string() +
                    " missing from the lower level");
      }
      col.emplace_back(it->second, position % 2 == 0 ? 1 : -1);
      ++position;
    }
    std::sort(col.begin(), col.end());
    columns.push_back(std::move(col));
  }
  return columns;
}

namespace {

// Ranks of boundary maps out of each face level, computed on demand.
class BoundaryRanks {
 public:
  explicit BoundaryRanks(const std::vector<std::vector<ElementSet>>& levels)
      : levels_(levels), ranks_(levels.size() + 1) {}

  // Rank of the map from level j to level j-1; zero outside 1..top.
  int rank(std::size_t j) {
    if (j == 0 || j >= levels_.size()) return 0;
    if (!ranks_[j]) {
      ranks_[j] = exact_rank(boundary_columns(levels_[j], levels_[j - 1]));
    }
    return *ranks_[j];
  }

  // Reduced Betti number in degree j-1.
  int betti_at_level(std::size_t j) {
    return static_cast<int>(levels_[j].size()) - rank(j) - rank(j + 1);
  }

 private:
  const std::vector<std::vector<ElementSet>>& levels_;
  std::vector<std::optional<int>> ranks_;
};

}  // namespace

std::vector<int> betti_numbers(const SimplicialComplex& c) {
  if (c.is_void()) return {};
  const auto levels = c.faces();
  BoundaryRanks ranks(levels);
  std::vector<int> out;
  for (std::size_t j = 0; j < levels.size(); ++j) {
    out.push_back(ranks.betti_at_level(j));
  }
  return out;
}

int betti(const SimplicialComplex& c, int k) {
  if (k < -1) throw Error("reduced homology starts in degree -1");
  if (c.is_void() || k > c.dimension()) return 0;
  const auto levels = c.faces();
  BoundaryRanks ranks(levels);
  return ranks.betti_at_level(static_cast<std::size_t>(k + 1));
}

EtaTrace eta_with_betti(const SimplicialComplex& c) {
  EtaTrace trace;
  if (c.is_void()) {
    trace.eta = EtaValue(0);
    return trace;
  }
  const auto levels = c.faces();
  BoundaryRanks ranks(levels);
  for (std::size_t j = 0; j < levels.size(); ++j) {
    const int b = ranks.betti_at_level(j);
    trace.betti_prefix.push_back(b);
    if (b != 0) {
      trace.eta = EtaValue(static_cast<std::int64_t>(j));
      return trace;
    }
  }
  trace.eta = EtaValue::infinity();
  return trace;
}

EtaValue eta(const SimplicialComplex& c) {
  if (c.is_void()) return EtaValue(0);
  if (cone_apex(c)) return EtaValue::infinity();
  return eta_with_betti(c).eta;
}

}  // namespace rainbow
