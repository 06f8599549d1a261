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

#include "rainbow/element_set.h"

#include <algorithm>

namespace rainbow {

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Element x : *this) {
    if (!first) out += ' ';
    out += std::to_string(x);
    first = false;
  }
  out += '}';
  return out;
}

bool shortlex_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  // Equal sizes: the first differing position in the sorted lists decides,
  // and that is where the smallest element of the symmetric difference sits.
  const ElementSet diff = (a - b) | (b - a);
  return a.contains(diff.min());
}

void sort_shortlex(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), shortlex_less);
}

}  // namespace rainbow
