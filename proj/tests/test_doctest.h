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

// doctest with readable element sets in failure messages.

#ifndef RAINBOW_TESTS_TEST_DOCTEST_H_
#define RAINBOW_TESTS_TEST_DOCTEST_H_

#include "doctest.h"
#include "rainbow/element_set.h"

namespace doctest {
template <>
struct StringMaker<rainbow::ElementSet> {
  static String convert(rainbow::ElementSet s) { return s.to_string().c_str(); }
};
}  // namespace doctest

#endif  // RAINBOW_TESTS_TEST_DOCTEST_H_
