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

// Line-oriented text formats.
//
// Instance file ('#' starts a comment, tokens are whitespace separated):
//
//   ground 4
//   matroid M uniform 2
//   matroid N circuits { 0 1 2 }
//   set 1 : 0
//   set 2 : 0 3
//   target 2
//
// Matroid kinds: free | uniform <k> | partition <b0,b1|b2,...> |
// graphic <vertices> <u-v,...> | linear <p> <c0,c1;c0,c1;...> |
// circuits { .. } { .. } | independent { .. } { .. }
//
// Hypergraph / complex file: "ground <k>", an optional "kind hypergraph" or
// "kind complex" line, then "edge <elements>" or "facet <elements>" lines.

#ifndef RAINBOW_INSTANCE_IO_H_
#define RAINBOW_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include "rainbow/complex.h"
#include "rainbow/matroid.h"
#include "rainbow/rainbow.h"

namespace rainbow {

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct InstanceFile {
  int ground_size = 0;
  std::string m_spec;  // matroid text after "matroid M"
  std::string n_spec;
  RainbowInstance instance;
};

// Parses and validates. Syntax problems, unknown kinds and sets that are not
// independent in M or N raise ParseError pointing at the offending line.
InstanceFile parse_instance(std::string_view text);
InstanceFile read_instance_file(const std::string& path);

// Matroid on {0..ground_size-1} from a kind description such as
// "partition 0,1|2". Throws ParseError (line 0) on malformed text.
Matroid parse_matroid(std::string_view spec, int ground_size);

// Description that parse_matroid accepts; realizations without a native
// description are written as their circuit family.
std::string describe_matroid(const Matroid& m);

// Text that parse_instance turns back into an equivalent instance. The
// ground must be {0..k-1}.
std::string serialize_instance(const RainbowInstance& inst);

struct ComplexFile {
  bool is_hypergraph = true;
  Hypergraph hypergraph;       // when is_hypergraph
  SimplicialComplex complex;   // the complex itself, or I(hypergraph)
};

ComplexFile parse_complex_file(std::string_view text);
ComplexFile read_complex_file(const std::string& path);

std::string serialize_hypergraph(const Hypergraph& h);
std::string serialize_complex(const SimplicialComplex& c);

std::string read_text_file(const std::string& path);

}  // namespace rainbow

#endif  // RAINBOW_INSTANCE_IO_H_
