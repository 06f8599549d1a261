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

#include "rainbow/instance_io.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace rainbow {

ParseError::ParseError(int line, int column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " +
            std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  int column = 1;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  const std::size_t hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  std::size_t i = 0;
  while (i < line.size()) {
    const char ch = line[i];
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      continue;
    }
    if (ch == '{' || ch == '}') {
      out.push_back({std::string(1, ch), static_cast<int>(i) + 1});
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r' && line[i] != '{' && line[i] != '}') {
      ++i;
    }
    out.push_back({std::string(line.substr(start, i - start)),
                   static_cast<int>(start) + 1});
  }
  return out;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int line)
      : tokens_(std::move(tokens)), line_(line) {}

  bool done() const { return pos_ >= tokens_.size(); }
  int line() const { return line_; }
  int column() const {
    return done() ? (tokens_.empty() ? 1 : tokens_.back().column) : tokens_[pos_].column;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_, column(), message);
  }
  [[noreturn]] void fail_at(int column, const std::string& message) const {
    throw ParseError(line_, column, message);
  }

  const Token& next(const std::string& what) {
    if (done()) fail("expected " + what);
    return tokens_[pos_++];
  }
  const Token& peek() const { return tokens_[pos_]; }

  void expect(const std::string& literal) {
    const Token& t = next("'" + literal + "'");
    if (t.text != literal) {
      fail_at(t.column, "expected '" + literal + "', found '" + t.text + "'");
    }
  }

  long long parse_int(std::string_view text, int column, const std::string& what) const {
    long long value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (text.empty() || ec != std::errc() || ptr != end) {
      fail_at(column, "expected " + what + ", found '" + std::string(text) + "'");
    }
    return value;
  }

  int next_int(const std::string& what) {
    const Token& t = next(what);
    return static_cast<int>(parse_int(t.text, t.column, what));
  }

  Element element(std::string_view text, int column, int ground_size) const {
    const long long v = parse_int(text, column, "an element id");
    if (v < 0 || v >= ground_size) {
      fail_at(column, "element " + std::to_string(v) + " is outside the ground set");
    }
    return static_cast<Element>(v);
  }

  ElementSet elements_until_end(int ground_size) {
    ElementSet s;
    while (!done()) {
      const Token& t = next("an element");
      s.insert(element(t.text, t.column, ground_size));
    }
    return s;
  }

  // Sequence of "{ e e e }" groups up to the end of the line.
  std::vector<ElementSet> brace_groups(int ground_size) {
    std::vector<ElementSet> groups;
    while (!done()) {
      expect("{");
      ElementSet s;
      while (true) {
        const Token& t = next("'}'");
        if (t.text == "}") break;
        s.insert(element(t.text, t.column, ground_size));
      }
      groups.push_back(s);
    }
    return groups;
  }

  std::string rest_joined() {
    std::string out;
    while (!done()) out += next("").text;
    return out;
  }

  std::string rest_text() const {
    std::string out;
    for (std::size_t i = pos_; i < tokens_.size(); ++i) {
      if (!out.empty()) out += ' ';
      out += tokens_[i].text;
    }
    return out;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int line_;
};

Matroid parse_matroid_tokens(LineParser& p, int ground_size) {
  const Token kind = p.next("a matroid kind");
  const int kind_column = kind.column;
  try {
    if (kind.text == "free") {
      if (!p.done()) p.fail("unexpected token after 'free'");
      return free_matroid(ground_size);
    }
    if (kind.text == "uniform") {
      const int k = p.next_int("a rank");
      if (!p.done()) p.fail("unexpected token after the rank");
      return uniform_matroid(ground_size, k);
    }
    if (kind.text == "partition") {
      const int column = p.column();
      const std::string body = p.rest_joined();
      std::vector<ElementSet> blocks;
      if (!body.empty()) {
        for (std::string_view block : split(body, '|')) {
          ElementSet b;
          if (!block.empty()) {
            for (std::string_view e : split(block, ',')) {
              b.insert(p.element(e, column, ground_size));
            }
          }
          blocks.push_back(b);
        }
      }
      return partition_matroid(ground_size, blocks);
    }
    if (kind.text == "graphic") {
      const int vertices = p.next_int("a vertex count");
      std::vector<GraphEdge> edges;
      const int column = p.column();
      const std::string body = p.rest_joined();
      if (!body.empty()) {
        for (std::string_view e : split(body, ',')) {
          const auto ends = split(e, '-');
          if (ends.size() != 2) {
            p.fail_at(column, "graph edge '" + std::string(e) + "' is not u-v");
          }
          GraphEdge edge;
          edge.u = static_cast<int>(p.parse_int(ends[0], column, "a vertex"));
          edge.v = static_cast<int>(p.parse_int(ends[1], column, "a vertex"));
          edge.id = static_cast<Element>(edges.size());
          edges.push_back(edge);
        }
      }
      if (static_cast<int>(edges.size()) != ground_size) {
        p.fail_at(column, "graphic matroid lists " + std::to_string(edges.size()) +
                              " edges but the ground has " +
                              std::to_string(ground_size));
      }
      return graphic_matroid(vertices, edges);
    }
    if (kind.text == "linear") {
      const int prime = p.next_int("a prime modulus");
      const int column = p.column();
      const std::string body = p.rest_joined();
      std::vector<std::vector<int>> columns;
      if (!body.empty()) {
        for (std::string_view col : split(body, ';')) {
          std::vector<int> values;
          for (std::string_view v : split(col, ',')) {
            values.push_back(static_cast<int>(p.parse_int(v, column, "a residue")));
          }
          columns.push_back(std::move(values));
        }
      }
      if (static_cast<int>(columns.size()) != ground_size) {
        p.fail_at(column, "linear matroid lists " + std::to_string(columns.size()) +
                              " columns but the ground has " +
                              std::to_string(ground_size));
      }
      return linear_matroid(prime, columns);
    }
    if (kind.text == "circuits") {
      return from_circuits(ground_size, p.brace_groups(ground_size));
    }
    if (kind.text == "independent") {
      return from_independent_sets(ground_size, p.brace_groups(ground_size));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    p.fail_at(kind_column, e.what());
  }
  p.fail_at(kind_column, "unknown matroid kind '" + kind.text + "'");
}

std::vector<std::pair<int, std::vector<Token>>> lines_of(std::string_view text) {
  std::vector<std::pair<int, std::vector<Token>>> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = tokenize(text.substr(start, end - start));
    if (!tokens.empty()) out.emplace_back(number, std::move(tokens));
    start = end + 1;
  }
  return out;
}

}  // namespace

Matroid parse_matroid(std::string_view spec, int ground_size) {
  LineParser p(tokenize(spec), 0);
  return parse_matroid_tokens(p, ground_size);
}

InstanceFile parse_instance(std::string_view text) {
  std::optional<int> ground;
  std::optional<Matroid> m;
  std::optional<Matroid> n;
  std::string m_spec;
  std::string n_spec;
  std::vector<ElementSet> sets;
  std::vector<int> set_lines;
  std::optional<int> target;
  int last_line = 1;

  for (auto& [number, tokens] : lines_of(text)) {
    last_line = number;
    LineParser p(std::move(tokens), number);
    const Token head = p.next("a directive");
    if (head.text == "ground") {
      if (ground) p.fail_at(head.column, "duplicate 'ground' line");
      const int g = p.next_int("a ground size");
      if (g < 0 || g > kMaxElements) {
        p.fail_at(head.column, "ground size must be in [0, 64]");
      }
      ground = g;
    } else if (head.text == "matroid") {
      if (!ground) p.fail_at(head.column, "'ground' must come before 'matroid'");
      const Token name = p.next("M or N");
      if (name.text != "M" && name.text != "N") {
        p.fail_at(name.column, "matroid name must be M or N");
      }
      auto& slot = name.text == "M" ? m : n;
      if (slot) p.fail_at(name.column, "duplicate matroid " + name.text);
      (name.text == "M" ? m_spec : n_spec) = p.rest_text();
      slot = parse_matroid_tokens(p, *ground);
    } else if (head.text == "set") {
      if (!ground) p.fail_at(head.column, "'ground' must come before 'set'");
      const int column = p.column();
      const int index = p.next_int("a set index");
      if (index != static_cast<int>(sets.size()) + 1) {
        p.fail_at(column, "expected set " + std::to_string(sets.size() + 1) +
                              ", found set " + std::to_string(index));
      }
      p.expect(":");
      sets.push_back(p.elements_until_end(*ground));
      set_lines.push_back(number);
    } else if (head.text == "target") {
      if (target) p.fail_at(head.column, "duplicate 'target' line");
      const int t = p.next_int("a target size");
      if (t < 0) p.fail_at(head.column, "target must be nonnegative");
      target = t;
    } else {
      p.fail_at(head.column, "unknown directive '" + head.text + "'");
    }
    if (!p.done()) p.fail("unexpected token '" + p.peek().text + "'");
  }

  if (!ground) throw ParseError(last_line, 1, "missing 'ground' line");
  if (!m) throw ParseError(last_line, 1, "missing 'matroid M' line");
  if (!n) throw ParseError(last_line, 1, "missing 'matroid N' line");
  if (!target) throw ParseError(last_line, 1, "missing 'target' line");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (const auto* which : {&*m, &*n}) {
      if (!which->is_independent(sets[i])) {
        throw ParseError(set_lines[i], 1,
                         "set " + std::to_string(i + 1) + " " +
                             sets[i].to_string() + " is not independent in " +
                             (which == &*m ? "M" : "N"));
      }
    }
  }
  return InstanceFile{*ground, m_spec, n_spec,
                      RainbowInstance(*m, *n, std::move(sets), *target)};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

InstanceFile read_instance_file(const std::string& path) {
  return parse_instance(read_text_file(path));
}

namespace {

std::string braces(ElementSet s) {
  std::string out = "{";
  for (Element x : s) out += " " + std::to_string(x);
  return out + " }";
}

std::string plain(ElementSet s) {
  std::string out;
  for (Element x : s) out += " " + std::to_string(x);
  return out;
}

}  // namespace

std::string describe_matroid(const Matroid& m) {
  if (auto native = m.describe()) return *native;
  std::string out = "circuits";
  for (ElementSet c : circuits(m)) out += " " + braces(c);
  return out;
}

std::string serialize_instance(const RainbowInstance& inst) {
  const ElementSet ground = inst.matroid_m().ground();
  if (ground != ElementSet::range(ground.size())) {
    throw Error("only instances on {0..k-1} can be written");
  }
  std::string out = "ground " + std::to_string(ground.size()) + "\n";
  out += "matroid M " + describe_matroid(inst.matroid_m()) + "\n";
  out += "matroid N " + describe_matroid(inst.matroid_n()) + "\n";
  for (std::size_t i = 0; i < inst.sets().size(); ++i) {
    out += "set " + std::to_string(i + 1) + " :" + plain(inst.sets()[i]) + "\n";
  }
  out += "target " + std::to_string(inst.target()) + "\n";
  return out;
}

ComplexFile parse_complex_file(std::string_view text) {
  std::optional<int> ground;
  std::optional<bool> hypergraph_kind;
  std::vector<ElementSet> edges;
  std::vector<ElementSet> facets;
  int last_line = 1;
  for (auto& [number, tokens] : lines_of(text)) {
    last_line = number;
    LineParser p(std::move(tokens), number);
    const Token head = p.next("a directive");
    if (head.text == "ground") {
      if (ground) p.fail_at(head.column, "duplicate 'ground' line");
      const int g = p.next_int("a ground size");
      if (g < 0 || g > kMaxElements) {
        p.fail_at(head.column, "ground size must be in [0, 64]");
      }
      ground = g;
    } else if (head.text == "kind") {
      const Token k = p.next("hypergraph or complex");
      if (k.text != "hypergraph" && k.text != "complex") {
        p.fail_at(k.column, "kind must be hypergraph or complex");
      }
      hypergraph_kind = k.text == "hypergraph";
    } else if (head.text == "edge" || head.text == "facet") {
      if (!ground) p.fail_at(head.column, "'ground' must come first");
      const bool is_edge = head.text == "edge";
      if (hypergraph_kind && *hypergraph_kind != is_edge) {
        p.fail_at(head.column, "'" + head.text + "' does not match the file kind");
      }
      hypergraph_kind = is_edge;
      (is_edge ? edges : facets).push_back(p.elements_until_end(*ground));
    } else {
      p.fail_at(head.column, "unknown directive '" + head.text + "'");
    }
    if (!p.done()) p.fail("unexpected token '" + p.peek().text + "'");
  }
  if (!ground) throw ParseError(last_line, 1, "missing 'ground' line");
  ComplexFile file;
  const ElementSet g = ElementSet::range(*ground);
  file.is_hypergraph = hypergraph_kind.value_or(true);
  if (file.is_hypergraph) {
    file.hypergraph = Hypergraph(g, std::move(edges));
    file.complex = independence_complex(file.hypergraph);
  } else {
    file.complex = SimplicialComplex(g, std::move(facets));
  }
  return file;
}

ComplexFile read_complex_file(const std::string& path) {
  return parse_complex_file(read_text_file(path));
}

std::string serialize_hypergraph(const Hypergraph& h) {
  const ElementSet g = h.ground();
  std::string out = "ground " + std::to_string(g.empty() ? 0 : g.max() + 1) + "\n";
  out += "kind hypergraph\n";
  for (ElementSet e : h.edges()) out += "edge" + plain(e) + "\n";
  return out;
}

std::string serialize_complex(const SimplicialComplex& c) {
  const ElementSet g = c.ground();
  std::string out = "ground " + std::to_string(g.empty() ? 0 : g.max() + 1) + "\n";
  out += "kind complex\n";
  for (ElementSet f : c.facets()) out += "facet" + plain(f) + "\n";
  return out;
}

}  // namespace rainbow
