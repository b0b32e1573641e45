// Copyright 2026 The medsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "medsim/specfile.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "medsim/errors.hpp"

namespace medsim {

namespace {

struct Token {
  std::string text;
  int line = 1;
  int col = 1;
  bool quoted = false;
};

std::string at(const Token& t) {
  return "line " + std::to_string(t.line) + ", col " + std::to_string(t.col);
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  size_t i = 0;
  const auto step = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      step(c);
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') {
        step(text[i]);
        ++i;
      }
      continue;
    }
    Token t{"", line, col, c == '"'};
    if (t.quoted) {
      step(c);
      ++i;
      while (i < text.size() && text[i] != '"' && text[i] != '\n') {
        t.text += text[i];
        step(text[i]);
        ++i;
      }
      if (i == text.size() || text[i] != '"')
        throw SyntaxError(at(t) + ": unterminated string");
      step(text[i]);
      ++i;
    } else {
      while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' &&
             text[i] != '\n' && text[i] != '#') {
        t.text += text[i];
        step(text[i]);
        ++i;
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool done() const { return pos_ >= tokens_.size(); }

  const Token& peek() const {
    if (done()) throw SyntaxError(end_location() + ": unexpected end of input");
    return tokens_[pos_];
  }

  Token next() {
    const Token& t = peek();
    ++pos_;
    return t;
  }

  void expect(const std::string& word) {
    const Token t = next();
    if (t.quoted || t.text != word)
      throw SyntaxError(at(t) + ": expected '" + word + "', got '" + t.text + "'");
  }

  std::string end_location() const {
    if (tokens_.empty()) return "line 1, col 1";
    return at(tokens_.back());
  }

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

std::string quoted_name(Parser& p) {
  const Token t = p.next();
  if (!t.quoted) throw SyntaxError(at(t) + ": expected a quoted name, got '" + t.text + "'");
  return t.text;
}

std::vector<std::string> symbols_until(Parser& p, const std::set<std::string>& stops,
                                       const std::string& section) {
  std::vector<std::string> out;
  while (!p.done() && !stops.count(p.peek().text)) out.push_back(p.next().text);
  if (out.empty()) throw SyntaxError(p.end_location() + ": empty symbol list after '" + section + "'");
  return out;
}

std::vector<std::vector<Rational>> matrix_until(Parser& p, const std::set<std::string>& stops,
                                                const std::string& section) {
  std::vector<std::vector<Rational>> rows{{}};
  while (!p.done() && !stops.count(p.peek().text)) {
    const Token t = p.next();
    if (!t.quoted && t.text == "/") {
      rows.emplace_back();
      continue;
    }
    try {
      rows.back().push_back(Rational::parse(t.text));
    } catch (const Error&) {
      throw SyntaxError(at(t) + ": '" + t.text + "' is not a rational number");
    }
  }
  for (const auto& r : rows)
    if (r.empty())
      throw SyntaxError(p.end_location() + ": empty matrix row in '" + section + "'");
  return rows;
}

}  // namespace

SpecFile parse_spec(const std::string& text) {
  Parser p(tokenize(text));
  const Token head = p.next();
  SpecFile f;
  if (!head.quoted && head.text == "dist") {
    f.kind = SpecFile::Kind::Dist;
    f.name = quoted_name(p);
    p.expect("alphabet");
    p.expect("X:");
    const auto xs = symbols_until(p, {"alphabet"}, "alphabet X:");
    p.expect("alphabet");
    p.expect("Y:");
    const auto ys = symbols_until(p, {"pmf:"}, "alphabet Y:");
    p.expect("pmf:");
    f.dist = JointPMF::make(Alphabet(xs), Alphabet(ys), matrix_until(p, {}, "pmf:"));
  } else if (!head.quoted && head.text == "game") {
    f.kind = SpecFile::Kind::Game;
    f.name = quoted_name(p);
    p.expect("actions");
    p.expect("A:");
    const auto as = symbols_until(p, {"actions"}, "actions A:");
    p.expect("actions");
    p.expect("B:");
    const auto bs = symbols_until(p, {"u1:"}, "actions B:");
    p.expect("u1:");
    const auto u1 = matrix_until(p, {"u2:"}, "u1:");
    p.expect("u2:");
    const auto u2 = matrix_until(p, {}, "u2:");
    f.game = Game(Alphabet(as), Alphabet(bs), u1, u2);
  } else {
    throw SyntaxError(at(head) + ": expected 'dist' or 'game', got '" + head.text + "'");
  }
  if (!p.done()) throw SyntaxError(at(p.peek()) + ": trailing input '" + p.peek().text + "'");
  return f;
}

namespace {

void render_symbols(std::ostringstream& os, const Alphabet& a) {
  for (int i = 0; i < a.size(); ++i) os << ' ' << a.symbol(i);
  os << '\n';
}

template <typename Cell>
void render_matrix(std::ostringstream& os, int rows, int cols, Cell cell) {
  for (int i = 0; i < rows; ++i) {
    if (i > 0) os << " /";
    for (int j = 0; j < cols; ++j) os << ' ' << cell(i, j).str();
  }
  os << '\n';
}

}  // namespace

std::string render(const SpecFile& f) {
  std::ostringstream os;
  if (f.kind == SpecFile::Kind::Dist) {
    const JointPMF& d = *f.dist;
    os << "dist \"" << f.name << "\"\n";
    os << "alphabet X:";
    render_symbols(os, d.alphabet_x());
    os << "alphabet Y:";
    render_symbols(os, d.alphabet_y());
    os << "pmf:";
    render_matrix(os, d.alphabet_x().size(), d.alphabet_y().size(),
                  [&d](int i, int j) { return d.at(i, j); });
  } else {
    const Game& g = *f.game;
    os << "game \"" << f.name << "\"\n";
    os << "actions A:";
    render_symbols(os, g.actions_a());
    os << "actions B:";
    render_symbols(os, g.actions_b());
    os << "u1:";
    render_matrix(os, g.actions_a().size(), g.actions_b().size(),
                  [&g](int i, int j) { return g.u1(i, j); });
    os << "u2:";
    render_matrix(os, g.actions_a().size(), g.actions_b().size(),
                  [&g](int i, int j) { return g.u2(i, j); });
  }
  return os.str();
}

SpecFile load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

}  // namespace medsim
