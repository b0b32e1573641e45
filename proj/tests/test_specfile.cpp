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

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "medsim/builtins.hpp"
#include "medsim/errors.hpp"
#include "medsim/specfile.hpp"

using namespace medsim;

TEST_SUITE("specfile") {
  TEST_CASE("parses a distribution with comments and wrapped rows") {
    const std::string text =
        "# simple correlated coin\n"
        "dist \"demo coin\" # the name keeps its spaces\n"
        "alphabet X: 0 1\n"
        "alphabet Y: 0 1\n"
        "pmf:\n"
        "  1/2 0 /\n"
        "  0 1/2\n";
    const SpecFile f = parse_spec(text);
    CHECK(f.kind == SpecFile::Kind::Dist);
    CHECK(f.name == "demo coin");
    REQUIRE(f.dist.has_value());
    CHECK(*f.dist == coin_dist());
    CHECK_FALSE(f.game.has_value());
  }

  TEST_CASE("parses a game") {
    const std::string text =
        "game \"bos\"\n"
        "actions A: M O\n"
        "actions B: M O\n"
        "u1: 2 0 / 0 1\n"
        "u2: 1 0 / 0 2\n";
    const SpecFile f = parse_spec(text);
    CHECK(f.kind == SpecFile::Kind::Game);
    CHECK(f.name == "bos");
    REQUIRE(f.game.has_value());
    const Game& g = *f.game;
    CHECK(g.actions_a().symbol(0) == "M");
    CHECK(g.actions_b().symbol(1) == "O");
    CHECK(g.u1(0, 0) == Rational(2));
    CHECK(g.u1(1, 1) == Rational(1));
    CHECK(g.u2(0, 0) == Rational(1));
    CHECK(g.u2(1, 1) == Rational(2));
  }

  TEST_CASE("renders the canonical form") {
    SpecFile d;
    d.kind = SpecFile::Kind::Dist;
    d.name = "coin";
    d.dist = coin_dist();
    CHECK(render(d) ==
          "dist \"coin\"\n"
          "alphabet X: 0 1\n"
          "alphabet Y: 0 1\n"
          "pmf: 1/2 0 / 0 1/2\n");

    SpecFile g;
    g.kind = SpecFile::Kind::Game;
    g.name = "bos";
    g.game = bos_game();
    CHECK(render(g) ==
          "game \"bos\"\n"
          "actions A: M O\n"
          "actions B: M O\n"
          "u1: 2 0 / 0 1\n"
          "u2: 1 0 / 0 2\n");
  }

  TEST_CASE("round trips through render and parse") {
    const std::string sources[] = {
        "dist \"block\"\n"
        "alphabet X: a1 a2 a3\n"
        "alphabet Y: b1 b2 b3\n"
        "pmf: 1/8 1/8 0 / 1/8 1/8 0 / 0 0 1/2\n",
        "game \"chicken of sorts\"\n"
        "actions A: C D\n"
        "actions B: C D\n"
        "u1: 4 1 / 5 0\n"
        "u2: 4 5 / 1 0\n",
    };
    for (const std::string& src : sources) {
      CAPTURE(src);
      const SpecFile f = parse_spec(src);
      const std::string once = render(f);
      const SpecFile g = parse_spec(once);
      CHECK(render(g) == once);
      CHECK(g.kind == f.kind);
      CHECK(g.name == f.name);
      if (f.dist) CHECK(*g.dist == *f.dist);
    }
  }

  TEST_CASE("a quoted name may contain the comment character") {
    const SpecFile f = parse_spec(
        "dist \"a # b\"\n"
        "alphabet X: 0\n"
        "alphabet Y: 0\n"
        "pmf: 1\n");
    CHECK(f.name == "a # b");
  }

  TEST_CASE("syntax errors carry the line and column") {
    CHECK_THROWS_WITH_AS(parse_spec("pmf \"x\""),
                         "line 1, col 1: expected 'dist' or 'game', got 'pmf'", SyntaxError);
    CHECK_THROWS_WITH_AS(parse_spec(""), "line 1, col 1: unexpected end of input", SyntaxError);
    CHECK_THROWS_WITH_AS(parse_spec("dist coin"),
                         "line 1, col 6: expected a quoted name, got 'coin'", SyntaxError);
    CHECK_THROWS_WITH_AS(parse_spec("dist \"oops\nalphabet X: 0"),
                         "line 1, col 6: unterminated string", SyntaxError);
    CHECK_THROWS_WITH_AS(parse_spec("dist \"d\"\n"
                                    "alphabet X: 0 1\n"
                                    "alphabet Y: 0 1\n"
                                    "pmf: 1/2 half 0 1/4\n"),
                         "line 4, col 10: 'half' is not a rational number", SyntaxError);
    CHECK_THROWS_WITH_AS(parse_spec("game \"g\" moves A: x"),
                         "line 1, col 10: expected 'actions', got 'moves'", SyntaxError);
    CHECK_THROWS_WITH_AS(parse_spec("dist \"d\" alphabet X:"),
                         "line 1, col 19: empty symbol list after 'alphabet X:'", SyntaxError);
    CHECK_THROWS_WITH_AS(parse_spec("game \"g\"\n"
                                    "actions A: t b\n"
                                    "actions B: l r\n"
                                    "u1: 1 2 / 3 4\n"
                                    "u2: 1 2 /"),
                         "line 5, col 9: empty matrix row in 'u2:'", SyntaxError);
  }

  TEST_CASE("semantic errors from the parsed objects pass through") {
    CHECK_THROWS_AS(parse_spec("dist \"off\"\n"
                               "alphabet X: 0 1\n"
                               "alphabet Y: 0 1\n"
                               "pmf: 1/2 0 / 0 1/4\n"),
                    MassNotOne);
    CHECK_THROWS_AS(parse_spec("dist \"shape\"\n"
                               "alphabet X: 0 1\n"
                               "alphabet Y: 0 1\n"
                               "pmf: 1/2 1/2\n"),
                    DimensionMismatch);
    CHECK_THROWS_AS(parse_spec("dist \"dup\"\n"
                               "alphabet X: 0 0\n"
                               "alphabet Y: 0 1\n"
                               "pmf: 1/2 0 / 0 1/2\n"),
                    ValidationError);
  }

  TEST_CASE("loads a file from disk") {
    const std::string path = "tmp_specfile_roundtrip.dist";
    {
      std::ofstream out(path);
      out << "dist \"coin\"\n"
             "alphabet X: 0 1\n"
             "alphabet Y: 0 1\n"
             "pmf: 1/2 0 / 0 1/2\n";
    }
    const SpecFile f = load_spec_file(path);
    CHECK(f.name == "coin");
    CHECK(*f.dist == coin_dist());
    std::remove(path.c_str());

    CHECK_THROWS_WITH_AS(load_spec_file("/no/such/file.dist"),
                         "cannot read '/no/such/file.dist'", ValidationError);
  }
}
