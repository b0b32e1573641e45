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

#include <cstdint>

#include "doctest.h"
#include "medsim/errors.hpp"
#include "medsim/lp.hpp"
#include "support/oracles.hpp"

using namespace medsim;

namespace {

LinearProgram make_lp(int n, std::vector<Rational> objective,
                      std::vector<LpConstraint> constraints) {
  LinearProgram lp;
  for (int i = 0; i < n; ++i) lp.variables.push_back("x" + std::to_string(i));
  lp.objective = std::move(objective);
  lp.constraints = std::move(constraints);
  return lp;
}

std::vector<Rational> unit(int n, int i, Rational v = Rational(1)) {
  std::vector<Rational> e(n, Rational(0));
  e[i] = v;
  return e;
}

}  // namespace

TEST_SUITE("lp") {
  TEST_CASE("two-variable box") {
    const LinearProgram lp = make_lp(
        2, {Rational(1), Rational(1)},
        {{unit(2, 0), Relation::LessEq, Rational(2)},
         {unit(2, 1), Relation::LessEq, Rational(3)},
         {unit(2, 0), Relation::GreaterEq, Rational(0)},
         {unit(2, 1), Relation::GreaterEq, Rational(0)}});
    const LpSolution s = solve_lp(lp);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.value == Rational(5));
    CHECK(s.assignment == std::vector<Rational>{Rational(2), Rational(3)});
  }

  TEST_CASE("free variable against an equality") {
    // x free, y >= 0, x + y == 1: max x is 1.
    const LinearProgram lp = make_lp(
        2, {Rational(1), Rational(0)},
        {{{Rational(1), Rational(1)}, Relation::Equal, Rational(1)},
         {unit(2, 1), Relation::GreaterEq, Rational(0)}});
    const LpSolution s = solve_lp(lp);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.value == Rational(1));
  }

  TEST_CASE("negative right-hand sides") {
    // max -x subject to x >= 3 expressed as -x <= -3, plus x <= 10.
    const LinearProgram lp = make_lp(
        1, {Rational(-1)},
        {{{Rational(-1)}, Relation::LessEq, Rational(-3)},
         {{Rational(1)}, Relation::LessEq, Rational(10)}});
    const LpSolution s = solve_lp(lp);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.value == Rational(-3));
    CHECK(s.assignment[0] == Rational(3));
  }

  TEST_CASE("infeasible") {
    const LinearProgram lp = make_lp(
        1, {Rational(1)},
        {{{Rational(1)}, Relation::GreaterEq, Rational(2)},
         {{Rational(1)}, Relation::LessEq, Rational(1)}});
    CHECK(solve_lp(lp).status == LpStatus::Infeasible);
  }

  TEST_CASE("unbounded") {
    const LinearProgram lp =
        make_lp(1, {Rational(1)}, {{{Rational(1)}, Relation::GreaterEq, Rational(0)}});
    CHECK(solve_lp(lp).status == LpStatus::Unbounded);
  }

  TEST_CASE("redundant equalities") {
    // The same hyperplane twice; the duplicate row must not break phase 1.
    const LinearProgram lp = make_lp(
        2, {Rational(1), Rational(2)},
        {{{Rational(1), Rational(1)}, Relation::Equal, Rational(1)},
         {{Rational(2), Rational(2)}, Relation::Equal, Rational(2)},
         {unit(2, 0), Relation::GreaterEq, Rational(0)},
         {unit(2, 1), Relation::GreaterEq, Rational(0)}});
    const LpSolution s = solve_lp(lp);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.value == Rational(2));
  }

  TEST_CASE("degenerate pivoting terminates at the optimum") {
    // A classic cycling example for naive pivot rules; the optimum is 1/20
    // at (1/25, 0, 1, 0).
    const int n = 4;
    std::vector<LpConstraint> cs = {
        {{Rational(1, 4), Rational(-60), Rational(-1, 25), Rational(9)},
         Relation::LessEq,
         Rational(0)},
        {{Rational(1, 2), Rational(-90), Rational(-1, 50), Rational(3)},
         Relation::LessEq,
         Rational(0)},
        {unit(n, 2), Relation::LessEq, Rational(1)},
    };
    for (int i = 0; i < n; ++i) cs.push_back({unit(n, i), Relation::GreaterEq, Rational(0)});
    const LinearProgram lp =
        make_lp(n, {Rational(3, 4), Rational(-150), Rational(1, 50), Rational(-6)}, cs);
    const LpSolution s = solve_lp(lp);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.value == Rational(1, 20));
    CHECK(s.assignment ==
          std::vector<Rational>{Rational(1, 25), Rational(0), Rational(1), Rational(0)});
  }

  TEST_CASE("shape errors") {
    LinearProgram lp = make_lp(2, {Rational(1)}, {});
    CHECK_THROWS_AS(solve_lp(lp), MalformedLP);
    lp = make_lp(2, {Rational(1), Rational(1)},
                 {{{Rational(1)}, Relation::LessEq, Rational(1)}});
    CHECK_THROWS_AS(solve_lp(lp), MalformedLP);
  }

  TEST_CASE("matches the vertex-enumeration oracle on simplex programs") {
    // max c.x over the probability simplex, for a few scrambled objectives.
    uint64_t state = 12345;
    const auto next = [&state]() {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      return state >> 33;
    };
    for (int trial = 0; trial < 12; ++trial) {
      const int n = 3 + static_cast<int>(next() % 2);
      std::vector<Rational> c;
      for (int i = 0; i < n; ++i)
        c.push_back(Rational(static_cast<long long>(next() % 19) - 9,
                             static_cast<long long>(next() % 6) + 1));
      std::vector<LpConstraint> cs;
      cs.push_back({std::vector<Rational>(n, Rational(1)), Relation::Equal, Rational(1)});
      for (int i = 0; i < n; ++i) cs.push_back({unit(n, i), Relation::GreaterEq, Rational(0)});
      // A scrambled cap constraint to move the optimum off a plain vertex.
      std::vector<Rational> cap;
      for (int i = 0; i < n; ++i) cap.push_back(Rational(static_cast<long long>(next() % 3)));
      cs.push_back({cap, Relation::LessEq, Rational(3, 4)});

      const LinearProgram lp = make_lp(n, c, cs);
      const LpSolution got = solve_lp(lp);
      const auto want = oracle::vertex_enum_max(lp);
      if (!want) {
        CHECK(got.status == LpStatus::Infeasible);
        continue;
      }
      REQUIRE(got.status == LpStatus::Optimal);
      CHECK(got.value == want->first);
    }
  }
}
