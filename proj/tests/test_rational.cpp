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

#include "doctest.h"
#include "medsim/errors.hpp"
#include "medsim/rational.hpp"

using medsim::BigInt;
using medsim::Rational;

TEST_SUITE("rational") {
  TEST_CASE("parse and canonical form") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-2") == Rational(-2));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK(Rational::parse("4/6").str() == "2/3");
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational(7).str() == "7");
    CHECK_THROWS_AS(Rational::parse("1/0"), medsim::SyntaxError);
    CHECK_THROWS_AS(Rational::parse("0.5"), medsim::SyntaxError);
    CHECK_THROWS_AS(Rational::parse("a/b"), medsim::SyntaxError);
    CHECK_THROWS_AS(Rational::parse(""), medsim::SyntaxError);
    CHECK_THROWS_AS(Rational::parse("1/"), medsim::SyntaxError);
  }

  TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
    CHECK(Rational(1) - Rational(1, 3) - Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(Rational(-1, 2).abs() == Rational(1, 2));
    CHECK(Rational(1, 3).sign() == 1);
    CHECK(Rational(-1, 3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    // A sum that drifts in floating point stays exact here.
    Rational acc(0);
    for (int i = 0; i < 10; ++i) acc += Rational(1, 10);
    CHECK(acc == Rational(1));
  }

  TEST_CASE("comparisons") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(5, 3) > Rational(3, 2));
  }

  TEST_CASE("large values do not overflow") {
    Rational big = Rational(1);
    for (int i = 0; i < 40; ++i) big *= Rational(1000000);
    CHECK(big > Rational(0));
    CHECK(big * Rational(1) / big == Rational(1));
  }

  TEST_CASE("common denominator") {
    std::vector<Rational> xs = {Rational(1, 2), Rational(1, 3), Rational(1, 4)};
    CHECK(medsim::common_denominator(xs.begin(), xs.end()) == BigInt(12));
    std::vector<Rational> ints = {Rational(2), Rational(5)};
    CHECK(medsim::common_denominator(ints.begin(), ints.end()) == BigInt(1));
  }

  TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), medsim::MalformedLP);
  }

  TEST_CASE("to_double on simple fractions") {
    CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(Rational(-1, 4).to_double() == doctest::Approx(-0.25).epsilon(1e-15));
  }
}
