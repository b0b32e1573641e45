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
#include "medsim/builtins.hpp"
#include "medsim/errors.hpp"
#include "medsim/pmf.hpp"

using namespace medsim;

TEST_SUITE("pmf") {
  TEST_CASE("validation") {
    Alphabet ab({"0", "1"});
    CHECK_THROWS_AS(JointPMF::make(ab, ab, {{Rational(1, 2), Rational(1, 2)}}),
                    DimensionMismatch);
    CHECK_THROWS_AS(
        JointPMF::make(ab, ab, {{Rational(3, 2), Rational(-1, 2)}, {Rational(0), Rational(0)}}),
        NegativeMass);
    CHECK_THROWS_AS(
        JointPMF::make(ab, ab, {{Rational(1, 2), Rational(0)}, {Rational(0), Rational(0)}}),
        MassNotOne);
  }

  TEST_CASE("marginals of the block distribution") {
    const JointPMF p = block_dist();
    const auto [px, py] = p.marginals();
    CHECK(px.at("a1") == Rational(1, 4));
    CHECK(px.at("a2") == Rational(1, 4));
    CHECK(px.at("a3") == Rational(1, 2));
    CHECK(py.at("b1") == Rational(1, 4));
    CHECK(py.at("b3") == Rational(1, 2));
  }

  TEST_CASE("product detection is exact") {
    CHECK(is_product(uniform2_dist()));
    CHECK_FALSE(is_product(coin_dist()));
    CHECK_FALSE(is_product(triangle_dist()));
    CHECK_FALSE(is_product(block_dist()));
    // Non-uniform product.
    const JointPMF p = JointPMF::make(
        Alphabet({"0", "1"}), Alphabet({"0", "1"}),
        {{Rational(1, 6), Rational(1, 3)}, {Rational(1, 6), Rational(1, 3)}});
    CHECK(is_product(p));
  }

  TEST_CASE("information measures") {
    CHECK(mutual_information(coin_dist()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mutual_information(uniform2_dist()) == doctest::Approx(0.0).epsilon(1e-12));
    const auto [px, py] = uniform2_dist().marginals();
    CHECK(entropy(px) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entropy(MarginalPMF::point(Alphabet({"a", "b"}), "a")) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(entropy(MarginalPMF::uniform(Alphabet({"a", "b", "c", "d"}))) ==
          doctest::Approx(2.0).epsilon(1e-12));
  }

  TEST_CASE("total variation distance") {
    CHECK(tv_distance(coin_dist(), uniform2_dist()) == Rational(1, 2));
    CHECK(tv_distance(coin_dist(), coin_dist()) == Rational(0));
    CHECK_THROWS_AS(tv_distance(coin_dist(), block_dist()), AlphabetMismatch);
  }

  TEST_CASE("transpose") {
    const JointPMF t = triangle_dist();
    const JointPMF tt = transpose(t);
    CHECK(tt.at("1", "0") == t.at("0", "1"));
    CHECK(tt.at("0", "1") == t.at("1", "0"));
    CHECK(transpose(tt) == t);
    CHECK(transpose(block_dist()).at("b3", "a3") == Rational(1, 2));
  }

  TEST_CASE("point and uniform marginals") {
    const MarginalPMF p = MarginalPMF::point(Alphabet({"x", "y", "z"}), "y");
    CHECK(p.at("y") == Rational(1));
    CHECK(p.at("x") == Rational(0));
    const MarginalPMF u = MarginalPMF::uniform(Alphabet({"x", "y", "z"}));
    CHECK(u.at(0) == Rational(1, 3));
    CHECK(u.at(2) == Rational(1, 3));
  }
}
