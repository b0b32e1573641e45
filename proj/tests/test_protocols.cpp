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
#include "medsim/protocols.hpp"
#include "medsim/verify.hpp"

using namespace medsim;

namespace {

ExecutionTree honest_tree(const ProtocolSpec& spec) {
  return enumerate_executions(*spec.party_a, *spec.party_b, spec.phases, spec.mode);
}

// Output marginal of the honest side under one deviating strategy.
MarginalPMF honest_marginal(const ProtocolSpec& spec, const AdversaryStrategy& adv) {
  const JointPMF joint = attack_joint(spec, adv);
  return adv.side_a ? joint.marginals().second : joint.marginals().first;
}

const MarginalPMF kUniformBit = MarginalPMF::uniform(Alphabet({"0", "1"}));

}  // namespace

TEST_SUITE("protocols") {
  TEST_CASE("simultaneous coin is robust to every one-round behavior") {
    const ProtocolSpec spec = xor_coin_spec();
    for (const bool side_a : {true, false}) {
      const auto behaviors = one_round_bit_behaviors(spec, side_a);
      CHECK(behaviors.size() == 12);
      for (const AdversaryStrategy& adv : behaviors)
        CHECK(honest_marginal(spec, adv) == kUniformBit);
      for (const char* kind : {"abort:1", "bit-fix:0", "bit-fix:1"})
        CHECK(honest_marginal(spec, make_adversary(spec, side_a, kind)) == kUniformBit);
    }
  }

  TEST_CASE("joint uniform sampler is exact for every modulus") {
    for (int d = 1; d <= 16; ++d) {
      CAPTURE(d);
      const ProtocolSpec spec = joint_uniform_spec(d);
      const ExecutionTree t = honest_tree(spec);
      CHECK(t.tail_mass == Rational(0));
      CHECK(output_joint(t, spec.target.alphabet_x(), spec.target.alphabet_y()) == spec.target);
      int k = 0;
      while ((1 << k) < d) ++k;
      if ((1 << k) == d) {
        CHECK(t.loop_annotations.empty());
      } else {
        REQUIRE(t.loop_annotations.size() == 1);
        CHECK(t.loop_annotations[0].acceptance_probability == Rational(d, 1 << k));
      }
    }
    CHECK_THROWS_AS(joint_uniform_spec(0), ValidationError);
  }

  TEST_CASE("label-first sampler requires separability") {
    CHECK_THROWS_AS(mediator_sampler(triangle_dist()), NotSeparable);
    CHECK_THROWS_AS(mediator_sampler(cod_ce_dist()), NotSeparable);
  }

  TEST_CASE("label-first sampler reproduces separable targets exactly") {
    for (const char* name : {"mediator-coin", "mediator-block", "mediator-bos-diag"}) {
      CAPTURE(name);
      const ProtocolSpec spec = builtin_protocol(name);
      const ExecutionTree t = honest_tree(spec);
      CHECK(t.loop_annotations.empty());  // two components of mass 1/2 need one bit
      CHECK(output_joint(t, spec.target.alphabet_x(), spec.target.alphabet_y()) == spec.target);
      for (const Leaf& l : t.leaves)
        CHECK(replay_consistent(l, *spec.party_a, *spec.party_b, spec.phases, spec.mode));
    }
    const ExecutionTree coin = honest_tree(builtin_protocol("mediator-coin"));
    CHECK(coin.leaves.size() == 4);  // two bit pairs, then point-mass draws
  }

  TEST_CASE("label-first sampler with unequal component masses loops") {
    const JointPMF biased = JointPMF::make(Alphabet({"0", "1"}), Alphabet({"0", "1"}),
                                           {{Rational(1, 3), 0}, {0, Rational(2, 3)}});
    const ProtocolSpec spec = mediator_sampler(biased);
    const ExecutionTree t = honest_tree(spec);
    REQUIRE(t.loop_annotations.size() == 1);
    CHECK(t.loop_annotations[0].acceptance_probability == Rational(3, 4));
    CHECK(output_joint(t, spec.target.alphabet_x(), spec.target.alphabet_y()) == biased);
  }

  TEST_CASE("two-move coin flip loses its coin to the second mover") {
    const ProtocolSpec spec = naive_polite_coinflip();
    CHECK(output_joint(honest_tree(spec), spec.target.alphabet_x(), spec.target.alphabet_y()) ==
          coin_dist());
    for (const char* target : {"0", "1"}) {
      const AdversaryStrategy adv =
          make_adversary(spec, false, std::string("bit-fix:") + target);
      const JointPMF joint = attack_joint(spec, adv);
      // The honest first mover's output collapses to the fixed bit.
      CHECK(joint.alphabet_x().size() == 1);
      CHECK(joint.alphabet_x().symbol(0) == target);
      CHECK(joint.marginals().first.at(target) == Rational(1));
    }
    // The first mover cannot fix the coin: it commits before seeing anything.
    for (const char* target : {"0", "1"}) {
      const AdversaryStrategy adv =
          make_adversary(spec, true, std::string("bit-fix:") + target);
      CHECK(honest_marginal(spec, adv) == kUniformBit);
    }
  }

  TEST_CASE("agreement coin from a partition of components") {
    const ProtocolSpec spec = coin_map(block_dist(), {"w1"});
    const ExecutionTree t = honest_tree(spec);
    Rational agree = 0;
    for (const Leaf& l : t.leaves)
      if (l.output_a == l.output_b) agree += l.probability;
    CHECK(agree == Rational(1));
    CHECK(output_joint(t, spec.target.alphabet_x(), spec.target.alphabet_y()) == coin_dist());
  }

  TEST_CASE("partition coin bias is the class mass") {
    const JointPMF biased = JointPMF::make(Alphabet({"0", "1"}), Alphabet({"0", "1"}),
                                           {{Rational(1, 3), 0}, {0, Rational(2, 3)}});
    const ProtocolSpec spec = coin_map(biased, {"w1"});
    const JointPMF out =
        output_joint(honest_tree(spec), spec.target.alphabet_x(), spec.target.alphabet_y());
    CHECK(out.at("1", "1") == Rational(2, 3));
    CHECK(out.at("0", "0") == Rational(1, 3));
    // Withholding every message leaves the honest side's coin untouched.
    for (const bool side_a : {true, false}) {
      const MarginalPMF m = honest_marginal(spec, make_adversary(spec, side_a, "abort:1"));
      CHECK(m.at("0") == Rational(1, 3));
      CHECK(m.at("1") == Rational(2, 3));
    }
  }

  TEST_CASE("partition classes must be proper and known") {
    CHECK_THROWS_AS(coin_map(block_dist(), {}), EmptyPartitionClass);
    CHECK_THROWS_AS(coin_map(block_dist(), {"w0", "w1"}), EmptyPartitionClass);
    CHECK_THROWS_AS(coin_map(block_dist(), {"w7"}), ValidationError);
    CHECK_THROWS_AS(coin_map(triangle_dist(), {"w0"}), NotSeparable);
  }

  TEST_CASE("draw-and-tell sampler is correct for any target") {
    for (const char* name : {"one-sided-cod-ce", "one-sided-coin"}) {
      CAPTURE(name);
      const ProtocolSpec spec = builtin_protocol(name);
      const ExecutionTree t = honest_tree(spec);
      CHECK(output_joint(t, spec.target.alphabet_x(), spec.target.alphabet_y()) == spec.target);
      for (const Leaf& l : t.leaves)
        CHECK(replay_consistent(l, *spec.party_a, *spec.party_b, spec.phases, spec.mode));
    }
    const ExecutionTree t = honest_tree(builtin_protocol("one-sided-cod-ce"));
    CHECK(t.leaves.size() == 3);  // one leaf per supported cell
  }

  TEST_CASE("draw-and-tell receiver falls back on mangled input") {
    const ProtocolSpec spec = builtin_protocol("one-sided-cod-ce");
    const AdversaryStrategy garbage = make_adversary(spec, true, "custom-table:q;out=D");
    const JointPMF joint = attack_joint(spec, garbage);
    CHECK(joint.marginals().second.at("C") == Rational(1));
    const AdversaryStrategy silent = make_adversary(spec, true, "custom-table:bot;out=D");
    CHECK(attack_joint(spec, silent).marginals().second.at("C") == Rational(1));
  }

  TEST_CASE("adversary grammar") {
    const ProtocolSpec spec = xor_coin_spec();
    CHECK(make_adversary(spec, true, "honest").kind == "honest");
    CHECK(make_adversary(spec, false, "abort:2").side_a == false);
    CHECK_THROWS_AS(make_adversary(spec, true, "frobnicate"), UnknownKind);
    CHECK_THROWS_AS(make_adversary(spec, true, "abort:x"), UnknownKind);
    CHECK_THROWS_AS(make_adversary(spec, true, "abort:0"), UnknownKind);
    CHECK_THROWS_AS(make_adversary(spec, true, "bit-fix:7"), UnknownKind);
    CHECK_THROWS_AS(make_adversary(spec, true, "custom-table:no-out"), UnknownKind);
  }

  TEST_CASE("output remaps") {
    const ProtocolSpec spec = xor_coin_spec();
    const auto family = remap_deviations(spec, true, Alphabet({"0", "1"}));
    CHECK(family.size() == 4);

    const AdversaryStrategy swap =
        remap_deviation(spec, true, {{"0", "1"}, {"1", "0"}});
    CHECK(swap.kind == "remap{0->1,1->0}");
    const JointPMF joint = attack_joint(spec, swap);
    CHECK(joint.at("1", "0") == Rational(1, 2));
    CHECK(joint.at("0", "1") == Rational(1, 2));

    const AdversaryStrategy partial = remap_deviation(spec, true, {{"0", "1"}});
    CHECK_THROWS_AS(attack_joint(spec, partial), ValidationError);
  }

  TEST_CASE("deviation search on the draw-and-tell equilibrium sampler") {
    const Game g = cod_game();
    const ProtocolSpec spec = builtin_protocol("one-sided-cod-ce");
    const auto family = default_rational_family(spec, g);

    const auto [best_a, gain_a] = rational_deviation_search(g, spec, family, true);
    CHECK(best_a.kind == "best-response-to-peer-action");
    CHECK(gain_a == Rational(1, 3));

    const auto [best_b, gain_b] = rational_deviation_search(g, spec, family, false);
    CHECK(gain_b == Rational(0));

    const RationalVerdict v = check_rational(g, spec, family);
    CHECK_FALSE(v.pass);
    CHECK(v.gain_a == Rational(1, 3));
    CHECK(v.gain_b == Rational(0));
  }

  TEST_CASE("deviation search finds nothing against the simultaneous coin") {
    const Game g = match_game();
    const ProtocolSpec spec = xor_coin_spec();
    const auto family = default_rational_family(spec, g);
    const RationalVerdict v = check_rational(g, spec, family);
    CHECK(v.pass);
    CHECK(v.gain_a == Rational(0));
    CHECK(v.gain_b == Rational(0));
  }

  TEST_CASE("deviation search rejects non-equilibrium targets") {
    const JointPMF cc = JointPMF::make(Alphabet({"C", "D"}), Alphabet({"C", "D"}),
                                       {{Rational(1), 0}, {0, 0}});
    const ProtocolSpec spec = one_sided_sampler(cc);
    CHECK_THROWS_AS(
        rational_deviation_search(cod_game(), spec, default_rational_family(spec, cod_game()),
                                  true),
        NotCorrelatedEq);
    const ProtocolSpec xors = xor_coin_spec();
    const auto only_b = remap_deviations(xors, false, Alphabet({"0", "1"}));
    CHECK_THROWS_AS(rational_deviation_search(match_game(), xors, only_b, true),
                    ValidationError);
  }
}
