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

#include <cmath>
#include <memory>

#include "doctest.h"
#include "medsim/builtins.hpp"
#include "medsim/errors.hpp"
#include "medsim/verify.hpp"

using namespace medsim;

namespace {

ExecutionTree honest_tree(const ProtocolSpec& spec) {
  return enumerate_executions(*spec.party_a, *spec.party_b, spec.phases, spec.mode);
}

class SilentBitParty : public Party {
 public:
  std::vector<Branch> act(const PartyView&, const RoundInfo&) const override {
    return {{"0", std::nullopt, Rational(1, 2)}, {"1", std::nullopt, Rational(1, 2)}};
  }
  std::string finalize(const PartyView& v) const override { return v.events.back().choice; }
};

// Claims a common coin but the parties never communicate, so the outputs are
// independent. Every standard adversary is trivially simulatable, which makes
// the correctness failure an implication violation.
ProtocolSpec broken_independent_spec() {
  return {"broken-independent",
          coin_dist(),
          std::make_shared<SilentBitParty>(),
          std::make_shared<SilentBitParty>(),
          {Phase{1, RoundKind::Silent, false, nullptr}},
          ChannelMode::CheapTalk,
          {SecurityClaim::Correct},
          /*bit_messages=*/false,
          /*first_mover_draws_cell=*/false};
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("correctness verdicts") {
    const ProtocolSpec spec = xor_coin_spec();
    const ExecutionTree t = honest_tree(spec);
    CHECK(check_correctness(t, coin_dist()).pass);

    const CorrectnessVerdict v = check_correctness(t, uniform2_dist());
    CHECK_FALSE(v.pass);
    REQUIRE(v.witness_cell.has_value());
    CHECK(*v.witness_cell == std::pair<std::string, std::string>{"0", "0"});
    CHECK(v.expected == Rational(1, 4));
    CHECK(v.got == Rational(1, 2));

    const ProtocolSpec u3 = builtin_protocol("uniform3");
    EnumerateOptions opts;
    opts.collapse_retry_loops = false;
    opts.retry_cap = 3;
    const ExecutionTree truncated =
        enumerate_executions(*u3.party_a, *u3.party_b, u3.phases, u3.mode, opts);
    CHECK_THROWS_AS(check_correctness(truncated, u3.target), TailMassNonzero);
  }

  TEST_CASE("honest executions of the secure samplers keep conditional privacy") {
    for (const char* name :
         {"xor-coin", "uniform3", "mediator-block", "mediator-bos-diag", "one-sided-coin"}) {
      CAPTURE(name);
      const ProtocolSpec spec = builtin_protocol(name);
      const SemiHonestVerdict v = check_semi_honest(honest_tree(spec), spec.target);
      CHECK(v.pass);
      CHECK(v.markov_a_ok);
      CHECK(v.markov_b_ok);
      CHECK(v.witness.empty());
      CHECK(v.leak_a_bits < 1e-12);
      CHECK(v.leak_b_bits < 1e-12);
    }
    // A product target needs no communication at all.
    const ProtocolSpec indep = mediator_sampler(uniform2_dist());
    CHECK(indep.phases.size() == 1);
    CHECK(indep.phases[0].kind == RoundKind::Silent);
    CHECK(check_semi_honest(honest_tree(indep), indep.target).pass);
  }

  TEST_CASE("draw-and-tell leaks the peer symbol to the drawing side") {
    const ProtocolSpec spec = builtin_protocol("one-sided-cod-ce");
    const SemiHonestVerdict v = check_semi_honest(honest_tree(spec), spec.target);
    CHECK(v.correctness.pass);
    CHECK_FALSE(v.pass);
    CHECK_FALSE(v.markov_a_ok);
    CHECK(v.markov_b_ok);
    CHECK(v.witness.rfind("side A", 0) == 0);
    // The drawing side knows the peer symbol outright: two thirds of a bit
    // beyond what its own output already tells it.
    CHECK(std::abs(v.leak_a_bits - 2.0 / 3.0) < 1e-9);
    CHECK(v.leak_b_bits < 1e-12);
  }

  TEST_CASE("standard adversaries are simulatable against the simultaneous coin") {
    const ProtocolSpec spec = xor_coin_spec();
    const auto advs = standard_adversaries(spec);
    CHECK(advs.size() == 10);  // honest, abort, view dump, both bit fixes, per side
    for (const AdversaryStrategy& adv : advs) {
      CAPTURE(adv.kind);
      CAPTURE(adv.side_a);
      CHECK(check_malicious_adversary(spec, adv).feasible);
    }
  }

  TEST_CASE("view dumps separate the label-first from the draw-and-tell sampler") {
    const ProtocolSpec med = builtin_protocol("mediator-coin");
    CHECK(check_malicious_adversary(med, make_adversary(med, true, "view-output")).feasible);
    CHECK(check_malicious_adversary(med, make_adversary(med, false, "view-output")).feasible);

    const ProtocolSpec os = builtin_protocol("one-sided-cod-ce");
    const MaliciousVerdict alice =
        check_malicious_adversary(os, make_adversary(os, true, "view-output"));
    CHECK_FALSE(alice.feasible);
    CHECK(alice.detail == "no channel reproduces the observed joint");
    CHECK(check_malicious_adversary(os, make_adversary(os, false, "view-output")).feasible);
    // Even the honest drawing side cannot be simulated: its real view already
    // holds the peer symbol.
    CHECK_FALSE(check_malicious_adversary(os, make_adversary(os, true, "honest")).feasible);
  }

  TEST_CASE("an output marginal shift is flagged before the channel search") {
    const ProtocolSpec spec = naive_polite_coinflip();
    const AdversaryStrategy adv = make_adversary(spec, false, "bit-fix:0");

    const MaliciousVerdict v = check_malicious_adversary(spec, adv);
    CHECK_FALSE(v.feasible);
    CHECK(v.detail.find("marginal") != std::string::npos);

    const JointPMF observed = adversary_observed_joint(spec, adv);
    CHECK_THROWS_AS(check_malicious(observed, spec.target, true), MarginalMismatch);
    const MaliciousVerdict forced = check_malicious(observed, spec.target, true, true);
    CHECK_FALSE(forced.feasible);
    CHECK(forced.detail == "honest output marginal deviates from the target");
  }

  TEST_CASE("output-only views are always simulatable") {
    CHECK(check_malicious(coin_dist(), coin_dist(), false).feasible);
    CHECK(check_malicious(coin_dist(), coin_dist(), true).feasible);
    CHECK(check_malicious(uniform2_dist(), uniform2_dist(), false).feasible);
    CHECK_THROWS_AS(check_malicious(coin_dist(), bos_diag_dist(), false), AlphabetMismatch);
  }

  TEST_CASE("deviation search scoped to a constant-payoff game") {
    const ProtocolSpec spec = builtin_protocol("one-sided-cod-ce");
    const Game flat = constant_game();
    const RationalVerdict v = check_rational(flat, spec, default_rational_family(spec, flat));
    CHECK(v.pass);
    CHECK(v.gain_a == Rational(0));
    CHECK(v.gain_b == Rational(0));
  }

  TEST_CASE("implications across security levels hold on the stock fixtures") {
    const std::vector<LemmaFixture> fixtures{
        {builtin_protocol("xor-coin"), match_game()},
        {builtin_protocol("mediator-coin"), match_game()},
        {builtin_protocol("mediator-bos-diag"), bos_game()},
        {builtin_protocol("uniform3"), std::nullopt},
        {builtin_protocol("one-sided-cod-ce"), cod_game()},
        {builtin_protocol("naive-polite-coinflip"), std::nullopt},
    };
    const auto outcomes = lemma_implication_suite(fixtures);
    REQUIRE(outcomes.size() == 6);
    for (int i : {0, 1, 2}) {
      CAPTURE(outcomes[i].name);
      CHECK(outcomes[i].all_malicious_feasible);
      CHECK(outcomes[i].semi_honest_pass);
      CHECK(outcomes[i].rational_checked);
      CHECK(outcomes[i].rational_pass);
    }
    CHECK(outcomes[3].all_malicious_feasible);
    CHECK(outcomes[3].semi_honest_pass);
    CHECK_FALSE(outcomes[3].rational_checked);  // no game supplied
    // The one-sided and naive fixtures fail the premise, so nothing is implied.
    CHECK_FALSE(outcomes[4].all_malicious_feasible);
    CHECK_FALSE(outcomes[4].rational_checked);
    CHECK_FALSE(outcomes[5].all_malicious_feasible);
  }

  TEST_CASE("a broken protocol trips the implication check") {
    CHECK_THROWS_AS(lemma_implication_suite({{broken_independent_spec(), std::nullopt}}),
                    ImplicationViolated);
  }

  TEST_CASE("full reports against declared claims") {
    const SecurityReport xr = verify_protocol(xor_coin_spec(), match_game());
    CHECK(xr.claims_met);
    CHECK(xr.correctness.pass);
    CHECK(xr.semi_honest.pass);
    CHECK(xr.malicious.size() == 10);
    CHECK(xr.malicious_all_feasible);
    REQUIRE(xr.rational.has_value());
    CHECK(xr.rational->pass);

    const SecurityReport mb = verify_protocol(builtin_protocol("mediator-block"));
    CHECK(mb.claims_met);
    CHECK(mb.malicious_all_feasible);
    CHECK_FALSE(mb.rational.has_value());

    // Claims only correctness plus rationality under constant payoffs, and
    // exactly those hold; the CE deviation is reported but not claimed away.
    const SecurityReport os = verify_protocol(builtin_protocol("one-sided-cod-ce"), cod_game());
    CHECK(os.claims_met);
    CHECK(os.correctness.pass);
    CHECK_FALSE(os.semi_honest.pass);
    CHECK_FALSE(os.malicious_all_feasible);
    REQUIRE(os.rational.has_value());
    CHECK_FALSE(os.rational->pass);
    CHECK(os.rational->gain_a == Rational(1, 3));

    const SecurityReport osc =
        verify_protocol(builtin_protocol("one-sided-cod-ce"), constant_game());
    CHECK(osc.claims_met);
    REQUIRE(osc.rational.has_value());
    CHECK(osc.rational->pass);

    const SecurityReport np = verify_protocol(naive_polite_coinflip());
    CHECK(np.claims_met);  // only correctness is claimed
    CHECK(np.correctness.pass);
    CHECK_FALSE(np.malicious_all_feasible);
  }

  TEST_CASE("an overclaimed protocol fails its report") {
    ProtocolSpec spec = naive_polite_coinflip();
    spec.claimed_security.insert(SecurityClaim::Malicious);
    const SecurityReport r = verify_protocol(spec);
    CHECK_FALSE(r.claims_met);
    CHECK(r.correctness.pass);
    CHECK_FALSE(r.malicious_all_feasible);
  }
}
