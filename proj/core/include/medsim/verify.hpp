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

#ifndef MEDSIM_VERIFY_HPP
#define MEDSIM_VERIFY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "medsim/engine.hpp"
#include "medsim/errors.hpp"
#include "medsim/game.hpp"
#include "medsim/pmf.hpp"
#include "medsim/protocols.hpp"
#include "medsim/rational.hpp"

namespace medsim {

struct CorrectnessVerdict {
  bool pass = false;
  // First mismatching cell, with the two masses, when pass is false.
  std::optional<std::pair<std::string, std::string>> witness_cell;
  Rational expected = 0;
  Rational got = 0;
};

// Output joint of an honest execution must equal the target cell for cell.
// Throws TailMassNonzero when the tree is truncated.
CorrectnessVerdict check_correctness(const ExecutionTree& tree, const JointPMF& target);

struct SemiHonestVerdict {
  bool pass = false;
  CorrectnessVerdict correctness;
  bool markov_a_ok = false;  // View_A independent of V given U
  bool markov_b_ok = false;  // View_B independent of U given V
  std::string witness;       // first violated factorization, empty when none
  // Conditional mutual information diagnostics in bits; the pass decision
  // never reads these, they only quantify a failure.
  double leak_a_bits = 0.0;
  double leak_b_bits = 0.0;
};

// Honest-execution privacy: each party's whole view must be conditionally
// independent of the peer output given its own output, and the outputs must
// match the target. All factorization checks are exact.
SemiHonestVerdict check_semi_honest(const ExecutionTree& tree, const JointPMF& target);

struct MaliciousVerdict {
  bool feasible = false;
  std::string adversary;  // kind tag, filled by the per-adversary wrapper
  std::string detail;
};

// Decides whether some channel from the deviating party's ideal symbol to its
// real view reproduces the observed (view, honest output) joint. The observed
// joint is always oriented (side A, side B); honest_side_a says which side
// stayed honest. Throws MarginalMismatch when the honest output marginal
// already deviates from the target, unless force_lp runs the program anyway.
MaliciousVerdict check_malicious(const JointPMF& observed, const JointPMF& target,
                                 bool honest_side_a, bool force_lp = false);

// Exact joint of (adversary full view, honest output) for one deviating
// strategy, oriented (side A, side B).
JointPMF adversary_observed_joint(const ProtocolSpec& spec, const AdversaryStrategy& adv);

// adversary_observed_joint piped into check_malicious, with a marginal
// mismatch reported as an infeasibility instead of an exception.
MaliciousVerdict check_malicious_adversary(const ProtocolSpec& spec, const AdversaryStrategy& adv);

// Joint of the two parties' declared outputs under one deviating strategy,
// over the alphabets actually observed in the tree.
JointPMF attack_joint(const ProtocolSpec& spec, const AdversaryStrategy& adv);

struct RationalVerdict {
  bool pass = false;
  std::optional<AdversaryStrategy> best_a, best_b;
  Rational gain_a = 0;
  Rational gain_b = 0;
};

// Best deviation gain on each side over the family; a side with no family
// strategies passes vacuously.
RationalVerdict check_rational(const Game& g, const ProtocolSpec& spec,
                               const std::vector<AdversaryStrategy>& family);

// The deviations every protocol is screened against: honest, first-round
// abort and view output on both sides, plus both bit fixations when the
// protocol exchanges bits.
std::vector<AdversaryStrategy> standard_adversaries(const ProtocolSpec& spec);

struct LemmaFixture {
  ProtocolSpec spec;
  std::optional<Game> game;
};

struct LemmaOutcome {
  std::string name;
  bool all_malicious_feasible = false;
  bool semi_honest_pass = false;
  bool rational_checked = false;  // game present, target is a CE, premise held
  bool rational_pass = false;
};

// Cross-level consistency: whenever every standard adversary is feasible the
// honest execution must also pass the semi-honest check, and with a game
// whose CE is the target the deviation search must come up empty. Throws
// ImplicationViolated otherwise.
std::vector<LemmaOutcome> lemma_implication_suite(const std::vector<LemmaFixture>& fixtures);

struct MaliciousLine {
  std::string adversary;
  bool side_a = false;
  bool feasible = false;
  std::string detail;
};

struct SecurityReport {
  std::string name;
  CorrectnessVerdict correctness;
  SemiHonestVerdict semi_honest;
  std::vector<MaliciousLine> malicious;
  bool malicious_all_feasible = false;
  std::optional<RationalVerdict> rational;  // with a game whose CE is the target
  bool claims_met = false;
};

// Runs every check against the protocol's own claims. A rational claim that
// is scoped to constant-payoff games is only held against such games.
SecurityReport verify_protocol(const ProtocolSpec& spec,
                               const std::optional<Game>& game = std::nullopt);

}  // namespace medsim

#endif  // MEDSIM_VERIFY_HPP
