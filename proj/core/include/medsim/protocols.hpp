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

#ifndef MEDSIM_PROTOCOLS_HPP
#define MEDSIM_PROTOCOLS_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "medsim/engine.hpp"
#include "medsim/game.hpp"

namespace medsim {

// What a protocol is expected to satisfy; the verification module confirms
// or refutes exactly these claims.
enum class SecurityClaim {
  Correct,
  SemiHonest,
  Malicious,
  RationalAnyCeGame,           // rational for every game whose CE is the target
  RationalConstantPayoffOnly,  // rational only when payoffs are constant
};

struct ProtocolSpec {
  std::string name;
  JointPMF target;
  std::shared_ptr<const Party> party_a, party_b;
  std::vector<Phase> phases;
  ChannelMode mode;
  std::set<SecurityClaim> claimed_security;
  bool bit_messages = false;  // every honest message is "0"/"1" (enables bit-fix adversaries)
  bool first_mover_draws_cell = false;  // party A privately draws the whole (x,y) cell
};

// A concrete deviation: a full Party for one side plus a label for reports.
struct AdversaryStrategy {
  std::string kind;
  bool side_a = false;
  std::shared_ptr<const Party> party;
};

// One simultaneous exchange of uniform bits; output is the XOR, or the
// party's own bit when the peer's message is missing. Cheap talk only.
std::pair<std::shared_ptr<const Party>, std::shared_ptr<const Party>> xor_bit_pair();
ProtocolSpec xor_coin_spec();

// Per attempt, ceil(log2 D) XOR bits form a value v; accept when v < D,
// otherwise the attempt repeats (declared memoryless loop). Outputs the
// agreed value as a decimal symbol, uniform on {0..D-1}. Cheap talk only.
std::pair<std::shared_ptr<const Party>, std::shared_ptr<const Party>> joint_uniform_sampler(int d);
ProtocolSpec joint_uniform_spec(int d);

// Samples a separable target exactly: the parties first agree on the
// component label through joint uniform bits over a common-denominator
// expansion of the component masses, then each draws its own symbol from its
// conditional within the component, locally and silently.
// Throws NotSeparable.
ProtocolSpec mediator_sampler(const JointPMF& p);

// Party A draws the whole cell (x,y), sends y, outputs x; B outputs what it
// received. Correct for every target, and deliberately nothing more.
ProtocolSpec one_sided_sampler(const JointPMF& p);

// A sends a uniform bit, then B sends one; output is the XOR. The attackable
// two-move coin flip. Polite talk only.
ProtocolSpec naive_polite_coinflip();

// Wraps the mediator sampler: each party outputs "1" when its component
// label lands in class_one, "0" otherwise. The outputs agree with
// probability 1 and the coin's bias is the exact mass of class_one.
// Throws NotSeparable, EmptyPartitionClass, ValidationError (unknown label).
ProtocolSpec coin_map(const JointPMF& p, const std::set<std::string>& class_one);

// kind_spec grammar:
//   "honest"
//   "abort:R"        withhold every message from the R-th exchange round on (1-based)
//   "bit-fix:T"      T in {0,1}: send T xor (xor of all bits received so far)
//   "view-output"    behave honestly, output the full view serialization
//   "custom-table:m0,m1,...;out=SYM"  fixed message per own sending turn
//                    ("bot" for none), constant output SYM
// Throws UnknownKind.
AdversaryStrategy make_adversary(const ProtocolSpec& spec, bool side_a,
                                 const std::string& kind_spec);

// Every deterministic one-round bit behavior: the three constants over
// {0, 1, none} plus every map from {nothing seen, timeout seen} to the same
// three options.
std::vector<AdversaryStrategy> one_round_bit_behaviors(const ProtocolSpec& spec, bool side_a);

// Follows the protocol honestly and applies f to the honest output. The
// classic per-signal deviation family when f ranges over all action maps.
AdversaryStrategy remap_deviation(const ProtocolSpec& spec, bool side_a,
                                  const std::map<std::string, std::string>& f);
std::vector<AdversaryStrategy> remap_deviations(const ProtocolSpec& spec, bool side_a,
                                                const Alphabet& actions);

// For first-mover-draws-cell protocols: A plays the pure best response to
// the peer action it drew, instead of its assigned action.
AdversaryStrategy one_sided_best_response(const ProtocolSpec& spec, const Game& g);

// Remaps on both sides, plus the best response above when the protocol's
// first mover draws the whole cell.
std::vector<AdversaryStrategy> default_rational_family(const ProtocolSpec& spec, const Game& g);

// Same strategy with its output replaced by a dump of the full view, the
// most informative statistic a deviating party can report.
AdversaryStrategy with_view_output(const AdversaryStrategy& adv);

// Evaluates every family strategy for the given deviator side by exact tree
// enumeration and returns the best one with its utility gain over the
// target's expected payoff (gain <= 0: no violation found within family).
// Strategies for the other side are ignored. Throws NotCorrelatedEq when the
// target is not a correlated equilibrium of g, ValidationError when the
// family holds no strategy for the deviator.
std::pair<AdversaryStrategy, Rational> rational_deviation_search(
    const Game& g, const ProtocolSpec& spec, const std::vector<AdversaryStrategy>& family,
    bool deviator_a);

}  // namespace medsim

#endif  // MEDSIM_PROTOCOLS_HPP
