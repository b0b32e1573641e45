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

#ifndef MEDSIM_ENGINE_HPP
#define MEDSIM_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "medsim/ergodic.hpp"
#include "medsim/pmf.hpp"

namespace medsim {

// Channel discipline. Cheap talk: both parties' round-r messages are
// computed before either is delivered, then both are delivered at once.
// Polite talk: exactly one party sends per round, alternating, Alice first.
using ChannelMode = Channel;

// Sentinel delivered in place of a message when the scheduled sender
// produced none. Distinguishable from every legal message and recorded in
// transcripts and views as-is.
inline const std::string kTimeout = "⊥";

// One weighted option available to a party at a given round. `choice` is the
// party's private randomness realization for the round and is recorded in
// its own view; `message`, if any, goes out on the channel. Labels must be
// distinct within one act() result; weights positive, summing to exactly 1.
struct Branch {
  std::string choice;
  std::optional<std::string> message;
  Rational weight;
};

// Where a round sits in the protocol schedule.
//   phase          index into the phase list
//   round          round within the current attempt of the phase
//   global_round   flat index over every round this execution has run
//   exchange_round flat index over exchange rounds only (polite-talk parity:
//                  Alice sends on even values)
enum class RoundKind { Exchange, Silent };
struct RoundInfo {
  int phase = 0;
  int round = 0;
  int global_round = 0;
  int exchange_round = 0;
  RoundKind kind = RoundKind::Exchange;
};

// What one party has seen: one event per round it participated in. `choice`
// is empty for rounds with no local randomness (for example, receiving in
// polite talk); `received` is absent when nothing was delivered this round.
struct ViewEvent {
  int phase = 0;
  int round = 0;
  std::string choice;
  std::optional<std::string> received;
};

struct PartyView {
  std::vector<ViewEvent> events;
  int rounds() const { return static_cast<int>(events.size()); }
  // Canonical serialization; equal strings iff equal views. Used as the view
  // class key in security checks.
  std::string str() const;
};

// A party is a deterministic map from (view so far, round position) to a
// weighted set of branches, plus a deterministic output map over complete
// views. Immutable and shareable.
class Party {
 public:
  virtual ~Party() = default;
  virtual std::vector<Branch> act(const PartyView& view, const RoundInfo& info) const = 0;
  virtual std::string finalize(const PartyView& view) const = 0;
  virtual bool supports(ChannelMode mode) const { return true; }
};

// Phase of a protocol: `rounds` rounds of the given kind. A retry phase
// repeats until its accept predicate holds; the predicate reads the trailing
// `rounds` events of a view and must evaluate identically on both parties'
// views in honest runs (the loop must be common knowledge). Retry phases
// must be memoryless: each attempt's branch structure may not depend on
// earlier attempts.
struct Phase {
  int rounds = 1;
  RoundKind kind = RoundKind::Exchange;
  bool retry = false;
  std::function<bool(const PartyView&)> accept;
};

struct TranscriptEntry {
  int exchange_round = 0;
  std::optional<std::string> from_a;  // kTimeout when A was scheduled but sent nothing
  std::optional<std::string> from_b;
};

struct Transcript {
  std::vector<TranscriptEntry> rounds;
  std::string str() const;
};

struct Leaf {
  Rational probability;
  std::string output_a, output_b;
  PartyView view_a, view_b;
  Transcript transcript;
};

struct LoopAnnotation {
  int phase_index = 0;
  Rational acceptance_probability;
};

// Exact probability-weighted forest of executions. Leaf probabilities plus
// tail_mass always sum to exactly 1; tail_mass is nonzero only when a retry
// loop was truncated instead of collapsed.
struct ExecutionTree {
  std::vector<Leaf> leaves;
  Rational tail_mass = Rational(0);
  std::vector<LoopAnnotation> loop_annotations;
};

// In adversarial runs only the honest party's accept predicate governs a
// retry loop (the protocol must terminate when at least one party is
// honest). Both: assert the two sides agree, for honest-honest runs.
enum class AcceptAuthority { Both, SideA, SideB };

struct EnumerateOptions {
  bool collapse_retry_loops = true;  // condition on acceptance analytically
  int retry_cap = 20;                // attempts per loop when not collapsing
  long node_budget = 1 << 20;        // StateExplosion beyond this many states
  AcceptAuthority accept_authority = AcceptAuthority::Both;
};

// Enumerates every execution exactly. Collapsed retry loops contribute a
// LoopAnnotation and leave tail_mass at zero: accepted attempts are
// renormalized by the acceptance probability, which is sound because
// rejected attempts are independent of everything that follows. Truncated
// loops keep every attempt in the views and report the exact rejected mass
// as tail_mass. Throws ModeError when a party does not support the mode,
// StateExplosion past the node budget, NonTermination when a retry loop can
// never accept, BadWeights on malformed branch sets.
ExecutionTree enumerate_executions(const Party& a, const Party& b,
                                   const std::vector<Phase>& phases, ChannelMode mode,
                                   const EnumerateOptions& opts = {});

struct RunResult {
  std::string output_a, output_b;
  Transcript transcript;
  PartyView view_a, view_b;
};

// Samples one execution with a deterministic pseudorandom stream derived
// from seed. Retry loops actually loop; 10^6 attempts without acceptance is
// NonTermination (a malformed protocol).
RunResult run_once(const Party& a, const Party& b, const std::vector<Phase>& phases,
                   ChannelMode mode, uint64_t seed,
                   AcceptAuthority authority = AcceptAuthority::Both);

// Empirical joint output distribution over `trials` independent runs, as
// exact rationals with denominator `trials`. Trial seeds are derived from
// master_seed by counter hashing, so any execution order gives the same
// result. Outputs must be symbols of the given alphabets.
JointPMF monte_carlo(const Party& a, const Party& b, const std::vector<Phase>& phases,
                     ChannelMode mode, const Alphabet& out_a, const Alphabet& out_b,
                     long trials, uint64_t master_seed,
                     AcceptAuthority authority = AcceptAuthority::Both);

// The exact joint output distribution induced by a tree's leaves. Leaf
// outputs must be symbols of the given alphabets; tail mass must be zero.
JointPMF output_joint(const ExecutionTree& tree, const Alphabet& out_a, const Alphabet& out_b);

// Distinct leaf outputs of one side, sorted; alphabet for view-valued or
// otherwise undeclared output spaces.
Alphabet observed_output_alphabet(const ExecutionTree& tree, bool side_a);

// Re-derives a leaf from its recorded randomness: walks the schedule forcing
// each party's recorded choice, checking the choice exists among the offered
// branches, that messages match the transcript, and that finalize reproduces
// the outputs. True iff everything matches. Collapsed-loop leaves replay as
// a first-attempt success.
bool replay_consistent(const Leaf& leaf, const Party& a, const Party& b,
                       const std::vector<Phase>& phases, ChannelMode mode);

}  // namespace medsim

#endif  // MEDSIM_ENGINE_HPP
