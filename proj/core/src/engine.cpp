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

#include "medsim/engine.hpp"

#include <map>
#include <set>
#include <sstream>

namespace medsim {

namespace {

std::string show(const std::optional<std::string>& m) { return m ? *m : "-"; }

}  // namespace

std::string PartyView::str() const {
  std::ostringstream os;
  for (const ViewEvent& e : events)
    os << "p" << e.phase << "." << e.round << ":" << e.choice << ">" << show(e.received) << ";";
  return os.str();
}

std::string Transcript::str() const {
  std::ostringstream os;
  for (const TranscriptEntry& e : rounds)
    os << "r" << e.exchange_round << " A:" << show(e.from_a) << " B:" << show(e.from_b) << ";";
  return os.str();
}

namespace {

bool operator==(const ViewEvent& a, const ViewEvent& b) {
  return a.phase == b.phase && a.round == b.round && a.choice == b.choice &&
         a.received == b.received;
}

struct State {
  Rational prob;
  PartyView va, vb;
  Transcript tr;
  int global_round = 0;
  int exchange_round = 0;
};

void validate_phases(const std::vector<Phase>& phases) {
  for (const Phase& ph : phases) {
    if (ph.rounds < 1) throw ValidationError("phase with no rounds");
    if (ph.retry && !ph.accept) throw ValidationError("retry phase without accept predicate");
  }
}

std::vector<Branch> checked_act(const Party& p, const PartyView& view, const RoundInfo& info) {
  std::vector<Branch> bs = p.act(view, info);
  if (bs.empty()) throw BadWeights("party offered no branches");
  Rational total = 0;
  std::set<std::string> labels;
  for (const Branch& b : bs) {
    if (b.weight <= Rational(0)) throw BadWeights("branch weight must be positive");
    if (!labels.insert(b.choice).second) throw BadWeights("duplicate branch label '" + b.choice + "'");
    total += b.weight;
  }
  if (total != Rational(1)) throw BadWeights("branch weights must sum to 1");
  return bs;
}

class Engine {
 public:
  Engine(const Party& a, const Party& b, const std::vector<Phase>& phases, ChannelMode mode,
         const EnumerateOptions& opts)
      : a_(a), b_(b), phases_(phases), mode_(mode), opts_(opts) {
    if (!a.supports(mode) || !b.supports(mode))
      throw ModeError("party does not support this channel mode");
    validate_phases(phases);
  }

  ExecutionTree run() {
    State root;
    root.prob = 1;
    phase_dfs(std::move(root), 0);
    ExecutionTree t;
    t.leaves = std::move(leaves_);
    t.tail_mass = tail_;
    for (const auto& [idx, p] : annotations_) t.loop_annotations.push_back({idx, p});
    return t;
  }

 private:
  using Cont = std::function<void(State&&)>;

  void bump() {
    if (++nodes_ > opts_.node_budget) throw StateExplosion("execution tree exceeds the node budget");
  }

  bool accepted(const Phase& ph, const State& s) const {
    switch (opts_.accept_authority) {
      case AcceptAuthority::SideA: return ph.accept(s.va);
      case AcceptAuthority::SideB: return ph.accept(s.vb);
      case AcceptAuthority::Both: {
        const bool aa = ph.accept(s.va), ab = ph.accept(s.vb);
        if (aa != ab)
          throw ValidationError("retry acceptance diverged between parties; pick an authority");
        return aa;
      }
    }
    return false;
  }

  // Expands rounds r.. of one attempt of phase pi, then hands each end state
  // to cont.
  void rounds_dfs(State s, int pi, int r, const Cont& cont) {
    const Phase& ph = phases_[pi];
    if (r == ph.rounds) {
      cont(std::move(s));
      return;
    }
    const RoundInfo info{pi, r, s.global_round, s.exchange_round, ph.kind};
    if (ph.kind == RoundKind::Silent) {
      const auto bas = checked_act(a_, s.va, info);
      const auto bbs = checked_act(b_, s.vb, info);
      for (const Branch& ba : bas) {
        if (ba.message) throw ModeError("message sent in a silent round");
        for (const Branch& bb : bbs) {
          if (bb.message) throw ModeError("message sent in a silent round");
          State t = s;
          t.prob = s.prob * ba.weight * bb.weight;
          t.va.events.push_back({pi, r, ba.choice, std::nullopt});
          t.vb.events.push_back({pi, r, bb.choice, std::nullopt});
          ++t.global_round;
          bump();
          rounds_dfs(std::move(t), pi, r + 1, cont);
        }
      }
      return;
    }
    if (mode_ == ChannelMode::CheapTalk) {
      const auto bas = checked_act(a_, s.va, info);
      const auto bbs = checked_act(b_, s.vb, info);
      for (const Branch& ba : bas)
        for (const Branch& bb : bbs) {
          State t = s;
          t.prob = s.prob * ba.weight * bb.weight;
          // Delivery after both have committed: round-r messages never see
          // the peer's round-r message.
          t.va.events.push_back({pi, r, ba.choice, bb.message ? *bb.message : kTimeout});
          t.vb.events.push_back({pi, r, bb.choice, ba.message ? *ba.message : kTimeout});
          t.tr.rounds.push_back({s.exchange_round, ba.message ? *ba.message : kTimeout,
                                 bb.message ? *bb.message : kTimeout});
          ++t.global_round;
          ++t.exchange_round;
          bump();
          rounds_dfs(std::move(t), pi, r + 1, cont);
        }
      return;
    }
    // Polite talk: single sender, immediate delivery.
    const bool a_sends = s.exchange_round % 2 == 0;
    const auto bs = checked_act(a_sends ? a_ : b_, a_sends ? s.va : s.vb, info);
    for (const Branch& br : bs) {
      State t = s;
      t.prob = s.prob * br.weight;
      const std::string delivered = br.message ? *br.message : kTimeout;
      if (a_sends) {
        t.va.events.push_back({pi, r, br.choice, std::nullopt});
        t.vb.events.push_back({pi, r, "", delivered});
        t.tr.rounds.push_back({s.exchange_round, delivered, std::nullopt});
      } else {
        t.vb.events.push_back({pi, r, br.choice, std::nullopt});
        t.va.events.push_back({pi, r, "", delivered});
        t.tr.rounds.push_back({s.exchange_round, std::nullopt, delivered});
      }
      ++t.global_round;
      ++t.exchange_round;
      bump();
      rounds_dfs(std::move(t), pi, r + 1, cont);
    }
  }

  void phase_dfs(State s, size_t pi) {
    if (pi == phases_.size()) {
      leaves_.push_back({s.prob, a_.finalize(s.va), b_.finalize(s.vb), std::move(s.va),
                         std::move(s.vb), std::move(s.tr)});
      return;
    }
    const Phase& ph = phases_[pi];
    if (!ph.retry) {
      rounds_dfs(std::move(s), static_cast<int>(pi), 0,
                 [this, pi](State&& t) { phase_dfs(std::move(t), pi + 1); });
      return;
    }
    if (opts_.collapse_retry_loops) {
      // One attempt at relative probability 1, then condition on acceptance.
      std::vector<State> keep;
      Rational p_acc = 0;
      State rel = s;
      rel.prob = 1;
      rounds_dfs(std::move(rel), static_cast<int>(pi), 0, [&](State&& t) {
        if (accepted(ph, t)) {
          p_acc += t.prob;
          keep.push_back(std::move(t));
        }
      });
      if (p_acc.is_zero()) throw NonTermination("retry loop can never accept");
      auto [it, fresh] = annotations_.emplace(static_cast<int>(pi), p_acc);
      if (!fresh && it->second != p_acc)
        throw ValidationError("retry loop acceptance probability depends on prior state");
      for (State& t : keep) {
        t.prob = s.prob * t.prob / p_acc;
        phase_dfs(std::move(t), pi + 1);
      }
      return;
    }
    std::vector<State> pending;
    pending.push_back(std::move(s));
    for (int attempt = 0; attempt < opts_.retry_cap && !pending.empty(); ++attempt) {
      std::vector<State> next;
      for (State& p : pending)
        rounds_dfs(std::move(p), static_cast<int>(pi), 0, [&](State&& t) {
          if (accepted(ph, t))
            phase_dfs(std::move(t), pi + 1);
          else
            next.push_back(std::move(t));
        });
      pending = std::move(next);
    }
    for (const State& p : pending) tail_ += p.prob;
  }

  const Party& a_;
  const Party& b_;
  const std::vector<Phase>& phases_;
  ChannelMode mode_;
  EnumerateOptions opts_;
  long nodes_ = 0;
  Rational tail_ = Rational(0);
  std::vector<Leaf> leaves_;
  std::map<int, Rational> annotations_;
};

// Counter-hash pseudorandom stream (splitmix construction); stable across
// platforms so seeded runs are bit-identical everywhere.
struct Prng {
  uint64_t state;
  uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// Uniform draw from [0, n) by rejection on the minimal bit width.
BigInt uniform_below(Prng& rng, const BigInt& n) {
  if (n <= 1) return 0;
  const unsigned bits = boost::multiprecision::msb(n - 1) + 1;
  const unsigned chunks = (bits + 63) / 64;
  while (true) {
    BigInt r = 0;
    for (unsigned i = 0; i < chunks; ++i) r = (r << 64) | BigInt(rng.next());
    r >>= chunks * 64 - bits;
    if (r < n) return r;
  }
}

const Branch& sample_branch(Prng& rng, const std::vector<Branch>& bs) {
  std::vector<Rational> ws;
  for (const Branch& b : bs) ws.push_back(b.weight);
  const BigInt d = common_denominator(ws.begin(), ws.end());
  const BigInt r = uniform_below(rng, d);
  BigInt cum = 0;
  for (const Branch& b : bs) {
    cum += (b.weight * Rational(d)).numerator();
    if (r < cum) return b;
  }
  return bs.back();  // unreachable: cum reaches d, r < d
}

// One round of a single sampled execution; shared by run_once.
void sampled_round(Prng& rng, const Party& a, const Party& b, ChannelMode mode, const Phase& ph,
                   State& s, int pi, int r) {
  const RoundInfo info{pi, r, s.global_round, s.exchange_round, ph.kind};
  if (ph.kind == RoundKind::Silent) {
    const Branch ba = sample_branch(rng, checked_act(a, s.va, info));
    const Branch bb = sample_branch(rng, checked_act(b, s.vb, info));
    if (ba.message || bb.message) throw ModeError("message sent in a silent round");
    s.va.events.push_back({pi, r, ba.choice, std::nullopt});
    s.vb.events.push_back({pi, r, bb.choice, std::nullopt});
    ++s.global_round;
    return;
  }
  if (mode == ChannelMode::CheapTalk) {
    const Branch ba = sample_branch(rng, checked_act(a, s.va, info));
    const Branch bb = sample_branch(rng, checked_act(b, s.vb, info));
    s.va.events.push_back({pi, r, ba.choice, bb.message ? *bb.message : kTimeout});
    s.vb.events.push_back({pi, r, bb.choice, ba.message ? *ba.message : kTimeout});
    s.tr.rounds.push_back({s.exchange_round, ba.message ? *ba.message : kTimeout,
                           bb.message ? *bb.message : kTimeout});
  } else {
    const bool a_sends = s.exchange_round % 2 == 0;
    const Branch br = sample_branch(rng, checked_act(a_sends ? a : b, a_sends ? s.va : s.vb, info));
    const std::string delivered = br.message ? *br.message : kTimeout;
    if (a_sends) {
      s.va.events.push_back({pi, r, br.choice, std::nullopt});
      s.vb.events.push_back({pi, r, "", delivered});
      s.tr.rounds.push_back({s.exchange_round, delivered, std::nullopt});
    } else {
      s.vb.events.push_back({pi, r, br.choice, std::nullopt});
      s.va.events.push_back({pi, r, "", delivered});
      s.tr.rounds.push_back({s.exchange_round, std::nullopt, delivered});
    }
  }
  ++s.global_round;
  ++s.exchange_round;
}

bool accepted_once(const Phase& ph, const State& s, AcceptAuthority authority) {
  switch (authority) {
    case AcceptAuthority::SideA: return ph.accept(s.va);
    case AcceptAuthority::SideB: return ph.accept(s.vb);
    case AcceptAuthority::Both: {
      const bool aa = ph.accept(s.va), ab = ph.accept(s.vb);
      if (aa != ab)
        throw ValidationError("retry acceptance diverged between parties; pick an authority");
      return aa;
    }
  }
  return false;
}

}  // namespace

ExecutionTree enumerate_executions(const Party& a, const Party& b,
                                   const std::vector<Phase>& phases, ChannelMode mode,
                                   const EnumerateOptions& opts) {
  return Engine(a, b, phases, mode, opts).run();
}

RunResult run_once(const Party& a, const Party& b, const std::vector<Phase>& phases,
                   ChannelMode mode, uint64_t seed, AcceptAuthority authority) {
  if (!a.supports(mode) || !b.supports(mode))
    throw ModeError("party does not support this channel mode");
  validate_phases(phases);
  constexpr long kAttemptCap = 1000000;
  Prng rng{seed};
  State s;
  s.prob = 1;
  for (size_t pi = 0; pi < phases.size(); ++pi) {
    const Phase& ph = phases[pi];
    long attempts = 0;
    while (true) {
      for (int r = 0; r < ph.rounds; ++r)
        sampled_round(rng, a, b, mode, ph, s, static_cast<int>(pi), r);
      if (!ph.retry || accepted_once(ph, s, authority)) break;
      if (++attempts >= kAttemptCap)
        throw NonTermination("retry loop exceeded the attempt cap");
    }
  }
  return {a.finalize(s.va), b.finalize(s.vb), std::move(s.tr), std::move(s.va), std::move(s.vb)};
}

JointPMF monte_carlo(const Party& a, const Party& b, const std::vector<Phase>& phases,
                     ChannelMode mode, const Alphabet& out_a, const Alphabet& out_b,
                     long trials, uint64_t master_seed, AcceptAuthority authority) {
  if (trials < 1) throw ValidationError("need at least one trial");
  std::vector<std::vector<long>> counts(out_a.size(), std::vector<long>(out_b.size(), 0));
  for (long i = 0; i < trials; ++i) {
    Prng mixer{master_seed ^ (0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(i + 1))};
    RunResult r = run_once(a, b, phases, mode, mixer.next(), authority);
    ++counts[out_a.index_of(r.output_a)][out_b.index_of(r.output_b)];
  }
  std::vector<std::vector<Rational>> rows(out_a.size(), std::vector<Rational>(out_b.size()));
  for (int i = 0; i < out_a.size(); ++i)
    for (int j = 0; j < out_b.size(); ++j) rows[i][j] = Rational(counts[i][j], trials);
  return JointPMF::make(out_a, out_b, rows);
}

JointPMF output_joint(const ExecutionTree& tree, const Alphabet& out_a, const Alphabet& out_b) {
  if (!tree.tail_mass.is_zero())
    throw TailMassNonzero("tree has truncated mass " + tree.tail_mass.str());
  std::vector<std::vector<Rational>> rows(out_a.size(),
                                          std::vector<Rational>(out_b.size(), Rational(0)));
  for (const Leaf& l : tree.leaves)
    rows[out_a.index_of(l.output_a)][out_b.index_of(l.output_b)] += l.probability;
  return JointPMF::make(out_a, out_b, rows);
}

Alphabet observed_output_alphabet(const ExecutionTree& tree, bool side_a) {
  std::set<std::string> seen;
  for (const Leaf& l : tree.leaves) seen.insert(side_a ? l.output_a : l.output_b);
  return Alphabet(std::vector<std::string>(seen.begin(), seen.end()));
}

namespace {

const Branch* find_choice(const std::vector<Branch>& bs, const std::string& choice) {
  for (const Branch& b : bs)
    if (b.choice == choice) return &b;
  return nullptr;
}

}  // namespace

bool replay_consistent(const Leaf& leaf, const Party& a, const Party& b,
                       const std::vector<Phase>& phases, ChannelMode mode) {
  validate_phases(phases);
  size_t ia = 0, ib = 0, it = 0;
  State s;
  s.prob = 1;
  const auto& ea = leaf.view_a.events;
  const auto& eb = leaf.view_b.events;
  for (size_t pi = 0; pi < phases.size(); ++pi) {
    const Phase& ph = phases[pi];
    while (true) {
      for (int r = 0; r < ph.rounds; ++r) {
        const RoundInfo info{static_cast<int>(pi), r, s.global_round, s.exchange_round, ph.kind};
        if (ph.kind == RoundKind::Silent) {
          if (ia >= ea.size() || ib >= eb.size()) return false;
          const std::vector<Branch> bas = a.act(s.va, info);
          const std::vector<Branch> bbs = b.act(s.vb, info);
          const Branch* ba = find_choice(bas, ea[ia].choice);
          const Branch* bb = find_choice(bbs, eb[ib].choice);
          if (!ba || !bb || ba->message || bb->message) return false;
          const ViewEvent wa{static_cast<int>(pi), r, ba->choice, std::nullopt};
          const ViewEvent wb{static_cast<int>(pi), r, bb->choice, std::nullopt};
          if (!(wa == ea[ia]) || !(wb == eb[ib])) return false;
          s.va.events.push_back(wa);
          s.vb.events.push_back(wb);
          ++ia, ++ib, ++s.global_round;
        } else if (mode == ChannelMode::CheapTalk) {
          if (ia >= ea.size() || ib >= eb.size() || it >= leaf.transcript.rounds.size())
            return false;
          const std::vector<Branch> bas = a.act(s.va, info);
          const std::vector<Branch> bbs = b.act(s.vb, info);
          const Branch* ba = find_choice(bas, ea[ia].choice);
          const Branch* bb = find_choice(bbs, eb[ib].choice);
          if (!ba || !bb) return false;
          const std::string ma = ba->message ? *ba->message : kTimeout;
          const std::string mb = bb->message ? *bb->message : kTimeout;
          const ViewEvent wa{static_cast<int>(pi), r, ba->choice, mb};
          const ViewEvent wb{static_cast<int>(pi), r, bb->choice, ma};
          if (!(wa == ea[ia]) || !(wb == eb[ib])) return false;
          const TranscriptEntry& te = leaf.transcript.rounds[it];
          if (te.exchange_round != s.exchange_round || te.from_a != std::optional(ma) ||
              te.from_b != std::optional(mb))
            return false;
          s.va.events.push_back(wa);
          s.vb.events.push_back(wb);
          ++ia, ++ib, ++it, ++s.global_round, ++s.exchange_round;
        } else {
          if (ia >= ea.size() || ib >= eb.size() || it >= leaf.transcript.rounds.size())
            return false;
          const bool a_sends = s.exchange_round % 2 == 0;
          const PartyView& sv = a_sends ? s.va : s.vb;
          const auto& se = a_sends ? ea : eb;
          size_t& si = a_sends ? ia : ib;
          const std::vector<Branch> brs = (a_sends ? a : b).act(sv, info);
          const Branch* br = find_choice(brs, se[si].choice);
          if (!br) return false;
          const std::string delivered = br->message ? *br->message : kTimeout;
          const ViewEvent ws{static_cast<int>(pi), r, br->choice, std::nullopt};
          const ViewEvent wr{static_cast<int>(pi), r, "", delivered};
          const auto& re = a_sends ? eb : ea;
          size_t& ri = a_sends ? ib : ia;
          if (!(ws == se[si]) || !(wr == re[ri])) return false;
          const TranscriptEntry& te = leaf.transcript.rounds[it];
          if (te.exchange_round != s.exchange_round) return false;
          if (a_sends && (te.from_a != std::optional(delivered) || te.from_b)) return false;
          if (!a_sends && (te.from_b != std::optional(delivered) || te.from_a)) return false;
          (a_sends ? s.va : s.vb).events.push_back(ws);
          (a_sends ? s.vb : s.va).events.push_back(wr);
          ++si, ++ri, ++it, ++s.global_round, ++s.exchange_round;
        }
      }
      // Replay follows side A's predicate; honest fixtures agree on both.
      if (!ph.retry || ph.accept(s.va)) break;
      if (ia >= ea.size()) return false;  // rejected attempt must be followed by another
    }
  }
  if (ia != ea.size() || ib != eb.size() || it != leaf.transcript.rounds.size()) return false;
  return a.finalize(s.va) == leaf.output_a && b.finalize(s.vb) == leaf.output_b;
}

}  // namespace medsim
