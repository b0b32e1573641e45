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

#include "medsim/protocols.hpp"

#include <algorithm>

namespace medsim {

namespace {

int bit_of(const std::string& s) { return s == "1" ? 1 : 0; }

// Agreed value of the last k exchange rounds, two bits per round XORed
// together; a missing peer message leaves the party's own bit as the agreed
// bit. Non-bit messages count as 0.
long long decode_tail(const PartyView& v, int k) {
  long long val = 0;
  const size_t n = v.events.size();
  for (int r = 0; r < k; ++r) {
    const ViewEvent& e = v.events[n - k + r];
    const int own = bit_of(e.choice);
    const int bit = (!e.received || *e.received == kTimeout) ? own : own ^ bit_of(*e.received);
    val = val * 2 + bit;
  }
  return val;
}

std::vector<Branch> bit_branches() {
  return {{"0", "0", Rational(1, 2)}, {"1", "1", Rational(1, 2)}};
}

std::vector<Branch> silent_branch() { return {{"", std::nullopt, Rational(1)}}; }

class XorBitParty : public Party {
 public:
  std::vector<Branch> act(const PartyView&, const RoundInfo&) const override {
    return bit_branches();
  }
  std::string finalize(const PartyView& v) const override {
    return std::to_string(decode_tail(v, 1));
  }
  bool supports(ChannelMode m) const override { return m == ChannelMode::CheapTalk; }
};

JointPMF diagonal_pmf(const std::vector<std::string>& symbols, const std::vector<Rational>& mass) {
  const int n = static_cast<int>(symbols.size());
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) rows[i][i] = mass[i];
  return JointPMF::make(Alphabet(symbols), Alphabet(symbols), rows);
}

int bits_for(const BigInt& d) {
  int k = 0;
  while ((BigInt(1) << k) < d) ++k;
  return k;
}

class UniformValueParty : public Party {
 public:
  explicit UniformValueParty(int k) : k_(k) {}
  std::vector<Branch> act(const PartyView&, const RoundInfo&) const override {
    return bit_branches();
  }
  std::string finalize(const PartyView& v) const override {
    return std::to_string(k_ == 0 ? 0 : decode_tail(v, k_));
  }
  bool supports(ChannelMode m) const override { return m == ChannelMode::CheapTalk; }

 private:
  int k_;
};

// One exchange phase of k bit rounds; a retry loop only when 2^k overshoots d.
std::vector<Phase> uniform_phases(const BigInt& d) {
  const int k = bits_for(d);
  if (k == 0) return {};
  Phase ph;
  ph.rounds = k;
  ph.kind = RoundKind::Exchange;
  if ((BigInt(1) << k) != d) {
    ph.retry = true;
    ph.accept = [k, d](const PartyView& v) { return BigInt(decode_tail(v, k)) < d; };
  }
  return {ph};
}

}  // namespace

std::pair<std::shared_ptr<const Party>, std::shared_ptr<const Party>> xor_bit_pair() {
  return {std::make_shared<XorBitParty>(), std::make_shared<XorBitParty>()};
}

ProtocolSpec xor_coin_spec() {
  auto [a, b] = xor_bit_pair();
  JointPMF coin = diagonal_pmf({"0", "1"}, {Rational(1, 2), Rational(1, 2)});
  return {"xor-coin",
          coin,
          a,
          b,
          {Phase{1, RoundKind::Exchange, false, nullptr}},
          ChannelMode::CheapTalk,
          {SecurityClaim::Correct, SecurityClaim::SemiHonest, SecurityClaim::Malicious,
           SecurityClaim::RationalAnyCeGame},
          /*bit_messages=*/true,
          /*first_mover_draws_cell=*/false};
}

std::pair<std::shared_ptr<const Party>, std::shared_ptr<const Party>> joint_uniform_sampler(int d) {
  if (d < 1) throw ValidationError("sampler needs d >= 1");
  const int k = bits_for(d);
  return {std::make_shared<UniformValueParty>(k), std::make_shared<UniformValueParty>(k)};
}

ProtocolSpec joint_uniform_spec(int d) {
  auto [a, b] = joint_uniform_sampler(d);
  std::vector<std::string> symbols;
  std::vector<Rational> mass;
  for (int i = 0; i < d; ++i) {
    symbols.push_back(std::to_string(i));
    mass.push_back(Rational(1, d));
  }
  return {"uniform" + std::to_string(d),
          diagonal_pmf(symbols, mass),
          a,
          b,
          uniform_phases(d),
          ChannelMode::CheapTalk,
          {SecurityClaim::Correct, SecurityClaim::SemiHonest, SecurityClaim::Malicious},
          /*bit_messages=*/true,
          /*first_mover_draws_cell=*/false};
}

namespace {

struct MediatorPlan {
  ErgodicDecomposition dec;
  BigInt denom;                    // common denominator of component masses
  std::vector<BigInt> cum_counts;  // cumulative counts per label, in label order
  int k;                           // bits per attempt

  int label_of_value(long long v) const {
    for (size_t i = 0; i < cum_counts.size(); ++i)
      if (BigInt(v) < cum_counts[i]) return static_cast<int>(i);
    return static_cast<int>(cum_counts.size()) - 1;
  }
};

MediatorPlan make_plan(const JointPMF& p) {
  MediatorPlan plan{ergodic_decomposition(p), 1, {}, 0};
  std::vector<Rational> masses;
  for (const std::string& l : plan.dec.labels) masses.push_back(plan.dec.component_mass.at(l));
  plan.denom = common_denominator(masses.begin(), masses.end());
  BigInt cum = 0;
  for (const Rational& m : masses) {
    cum += (m * Rational(plan.denom)).numerator();
    plan.cum_counts.push_back(cum);
  }
  plan.k = bits_for(plan.denom);
  if (plan.k > 62) throw ValidationError("component masses are too fine to encode");
  return plan;
}

class MediatorParty : public Party {
 public:
  MediatorParty(const JointPMF& p, const MediatorPlan& plan, bool side_a) : plan_(plan) {
    const auto [px, py] = p.marginals();
    const auto& comp = side_a ? plan.dec.component_of_x : plan.dec.component_of_y;
    const Alphabet& alph = side_a ? p.alphabet_x() : p.alphabet_y();
    const MarginalPMF& marg = side_a ? px : py;
    conditional_.resize(plan.dec.labels.size());
    for (int i = 0; i < alph.size(); ++i) {
      const std::string& sym = alph.symbol(i);
      const auto it = comp.find(sym);
      if (it == comp.end()) continue;  // zero-probability symbol
      const int w = plan.dec.label_index(it->second);
      conditional_[w].push_back({sym, marg.at(i) / plan.dec.component_mass.at(it->second)});
    }
  }

  std::vector<Branch> act(const PartyView& view, const RoundInfo& info) const override {
    if (info.kind == RoundKind::Exchange) return bit_branches();
    const int w = plan_.k == 0 ? 0 : plan_.label_of_value(decode_tail(view, plan_.k));
    std::vector<Branch> bs;
    for (const auto& [sym, weight] : conditional_[w]) bs.push_back({sym, std::nullopt, weight});
    return bs;
  }

  std::string finalize(const PartyView& v) const override { return v.events.back().choice; }

  bool supports(ChannelMode m) const override { return m == ChannelMode::CheapTalk; }

 private:
  MediatorPlan plan_;
  std::vector<std::vector<std::pair<std::string, Rational>>> conditional_;
};

std::vector<Phase> mediator_phases(const MediatorPlan& plan) {
  std::vector<Phase> ph = uniform_phases(plan.denom);
  ph.push_back(Phase{1, RoundKind::Silent, false, nullptr});
  return ph;
}

}  // namespace

ProtocolSpec mediator_sampler(const JointPMF& p) {
  if (!is_separable(p))
    throw NotSeparable("target is not separable; the component label does not screen X from Y");
  const MediatorPlan plan = make_plan(p);
  return {"mediator",
          p,
          std::make_shared<MediatorParty>(p, plan, true),
          std::make_shared<MediatorParty>(p, plan, false),
          mediator_phases(plan),
          ChannelMode::CheapTalk,
          {SecurityClaim::Correct, SecurityClaim::SemiHonest, SecurityClaim::Malicious,
           SecurityClaim::RationalAnyCeGame},
          /*bit_messages=*/true,
          /*first_mover_draws_cell=*/false};
}

namespace {

class OneSidedAlice : public Party {
 public:
  explicit OneSidedAlice(const JointPMF& p) : p_(p) {}
  std::vector<Branch> act(const PartyView&, const RoundInfo&) const override {
    std::vector<Branch> bs;
    for (int i = 0; i < p_.alphabet_x().size(); ++i)
      for (int j = 0; j < p_.alphabet_y().size(); ++j) {
        const Rational& m = p_.at(i, j);
        if (m.is_zero()) continue;
        bs.push_back({p_.alphabet_x().symbol(i) + "|" + p_.alphabet_y().symbol(j),
                      p_.alphabet_y().symbol(j), m});
      }
    return bs;
  }
  std::string finalize(const PartyView& v) const override {
    const std::string& c = v.events.front().choice;
    return c.substr(0, c.find('|'));
  }

 private:
  JointPMF p_;
};

class OneSidedBob : public Party {
 public:
  explicit OneSidedBob(Alphabet out) : out_(std::move(out)) {}
  std::vector<Branch> act(const PartyView&, const RoundInfo&) const override {
    return silent_branch();  // cheap-talk runs only; never called under polite talk
  }
  std::string finalize(const PartyView& v) const override {
    for (const ViewEvent& e : v.events)
      if (e.received && out_.contains(*e.received)) return *e.received;
    return out_.symbol(0);  // missing or mangled message
  }

 private:
  Alphabet out_;
};

}  // namespace

ProtocolSpec one_sided_sampler(const JointPMF& p) {
  return {"one-sided",
          p,
          std::make_shared<OneSidedAlice>(p),
          std::make_shared<OneSidedBob>(p.alphabet_y()),
          {Phase{1, RoundKind::Exchange, false, nullptr}},
          ChannelMode::PoliteTalk,
          {SecurityClaim::Correct, SecurityClaim::RationalConstantPayoffOnly},
          /*bit_messages=*/false,
          /*first_mover_draws_cell=*/true};
}

namespace {

class NaiveBitParty : public Party {
 public:
  std::vector<Branch> act(const PartyView&, const RoundInfo&) const override {
    return bit_branches();
  }
  std::string finalize(const PartyView& v) const override {
    std::string own = "0";
    const std::string* rec = nullptr;
    for (const ViewEvent& e : v.events) {
      if (!e.choice.empty()) own = e.choice;
      if (e.received) rec = &*e.received;
    }
    const int o = bit_of(own);
    return std::to_string(rec == nullptr || *rec == kTimeout ? o : o ^ bit_of(*rec));
  }
  bool supports(ChannelMode m) const override { return m == ChannelMode::PoliteTalk; }
};

}  // namespace

ProtocolSpec naive_polite_coinflip() {
  JointPMF coin = diagonal_pmf({"0", "1"}, {Rational(1, 2), Rational(1, 2)});
  return {"naive-polite-coinflip",
          coin,
          std::make_shared<NaiveBitParty>(),
          std::make_shared<NaiveBitParty>(),
          {Phase{2, RoundKind::Exchange, false, nullptr}},
          ChannelMode::PoliteTalk,
          {SecurityClaim::Correct},
          /*bit_messages=*/true,
          /*first_mover_draws_cell=*/false};
}

namespace {

class CoinMapParty : public Party {
 public:
  CoinMapParty(std::shared_ptr<const Party> inner, std::map<std::string, std::string> comp_of_own,
               std::set<std::string> class_one)
      : inner_(std::move(inner)), comp_(std::move(comp_of_own)), one_(std::move(class_one)) {}
  std::vector<Branch> act(const PartyView& v, const RoundInfo& i) const override {
    return inner_->act(v, i);
  }
  std::string finalize(const PartyView& v) const override {
    return one_.count(comp_.at(inner_->finalize(v))) ? "1" : "0";
  }
  bool supports(ChannelMode m) const override { return inner_->supports(m); }

 private:
  std::shared_ptr<const Party> inner_;
  std::map<std::string, std::string> comp_;
  std::set<std::string> one_;
};

}  // namespace

ProtocolSpec coin_map(const JointPMF& p, const std::set<std::string>& class_one) {
  ProtocolSpec inner = mediator_sampler(p);
  const ErgodicDecomposition dec = ergodic_decomposition(p);
  for (const std::string& l : class_one)
    if (!dec.component_mass.count(l)) throw ValidationError("unknown component label '" + l + "'");
  if (class_one.empty() || class_one.size() == dec.labels.size())
    throw EmptyPartitionClass("both partition classes need at least one component");
  Rational bias = 0;
  for (const std::string& l : class_one) bias += dec.component_mass.at(l);
  return {"coin-map",
          diagonal_pmf({"0", "1"}, {Rational(1) - bias, bias}),
          std::make_shared<CoinMapParty>(inner.party_a, dec.component_of_x, class_one),
          std::make_shared<CoinMapParty>(inner.party_b, dec.component_of_y, class_one),
          inner.phases,
          inner.mode,
          {SecurityClaim::Correct, SecurityClaim::SemiHonest, SecurityClaim::Malicious},
          /*bit_messages=*/true,
          /*first_mover_draws_cell=*/false};
}

namespace {

class AbortParty : public Party {
 public:
  AbortParty(std::shared_ptr<const Party> inner, int first_round)
      : inner_(std::move(inner)), first_(first_round) {}
  std::vector<Branch> act(const PartyView& v, const RoundInfo& i) const override {
    std::vector<Branch> bs = inner_->act(v, i);
    if (i.kind == RoundKind::Exchange && i.exchange_round + 1 >= first_)
      for (Branch& b : bs) b.message = std::nullopt;
    return bs;
  }
  std::string finalize(const PartyView& v) const override { return inner_->finalize(v); }
  bool supports(ChannelMode m) const override { return inner_->supports(m); }

 private:
  std::shared_ptr<const Party> inner_;
  int first_;  // 1-based exchange round of the first withheld message
};

class BitFixParty : public Party {
 public:
  explicit BitFixParty(int target) : target_(target) {}
  std::vector<Branch> act(const PartyView& v, const RoundInfo& i) const override {
    if (i.kind == RoundKind::Silent) return silent_branch();
    int x = target_;
    for (const ViewEvent& e : v.events)
      if (e.received && (*e.received == "0" || *e.received == "1")) x ^= bit_of(*e.received);
    return {{"", std::to_string(x), Rational(1)}};
  }
  std::string finalize(const PartyView&) const override { return std::to_string(target_); }

 private:
  int target_;
};

class ViewOutputParty : public Party {
 public:
  explicit ViewOutputParty(std::shared_ptr<const Party> inner) : inner_(std::move(inner)) {}
  std::vector<Branch> act(const PartyView& v, const RoundInfo& i) const override {
    return inner_->act(v, i);
  }
  std::string finalize(const PartyView& v) const override { return v.str(); }
  bool supports(ChannelMode m) const override { return inner_->supports(m); }

 private:
  std::shared_ptr<const Party> inner_;
};

class CustomTableParty : public Party {
 public:
  CustomTableParty(std::vector<std::optional<std::string>> messages, std::string output,
                   ChannelMode mode)
      : messages_(std::move(messages)), output_(std::move(output)), mode_(mode) {}
  std::vector<Branch> act(const PartyView&, const RoundInfo& i) const override {
    if (i.kind == RoundKind::Silent) return silent_branch();
    const size_t turn = mode_ == ChannelMode::CheapTalk ? i.exchange_round : i.exchange_round / 2;
    std::optional<std::string> msg;
    if (turn < messages_.size()) msg = messages_[turn];
    return {{"", msg, Rational(1)}};
  }
  std::string finalize(const PartyView&) const override { return output_; }

 private:
  std::vector<std::optional<std::string>> messages_;
  std::string output_;
  ChannelMode mode_;
};

// One-round behavior that may react to an already-seen timeout.
class ReactParty : public Party {
 public:
  ReactParty(std::optional<std::string> fresh, std::optional<std::string> after_timeout,
             std::string output)
      : fresh_(std::move(fresh)), after_(std::move(after_timeout)), output_(std::move(output)) {}
  std::vector<Branch> act(const PartyView& v, const RoundInfo& i) const override {
    if (i.kind == RoundKind::Silent) return silent_branch();
    bool seen = false;
    for (const ViewEvent& e : v.events) seen = seen || (e.received && *e.received == kTimeout);
    return {{"", seen ? after_ : fresh_, Rational(1)}};
  }
  std::string finalize(const PartyView&) const override { return output_; }

 private:
  std::optional<std::string> fresh_, after_;
  std::string output_;
};

class FinalizeOverrideParty : public Party {
 public:
  using Map = std::function<std::string(const PartyView&, const Party&)>;
  FinalizeOverrideParty(std::shared_ptr<const Party> inner, Map map)
      : inner_(std::move(inner)), map_(std::move(map)) {}
  std::vector<Branch> act(const PartyView& v, const RoundInfo& i) const override {
    return inner_->act(v, i);
  }
  std::string finalize(const PartyView& v) const override { return map_(v, *inner_); }
  bool supports(ChannelMode m) const override { return inner_->supports(m); }

 private:
  std::shared_ptr<const Party> inner_;
  Map map_;
};

std::optional<std::string> parse_msg_token(const std::string& t) {
  if (t == "bot") return std::nullopt;
  return t;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

AdversaryStrategy with_view_output(const AdversaryStrategy& adv) {
  return {adv.kind + "+view", adv.side_a, std::make_shared<ViewOutputParty>(adv.party)};
}

AdversaryStrategy make_adversary(const ProtocolSpec& spec, bool side_a,
                                 const std::string& kind_spec) {
  const std::shared_ptr<const Party> honest = side_a ? spec.party_a : spec.party_b;
  if (kind_spec == "honest") return {kind_spec, side_a, honest};
  if (kind_spec == "view-output")
    return {kind_spec, side_a, std::make_shared<ViewOutputParty>(honest)};
  if (kind_spec.rfind("abort:", 0) == 0) {
    int r = 0;
    try {
      r = std::stoi(kind_spec.substr(6));
    } catch (const std::exception&) {
      throw UnknownKind("bad abort round in '" + kind_spec + "'");
    }
    if (r < 1) throw UnknownKind("abort round must be >= 1");
    return {kind_spec, side_a, std::make_shared<AbortParty>(honest, r)};
  }
  if (kind_spec.rfind("bit-fix:", 0) == 0) {
    const std::string t = kind_spec.substr(8);
    if (t != "0" && t != "1") throw UnknownKind("bit-fix target must be 0 or 1");
    return {kind_spec, side_a, std::make_shared<BitFixParty>(t == "1")};
  }
  if (kind_spec.rfind("custom-table:", 0) == 0) {
    const std::string body = kind_spec.substr(13);
    const size_t semi = body.find(";out=");
    if (semi == std::string::npos)
      throw UnknownKind("custom-table needs ';out=SYM' in '" + kind_spec + "'");
    std::vector<std::optional<std::string>> msgs;
    for (const std::string& t : split(body.substr(0, semi), ','))
      msgs.push_back(parse_msg_token(t));
    return {kind_spec, side_a,
            std::make_shared<CustomTableParty>(std::move(msgs), body.substr(semi + 5), spec.mode)};
  }
  throw UnknownKind("no adversary kind '" + kind_spec + "'");
}

std::vector<AdversaryStrategy> one_round_bit_behaviors(const ProtocolSpec& spec, bool side_a) {
  std::vector<AdversaryStrategy> out;
  const std::vector<std::string> opts = {"0", "1", "bot"};
  for (const std::string& m : opts)
    out.push_back(make_adversary(spec, side_a, "custom-table:" + m + ";out=0"));
  for (const std::string& f : opts)
    for (const std::string& t : opts)
      out.push_back({"react:" + f + "|" + t, side_a,
                     std::make_shared<ReactParty>(parse_msg_token(f), parse_msg_token(t), "0")});
  return out;
}

AdversaryStrategy remap_deviation(const ProtocolSpec& spec, bool side_a,
                                  const std::map<std::string, std::string>& f) {
  const std::shared_ptr<const Party> honest = side_a ? spec.party_a : spec.party_b;
  std::string kind = "remap{";
  for (const auto& [from, to] : f) kind += from + "->" + to + ",";
  kind.back() = '}';
  auto map = [f](const PartyView& v, const Party& inner) {
    const std::string honest_out = inner.finalize(v);
    const auto it = f.find(honest_out);
    if (it == f.end()) throw ValidationError("remap undefined on output '" + honest_out + "'");
    return it->second;
  };
  return {kind, side_a, std::make_shared<FinalizeOverrideParty>(honest, map)};
}

std::vector<AdversaryStrategy> remap_deviations(const ProtocolSpec& spec, bool side_a,
                                                const Alphabet& actions) {
  const int n = actions.size();
  long total = 1;
  for (int i = 0; i < n; ++i) total *= n;
  std::vector<AdversaryStrategy> out;
  for (long code = 0; code < total; ++code) {
    std::map<std::string, std::string> f;
    long c = code;
    for (int i = 0; i < n; ++i) {
      f[actions.symbol(i)] = actions.symbol(static_cast<int>(c % n));
      c /= n;
    }
    out.push_back(remap_deviation(spec, side_a, f));
  }
  return out;
}

AdversaryStrategy one_sided_best_response(const ProtocolSpec& spec, const Game& g) {
  if (!spec.first_mover_draws_cell)
    throw ValidationError("protocol's first mover does not draw the peer action");
  auto map = [g](const PartyView& v, const Party&) {
    const std::string& c = v.events.front().choice;
    const int j = g.actions_b().index_of(c.substr(c.find('|') + 1));
    int best = 0;
    for (int i = 1; i < g.actions_a().size(); ++i)
      if (g.u1(i, j) > g.u1(best, j)) best = i;
    return g.actions_a().symbol(best);
  };
  return {"best-response-to-peer-action", true,
          std::make_shared<FinalizeOverrideParty>(spec.party_a, map)};
}

std::vector<AdversaryStrategy> default_rational_family(const ProtocolSpec& spec, const Game& g) {
  std::vector<AdversaryStrategy> fam = remap_deviations(spec, true, g.actions_a());
  for (AdversaryStrategy& s : remap_deviations(spec, false, g.actions_b()))
    fam.push_back(std::move(s));
  if (spec.first_mover_draws_cell) fam.push_back(one_sided_best_response(spec, g));
  return fam;
}

std::pair<AdversaryStrategy, Rational> rational_deviation_search(
    const Game& g, const ProtocolSpec& spec, const std::vector<AdversaryStrategy>& family,
    bool deviator_a) {
  const CorrelatedStrategy target{spec.target};
  if (!is_correlated_eq(g, target))
    throw NotCorrelatedEq("target distribution is not a correlated equilibrium of the game");
  const PayoffPoint honest = expected_payoffs(g, target);
  const Rational base = deviator_a ? honest.p1 : honest.p2;

  EnumerateOptions opts;
  opts.accept_authority = deviator_a ? AcceptAuthority::SideB : AcceptAuthority::SideA;

  const AdversaryStrategy* best = nullptr;
  Rational best_gain = 0;
  for (const AdversaryStrategy& adv : family) {
    if (adv.side_a != deviator_a) continue;
    const Party& pa = deviator_a ? *adv.party : *spec.party_a;
    const Party& pb = deviator_a ? *spec.party_b : *adv.party;
    const ExecutionTree tree = enumerate_executions(pa, pb, spec.phases, spec.mode, opts);
    Rational value = 0;
    for (const Leaf& l : tree.leaves) {
      const int i = g.actions_a().index_of(l.output_a);
      const int j = g.actions_b().index_of(l.output_b);
      value += l.probability * (deviator_a ? g.u1(i, j) : g.u2(i, j));
    }
    const Rational gain = value - base;
    if (best == nullptr || gain > best_gain) {
      best = &adv;
      best_gain = gain;
    }
  }
  if (best == nullptr) throw ValidationError("no strategy in the family plays this side");
  return {*best, best_gain};
}

}  // namespace medsim
