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

#include "medsim/verify.hpp"

#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "medsim/lp.hpp"

namespace medsim {

CorrectnessVerdict check_correctness(const ExecutionTree& tree, const JointPMF& target) {
  const JointPMF got = output_joint(tree, target.alphabet_x(), target.alphabet_y());
  CorrectnessVerdict v;
  v.pass = true;
  for (int i = 0; i < target.alphabet_x().size(); ++i)
    for (int j = 0; j < target.alphabet_y().size(); ++j)
      if (got.at(i, j) != target.at(i, j)) {
        v.pass = false;
        v.witness_cell = {target.alphabet_x().symbol(i), target.alphabet_y().symbol(j)};
        v.expected = target.at(i, j);
        v.got = got.at(i, j);
        return v;
      }
  return v;
}

namespace {

struct ChainCheck {
  bool ok = true;
  std::string witness;
  double leak_bits = 0.0;
};

// View - Own - Peer as an exact factorization over every triple, seen or not:
// P(s, o, p) * P(o) == P(s, o) * P(o, p). The leak figure is I(View; Peer |
// Own) in bits, for reporting only.
ChainCheck markov_chain(const std::vector<Leaf>& leaves, bool side_a, const Alphabet& own_alph,
                        const Alphabet& peer_alph) {
  std::map<std::tuple<std::string, std::string, std::string>, Rational> p3;
  std::map<std::pair<std::string, std::string>, Rational> p_so, p_op;
  std::map<std::string, Rational> p_o;
  std::set<std::string> views;
  for (const Leaf& l : leaves) {
    const std::string s = side_a ? l.view_a.str() : l.view_b.str();
    const std::string& own = side_a ? l.output_a : l.output_b;
    const std::string& peer = side_a ? l.output_b : l.output_a;
    p3[{s, own, peer}] += l.probability;
    p_so[{s, own}] += l.probability;
    p_op[{own, peer}] += l.probability;
    p_o[own] += l.probability;
    views.insert(s);
  }

  ChainCheck out;
  for (const std::string& s : views) {
    for (int i = 0; i < own_alph.size() && out.ok; ++i)
      for (int j = 0; j < peer_alph.size() && out.ok; ++j) {
        const std::string& o = own_alph.symbol(i);
        const std::string& p = peer_alph.symbol(j);
        const auto t = p3.find({s, o, p});
        const auto so = p_so.find({s, o});
        const auto op = p_op.find({o, p});
        const Rational lhs = (t == p3.end() ? Rational(0) : t->second) * p_o[o];
        const Rational rhs = (so == p_so.end() ? Rational(0) : so->second) *
                             (op == p_op.end() ? Rational(0) : op->second);
        if (lhs != rhs) {
          out.ok = false;
          out.witness = "P(view,own,peer)*P(own) != P(view,own)*P(own,peer) at own=" + o +
                        " peer=" + p + " view=" + s;
        }
      }
    if (!out.ok) break;
  }

  for (const auto& [key, mass] : p3) {
    const auto& [s, o, p] = key;
    const double num = p_o[o].to_double() * mass.to_double();
    const double den = p_so[{s, o}].to_double() * p_op[{o, p}].to_double();
    out.leak_bits += mass.to_double() * std::log2(num / den);
  }
  if (out.leak_bits < 0) out.leak_bits = 0;  // rounding on an exact zero
  return out;
}

}  // namespace

SemiHonestVerdict check_semi_honest(const ExecutionTree& tree, const JointPMF& target) {
  SemiHonestVerdict v;
  v.correctness = check_correctness(tree, target);
  const ChainCheck a = markov_chain(tree.leaves, true, target.alphabet_x(), target.alphabet_y());
  const ChainCheck b = markov_chain(tree.leaves, false, target.alphabet_y(), target.alphabet_x());
  v.markov_a_ok = a.ok;
  v.markov_b_ok = b.ok;
  v.leak_a_bits = a.leak_bits;
  v.leak_b_bits = b.leak_bits;
  if (!a.ok)
    v.witness = "side A: " + a.witness;
  else if (!b.ok)
    v.witness = "side B: " + b.witness;
  v.pass = v.correctness.pass && a.ok && b.ok;
  return v;
}

MaliciousVerdict check_malicious(const JointPMF& observed, const JointPMF& target,
                                 bool honest_side_a, bool force_lp) {
  // Orient the honest party onto the columns of both joints.
  const JointPMF obs = honest_side_a ? transpose(observed) : observed;
  const JointPMF tgt = honest_side_a ? transpose(target) : target;
  if (obs.alphabet_y() != tgt.alphabet_y())
    throw AlphabetMismatch("honest output alphabet differs from the target's");

  const auto [obs_u, obs_v] = obs.marginals();
  const auto [tgt_x, tgt_v] = tgt.marginals();
  bool marginal_ok = true;
  for (int j = 0; j < tgt.alphabet_y().size(); ++j)
    marginal_ok = marginal_ok && obs_v.at(j) == tgt_v.at(j);
  if (!marginal_ok && !force_lp)
    throw MarginalMismatch("honest output marginal deviates from the target; no channel exists");

  const int nu = obs.alphabet_x().size();
  const int nx = tgt.alphabet_x().size();
  const auto var = [nx](int u, int x) { return u * nx + x; };

  LinearProgram lp;
  lp.objective.assign(nu * nx, Rational(0));
  for (int u = 0; u < nu; ++u)
    for (int x = 0; x < nx; ++x) {
      lp.variables.push_back("q(" + obs.alphabet_x().symbol(u) + "|" + tgt.alphabet_x().symbol(x) +
                             ")");
      std::vector<Rational> e(nu * nx, Rational(0));
      e[var(u, x)] = 1;
      lp.constraints.push_back({e, Relation::GreaterEq, Rational(0)});
    }
  for (int x = 0; x < nx; ++x) {
    std::vector<Rational> c(nu * nx, Rational(0));
    for (int u = 0; u < nu; ++u) c[var(u, x)] = 1;
    lp.constraints.push_back({c, Relation::Equal, Rational(1)});
  }
  for (int u = 0; u < nu; ++u)
    for (int j = 0; j < tgt.alphabet_y().size(); ++j) {
      std::vector<Rational> c(nu * nx, Rational(0));
      for (int x = 0; x < nx; ++x) c[var(u, x)] = tgt.at(x, j);
      lp.constraints.push_back({c, Relation::Equal, obs.at(u, j)});
    }

  MaliciousVerdict out;
  out.feasible = solve_lp(lp).status == LpStatus::Optimal;
  if (out.feasible)
    out.detail = "a channel from the ideal symbol reproduces the observed joint";
  else if (marginal_ok)
    out.detail = "no channel reproduces the observed joint";
  else
    out.detail = "honest output marginal deviates from the target";
  return out;
}

namespace {

EnumerateOptions honest_authority_options(bool adversary_side_a) {
  EnumerateOptions opts;
  opts.accept_authority = adversary_side_a ? AcceptAuthority::SideB : AcceptAuthority::SideA;
  return opts;
}

}  // namespace

JointPMF adversary_observed_joint(const ProtocolSpec& spec, const AdversaryStrategy& adv) {
  const AdversaryStrategy wrapped = with_view_output(adv);
  const Party& pa = adv.side_a ? *wrapped.party : *spec.party_a;
  const Party& pb = adv.side_a ? *spec.party_b : *wrapped.party;
  const ExecutionTree tree =
      enumerate_executions(pa, pb, spec.phases, spec.mode, honest_authority_options(adv.side_a));
  const Alphabet u = observed_output_alphabet(tree, adv.side_a);
  const Alphabet& honest = adv.side_a ? spec.target.alphabet_y() : spec.target.alphabet_x();
  return adv.side_a ? output_joint(tree, u, honest) : output_joint(tree, honest, u);
}

MaliciousVerdict check_malicious_adversary(const ProtocolSpec& spec, const AdversaryStrategy& adv) {
  try {
    MaliciousVerdict v =
        check_malicious(adversary_observed_joint(spec, adv), spec.target, !adv.side_a);
    v.adversary = adv.kind;
    return v;
  } catch (const MarginalMismatch& e) {
    return {false, adv.kind, e.what()};
  }
}

JointPMF attack_joint(const ProtocolSpec& spec, const AdversaryStrategy& adv) {
  const Party& pa = adv.side_a ? *adv.party : *spec.party_a;
  const Party& pb = adv.side_a ? *spec.party_b : *adv.party;
  const ExecutionTree tree =
      enumerate_executions(pa, pb, spec.phases, spec.mode, honest_authority_options(adv.side_a));
  return output_joint(tree, observed_output_alphabet(tree, true),
                      observed_output_alphabet(tree, false));
}

RationalVerdict check_rational(const Game& g, const ProtocolSpec& spec,
                               const std::vector<AdversaryStrategy>& family) {
  bool has_a = false;
  bool has_b = false;
  for (const AdversaryStrategy& s : family) (s.side_a ? has_a : has_b) = true;

  RationalVerdict v;
  if (has_a) {
    auto [best, gain] = rational_deviation_search(g, spec, family, true);
    v.best_a = best;
    v.gain_a = gain;
  }
  if (has_b) {
    auto [best, gain] = rational_deviation_search(g, spec, family, false);
    v.best_b = best;
    v.gain_b = gain;
  }
  v.pass = !(v.gain_a > Rational(0)) && !(v.gain_b > Rational(0));
  return v;
}

std::vector<AdversaryStrategy> standard_adversaries(const ProtocolSpec& spec) {
  std::vector<AdversaryStrategy> out;
  for (const bool side_a : {true, false}) {
    for (const char* kind : {"honest", "abort:1", "view-output"})
      out.push_back(make_adversary(spec, side_a, kind));
    if (spec.bit_messages)
      for (const char* kind : {"bit-fix:0", "bit-fix:1"})
        out.push_back(make_adversary(spec, side_a, kind));
  }
  return out;
}

namespace {

bool target_is_ce_of(const Game& g, const JointPMF& target) {
  return g.actions_a() == target.alphabet_x() && g.actions_b() == target.alphabet_y() &&
         is_correlated_eq(g, CorrelatedStrategy{target});
}

bool constant_payoff(const Game& g) {
  for (int i = 0; i < g.actions_a().size(); ++i)
    for (int j = 0; j < g.actions_b().size(); ++j)
      if (g.u1(i, j) != g.u1(0, 0) || g.u2(i, j) != g.u2(0, 0)) return false;
  return true;
}

}  // namespace

std::vector<LemmaOutcome> lemma_implication_suite(const std::vector<LemmaFixture>& fixtures) {
  std::vector<LemmaOutcome> outcomes;
  for (const LemmaFixture& f : fixtures) {
    LemmaOutcome o;
    o.name = f.spec.name;
    const ExecutionTree honest =
        enumerate_executions(*f.spec.party_a, *f.spec.party_b, f.spec.phases, f.spec.mode);
    o.semi_honest_pass = check_semi_honest(honest, f.spec.target).pass;
    o.all_malicious_feasible = true;
    for (const AdversaryStrategy& adv : standard_adversaries(f.spec))
      o.all_malicious_feasible =
          o.all_malicious_feasible && check_malicious_adversary(f.spec, adv).feasible;
    if (o.all_malicious_feasible && !o.semi_honest_pass)
      throw ImplicationViolated("'" + o.name +
                                "': every standard adversary is simulatable yet the honest "
                                "execution leaks");
    if (f.game && o.all_malicious_feasible && target_is_ce_of(*f.game, f.spec.target)) {
      const RationalVerdict rv =
          check_rational(*f.game, f.spec, default_rational_family(f.spec, *f.game));
      o.rational_checked = true;
      o.rational_pass = rv.pass;
      if (!rv.pass)
        throw ImplicationViolated("'" + o.name +
                                  "': every standard adversary is simulatable yet a profitable "
                                  "deviation exists");
    }
    outcomes.push_back(o);
  }
  return outcomes;
}

SecurityReport verify_protocol(const ProtocolSpec& spec, const std::optional<Game>& game) {
  SecurityReport r;
  r.name = spec.name;
  const ExecutionTree honest =
      enumerate_executions(*spec.party_a, *spec.party_b, spec.phases, spec.mode);
  r.semi_honest = check_semi_honest(honest, spec.target);
  r.correctness = r.semi_honest.correctness;
  r.malicious_all_feasible = true;
  for (const AdversaryStrategy& adv : standard_adversaries(spec)) {
    const MaliciousVerdict v = check_malicious_adversary(spec, adv);
    r.malicious.push_back({v.adversary, adv.side_a, v.feasible, v.detail});
    r.malicious_all_feasible = r.malicious_all_feasible && v.feasible;
  }
  if (game && target_is_ce_of(*game, spec.target))
    r.rational = check_rational(*game, spec, default_rational_family(spec, *game));

  r.claims_met = true;
  for (const SecurityClaim c : spec.claimed_security) {
    bool ok = true;
    switch (c) {
      case SecurityClaim::Correct:
        ok = r.correctness.pass;
        break;
      case SecurityClaim::SemiHonest:
        ok = r.semi_honest.pass;
        break;
      case SecurityClaim::Malicious:
        ok = r.malicious_all_feasible;
        break;
      case SecurityClaim::RationalAnyCeGame:
        ok = !r.rational || r.rational->pass;
        break;
      case SecurityClaim::RationalConstantPayoffOnly:
        ok = !game || !constant_payoff(*game) || (r.rational && r.rational->pass);
        break;
    }
    r.claims_met = r.claims_met && ok;
  }
  return r;
}

}  // namespace medsim
