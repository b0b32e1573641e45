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

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "medsim/builtins.hpp"
#include "medsim/ce.hpp"
#include "medsim/engine.hpp"
#include "medsim/ergodic.hpp"
#include "medsim/errors.hpp"
#include "medsim/protocols.hpp"
#include "medsim/specfile.hpp"
#include "medsim/verify.hpp"

namespace {

using namespace medsim;

// Arguments with a '.' or '/' name files; bare words name builtins.
bool looks_like_path(const std::string& arg) {
  return arg.find('/') != std::string::npos || arg.find('.') != std::string::npos;
}

JointPMF resolve_dist(const std::string& arg) {
  if (!looks_like_path(arg)) return builtin_dist(arg);
  SpecFile f = load_spec_file(arg);
  if (f.kind != SpecFile::Kind::Dist)
    throw ValidationError("'" + arg + "' does not hold a distribution");
  return *f.dist;
}

Game resolve_game(const std::string& arg) {
  if (!looks_like_path(arg)) return builtin_game(arg);
  SpecFile f = load_spec_file(arg);
  if (f.kind != SpecFile::Kind::Game)
    throw ValidationError("'" + arg + "' does not hold a game");
  return *f.game;
}

ProtocolSpec resolve_protocol(const std::string& arg) {
  if (arg.rfind("mediator:", 0) == 0) return mediator_sampler(resolve_dist(arg.substr(9)));
  if (arg.rfind("one-sided:", 0) == 0) return one_sided_sampler(resolve_dist(arg.substr(10)));
  return builtin_protocol(arg);
}

void print_joint(const JointPMF& p) {
  const Alphabet& ax = p.alphabet_x();
  const Alphabet& ay = p.alphabet_y();
  size_t rw = 0;
  for (int i = 0; i < ax.size(); ++i) rw = std::max(rw, ax.symbol(i).size());
  std::vector<size_t> cw(ay.size());
  for (int j = 0; j < ay.size(); ++j) {
    cw[j] = ay.symbol(j).size();
    for (int i = 0; i < ax.size(); ++i) cw[j] = std::max(cw[j], p.at(i, j).str().size());
  }
  std::cout << std::string(rw, ' ');
  for (int j = 0; j < ay.size(); ++j)
    std::cout << "  " << std::setw(static_cast<int>(cw[j])) << ay.symbol(j);
  std::cout << '\n';
  for (int i = 0; i < ax.size(); ++i) {
    std::cout << std::setw(static_cast<int>(rw)) << ax.symbol(i);
    for (int j = 0; j < ay.size(); ++j)
      std::cout << "  " << std::setw(static_cast<int>(cw[j])) << p.at(i, j).str();
    std::cout << '\n';
  }
}

std::string show_mixed(const MarginalPMF& m) {
  std::string out;
  for (int i = 0; i < m.size(); ++i) {
    if (m.at(i).is_zero()) continue;
    if (!out.empty()) out += " ";
    out += m.alphabet().symbol(i) + ":" + m.at(i).str();
  }
  return out;
}

const char* pass_fail(bool ok) { return ok ? "pass" : "fail"; }

void run_classify(const std::string& dist_arg, const std::string& channel,
                  const std::string& adversary) {
  const Channel ch = channel == "polite" ? Channel::PoliteTalk : Channel::CheapTalk;
  const Adversary ad = adversary == "malicious" ? Adversary::Malicious : Adversary::SemiHonest;
  const FeasibilityVerdict v = classify(resolve_dist(dist_arg), ch, ad);
  std::cout << (v.feasible ? "feasible" : "infeasible") << " (" << to_string(v.reason) << ")\n";
}

void run_decompose(const std::string& dist_arg) {
  const JointPMF p = resolve_dist(dist_arg);
  const ErgodicDecomposition d = ergodic_decomposition(p);
  std::cout << "components: " << d.labels.size() << '\n';
  for (const std::string& w : d.labels) {
    std::cout << w << ": mass " << d.component_mass.at(w).str() << " X={";
    bool first = true;
    for (const auto& [x, label] : d.component_of_x)
      if (label == w) {
        std::cout << (first ? "" : ",") << x;
        first = false;
      }
    std::cout << "} Y={";
    first = true;
    for (const auto& [y, label] : d.component_of_y)
      if (label == w) {
        std::cout << (first ? "" : ",") << y;
        first = false;
      }
    std::cout << "}\n";
  }
  std::cout << "separable: " << (is_separable(p) ? "yes" : "no") << '\n';
  std::cout << "independent: " << (is_product(p) ? "yes" : "no") << '\n';
}

void run_equilibria(const std::string& game_arg) {
  const Game g = resolve_game(game_arg);
  const auto eqs = enumerate_nash_2x2(g);
  std::cout << "nash equilibria: " << eqs.size() << '\n';
  int k = 1;
  for (const StrategyProfile& e : eqs) {
    const PayoffPoint pay = expected_payoffs(g, e);
    std::cout << k++ << ": A=(" << show_mixed(e.px) << ") B=(" << show_mixed(e.py)
              << ") payoff (" << pay.p1.str() << ", " << pay.p2.str() << ")\n";
  }
  std::cout << "payoff hull vertices:";
  for (const PayoffPoint& v : nash_payoff_hull(g))
    std::cout << " (" << v.p1.str() << ", " << v.p2.str() << ")";
  std::cout << '\n';
}

void run_ce_opt(const std::string& game_arg, const std::string& w1s, const std::string& w2s) {
  const Game g = resolve_game(game_arg);
  const Rational w1 = Rational::parse(w1s);
  const Rational w2 = Rational::parse(w2s);
  const auto [strategy, payoff] = optimize_ce(g, {w1, w2});
  std::cout << "optimal correlated strategy:\n";
  print_joint(strategy.pmf);
  std::cout << "payoffs: (" << payoff.p1.str() << ", " << payoff.p2.str() << ")\n";
  std::cout << "weighted value: " << (w1 * payoff.p1 + w2 * payoff.p2).str() << '\n';
}

void run_simulate(const std::string& proto_arg, long trials, uint64_t seed, bool exact) {
  const ProtocolSpec spec = resolve_protocol(proto_arg);
  std::cout << "protocol: " << spec.name << '\n';
  if (exact) {
    const ExecutionTree t =
        enumerate_executions(*spec.party_a, *spec.party_b, spec.phases, spec.mode);
    const JointPMF out = output_joint(t, spec.target.alphabet_x(), spec.target.alphabet_y());
    std::cout << "exact output joint:\n";
    print_joint(out);
    for (const LoopAnnotation& a : t.loop_annotations)
      std::cout << "retry phase " << a.phase_index
                << " acceptance probability: " << a.acceptance_probability.str() << '\n';
    std::cout << "matches target: " << (out == spec.target ? "yes" : "no") << '\n';
    return;
  }
  std::cout << "trials: " << trials << '\n';
  std::cout << "seed: " << seed << '\n';
  const JointPMF m =
      monte_carlo(*spec.party_a, *spec.party_b, spec.phases, spec.mode,
                  spec.target.alphabet_x(), spec.target.alphabet_y(), trials, seed);
  std::cout << "empirical joint:\n";
  print_joint(m);
  std::cout << "tv distance to target: " << tv_distance(m, spec.target).str() << '\n';
}

void run_attack(const std::string& proto_arg, const std::string& kind, const std::string& side) {
  const ProtocolSpec spec = resolve_protocol(proto_arg);
  const AdversaryStrategy adv = make_adversary(spec, side == "A", kind);
  const JointPMF j = attack_joint(spec, adv);
  std::cout << "adversary: " << adv.kind << " on side " << side << '\n';
  std::cout << "output joint (A rows, B columns):\n";
  print_joint(j);
  const auto [ma, mb] = j.marginals();
  const MarginalPMF& honest = adv.side_a ? mb : ma;
  std::cout << "honest side " << (adv.side_a ? "B" : "A") << " output:\n";
  for (int i = 0; i < honest.size(); ++i)
    std::cout << "Pr[output=" << honest.alphabet().symbol(i) << "] = " << honest.at(i).str()
              << '\n';
}

// Returns the process exit code: 1 when the protocol misses its claims.
int run_verify(const std::string& proto_arg, const std::string& game_arg) {
  const ProtocolSpec spec = resolve_protocol(proto_arg);
  std::optional<Game> game;
  if (!game_arg.empty()) game = resolve_game(game_arg);
  const SecurityReport r = verify_protocol(spec, game);
  std::cout << "protocol: " << r.name << '\n';
  std::cout << "correctness: " << pass_fail(r.correctness.pass) << '\n';
  if (!r.correctness.pass && r.correctness.witness_cell)
    std::cout << "  cell (" << r.correctness.witness_cell->first << ", "
              << r.correctness.witness_cell->second << "): expected "
              << r.correctness.expected.str() << ", got " << r.correctness.got.str() << '\n';
  std::cout << "semi-honest: " << pass_fail(r.semi_honest.pass) << '\n';
  if (!r.semi_honest.pass) {
    std::cout << "  leak A: " << r.semi_honest.leak_a_bits
              << " bits, leak B: " << r.semi_honest.leak_b_bits << " bits\n";
    if (!r.semi_honest.witness.empty()) std::cout << "  witness: " << r.semi_honest.witness << '\n';
  }
  std::cout << "malicious:\n";
  for (const MaliciousLine& line : r.malicious) {
    std::cout << "  side " << (line.side_a ? "A" : "B") << " " << line.adversary << ": "
              << (line.feasible ? "simulatable" : "not simulatable");
    if (!line.detail.empty()) std::cout << " (" << line.detail << ")";
    std::cout << '\n';
  }
  if (r.rational)
    std::cout << "rational: " << pass_fail(r.rational->pass) << " (gain A "
              << r.rational->gain_a.str() << ", gain B " << r.rational->gain_b.str() << ")\n";
  else
    std::cout << "rational: not checked\n";
  std::cout << "claims met: " << (r.claims_met ? "yes" : "no") << '\n';
  return r.claims_met ? 0 : 1;
}

void run_table1() {
  const std::vector<std::pair<Channel, Adversary>> combos{
      {Channel::CheapTalk, Adversary::SemiHonest},
      {Channel::CheapTalk, Adversary::Malicious},
      {Channel::PoliteTalk, Adversary::SemiHonest},
      {Channel::PoliteTalk, Adversary::Malicious},
  };
  const std::vector<std::string> headers{"cheap+semi-honest", "cheap+malicious",
                                         "polite+semi-honest", "polite+malicious"};
  size_t name_w = std::string("distribution").size();
  for (const std::string& n : builtin_dist_names()) name_w = std::max(name_w, n.size());
  std::cout << std::left << std::setw(static_cast<int>(name_w)) << "distribution";
  for (const std::string& h : headers) std::cout << "  " << h;
  std::cout << '\n';
  for (const std::string& name : builtin_dist_names()) {
    const JointPMF p = builtin_dist(name);
    std::cout << std::left << std::setw(static_cast<int>(name_w)) << name;
    for (size_t k = 0; k < combos.size(); ++k) {
      const FeasibilityVerdict v = classify(p, combos[k].first, combos[k].second);
      std::cout << "  " << std::left << std::setw(static_cast<int>(headers[k].size()))
                << (v.feasible ? "feasible" : "infeasible");
    }
    std::cout << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact two-party sampling protocols, their security checks, and the game theory "
               "they replace a trusted mediator for"};
  app.require_subcommand(1);
  int rc = 0;

  std::string cl_dist, cl_channel = "cheap", cl_adversary = "semi-honest";
  auto* cmd_classify = app.add_subcommand("classify", "feasibility of one distribution");
  cmd_classify->add_option("dist", cl_dist, "builtin distribution name or .dist file")->required();
  cmd_classify->add_option("--channel", cl_channel, "cheap or polite")
      ->check(CLI::IsMember({"cheap", "polite"}));
  cmd_classify->add_option("--adversary", cl_adversary, "semi-honest or malicious")
      ->check(CLI::IsMember({"semi-honest", "malicious"}));
  cmd_classify->callback([&] { run_classify(cl_dist, cl_channel, cl_adversary); });

  std::string de_dist;
  auto* cmd_decompose = app.add_subcommand("decompose", "ergodic components of a distribution");
  cmd_decompose->add_option("dist", de_dist, "builtin distribution name or .dist file")
      ->required();
  cmd_decompose->callback([&] { run_decompose(de_dist); });

  std::string eq_game;
  auto* cmd_equilibria = app.add_subcommand("equilibria", "nash equilibria of a 2x2 game");
  cmd_equilibria->add_option("game", eq_game, "builtin game name or .game file")->required();
  cmd_equilibria->callback([&] { run_equilibria(eq_game); });

  std::string ce_game, ce_w1 = "1", ce_w2 = "1";
  auto* cmd_ce = app.add_subcommand("ce-opt", "optimize over the correlated equilibria");
  cmd_ce->add_option("game", ce_game, "builtin game name or .game file")->required();
  cmd_ce->add_option("--w1", ce_w1, "weight on player 1's payoff (rational)");
  cmd_ce->add_option("--w2", ce_w2, "weight on player 2's payoff (rational)");
  cmd_ce->callback([&] { run_ce_opt(ce_game, ce_w1, ce_w2); });

  std::string si_proto;
  long si_trials = 10000;
  uint64_t si_seed = 0;
  bool si_exact = false;
  auto* cmd_simulate = app.add_subcommand("simulate", "run a protocol");
  cmd_simulate
      ->add_option("protocol", si_proto,
                   "builtin protocol, mediator:<dist>, or one-sided:<dist>")
      ->required();
  cmd_simulate->add_option("--trials", si_trials, "sampled runs");
  cmd_simulate->add_option("--seed", si_seed, "master seed");
  cmd_simulate->add_flag("--exact", si_exact, "enumerate the execution tree instead of sampling");
  cmd_simulate->callback([&] { run_simulate(si_proto, si_trials, si_seed, si_exact); });

  std::string at_proto, at_kind, at_side = "B";
  auto* cmd_attack = app.add_subcommand("attack", "run a protocol against a deviating party");
  cmd_attack
      ->add_option("protocol", at_proto,
                   "builtin protocol, mediator:<dist>, or one-sided:<dist>")
      ->required();
  cmd_attack
      ->add_option("--adversary", at_kind,
                   "honest | abort:R | bit-fix:T | view-output | custom-table:...;out=SYM")
      ->required();
  cmd_attack->add_option("--side", at_side, "A or B")->check(CLI::IsMember({"A", "B"}));
  cmd_attack->callback([&] { run_attack(at_proto, at_kind, at_side); });

  std::string ve_proto, ve_game;
  auto* cmd_verify = app.add_subcommand("verify", "check a protocol against its claims");
  cmd_verify
      ->add_option("protocol", ve_proto,
                   "builtin protocol, mediator:<dist>, or one-sided:<dist>")
      ->required();
  cmd_verify->add_option("--game", ve_game, "game whose equilibrium the target should be");
  cmd_verify->callback([&] { rc = run_verify(ve_proto, ve_game); });

  auto* cmd_table = app.add_subcommand("table1", "feasibility grid over the stock distributions");
  cmd_table->callback([&] { run_table1(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
