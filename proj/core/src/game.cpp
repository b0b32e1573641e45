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

#include "medsim/game.hpp"

#include <optional>

namespace medsim {

namespace {

void check_matrix(const std::vector<std::vector<Rational>>& u, int rows, int cols,
                  const char* name) {
  if (static_cast<int>(u.size()) != rows)
    throw DimensionMismatch(std::string(name) + ": wrong row count");
  for (const auto& row : u)
    if (static_cast<int>(row.size()) != cols)
      throw DimensionMismatch(std::string(name) + ": wrong column count");
}

void check_alphabets(const Game& g, const JointPMF& p) {
  if (g.actions_a() != p.alphabet_x() || g.actions_b() != p.alphabet_y())
    throw AlphabetMismatch("strategy alphabets do not match the game");
}

}  // namespace

Game::Game(Alphabet actions_a, Alphabet actions_b, std::vector<std::vector<Rational>> u1,
           std::vector<std::vector<Rational>> u2)
    : actions_a_(std::move(actions_a)),
      actions_b_(std::move(actions_b)),
      u1_(std::move(u1)),
      u2_(std::move(u2)) {
  check_matrix(u1_, actions_a_.size(), actions_b_.size(), "u1");
  check_matrix(u2_, actions_a_.size(), actions_b_.size(), "u2");
}

PayoffPoint expected_payoffs(const Game& g, const CorrelatedStrategy& s) {
  check_alphabets(g, s.pmf);
  Rational p1 = 0, p2 = 0;
  for (int i = 0; i < g.actions_a().size(); ++i)
    for (int j = 0; j < g.actions_b().size(); ++j) {
      const Rational& m = s.pmf.at(i, j);
      if (m.is_zero()) continue;
      p1 += m * g.u1(i, j);
      p2 += m * g.u2(i, j);
    }
  return {p1, p2};
}

CorrelatedStrategy product_strategy(const StrategyProfile& s) {
  std::vector<std::vector<Rational>> entries(s.px.size());
  for (int i = 0; i < s.px.size(); ++i) {
    entries[i].resize(s.py.size());
    for (int j = 0; j < s.py.size(); ++j) entries[i][j] = s.px.at(i) * s.py.at(j);
  }
  return {JointPMF::make(s.px.alphabet(), s.py.alphabet(), entries)};
}

PayoffPoint expected_payoffs(const Game& g, const StrategyProfile& s) {
  return expected_payoffs(g, product_strategy(s));
}

bool is_nash(const Game& g, const StrategyProfile& s) {
  if (g.actions_a() != s.px.alphabet() || g.actions_b() != s.py.alphabet())
    throw AlphabetMismatch("profile alphabets do not match the game");
  const int na = g.actions_a().size(), nb = g.actions_b().size();

  // Alice: every supported action must attain the max payoff against py.
  std::vector<Rational> ua(na, Rational(0));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) ua[i] += s.py.at(j) * g.u1(i, j);
  Rational best_a = ua[0];
  for (int i = 1; i < na; ++i)
    if (ua[i] > best_a) best_a = ua[i];
  for (int i = 0; i < na; ++i)
    if (!s.px.at(i).is_zero() && ua[i] != best_a) return false;

  std::vector<Rational> ub(nb, Rational(0));
  for (int j = 0; j < nb; ++j)
    for (int i = 0; i < na; ++i) ub[j] += s.px.at(i) * g.u2(i, j);
  Rational best_b = ub[0];
  for (int j = 1; j < nb; ++j)
    if (ub[j] > best_b) best_b = ub[j];
  for (int j = 0; j < nb; ++j)
    if (!s.py.at(j).is_zero() && ub[j] != best_b) return false;
  return true;
}

bool is_correlated_eq(const Game& g, const CorrelatedStrategy& s) {
  check_alphabets(g, s.pmf);
  const int na = g.actions_a().size(), nb = g.actions_b().size();
  for (int x = 0; x < na; ++x) {
    bool supported = false;
    for (int j = 0; j < nb; ++j)
      if (!s.pmf.at(x, j).is_zero()) supported = true;
    if (!supported) continue;
    for (int alt = 0; alt < na; ++alt) {
      Rational diff = 0;
      for (int j = 0; j < nb; ++j) diff += s.pmf.at(x, j) * (g.u1(x, j) - g.u1(alt, j));
      if (diff < Rational(0)) return false;
    }
  }
  for (int y = 0; y < nb; ++y) {
    bool supported = false;
    for (int i = 0; i < na; ++i)
      if (!s.pmf.at(i, y).is_zero()) supported = true;
    if (!supported) continue;
    for (int alt = 0; alt < nb; ++alt) {
      Rational diff = 0;
      for (int i = 0; i < na; ++i) diff += s.pmf.at(i, y) * (g.u2(i, y) - g.u2(i, alt));
      if (diff < Rational(0)) return false;
    }
  }
  return true;
}

namespace {

// Linear function h(t) = t*at1 + (1-t)*at0 on [0,1], exact.
struct Linear {
  Rational at0, at1;  // h(0), h(1)
  bool identically_zero() const { return at0.is_zero() && at1.is_zero(); }
  // Root in [0,1] when the function changes value; empty if constant.
  std::optional<Rational> root() const {
    if (at0 == at1) return std::nullopt;
    Rational t = at0 / (at0 - at1);
    if (t < Rational(0) || t > Rational(1)) return std::nullopt;
    return t;
  }
  // Whether {t in [0,1] : h(t) <= 0} has positive length (assumes not == 0).
  bool nonpositive_on_interval() const { return at0 < Rational(0) || at1 < Rational(0); }
  bool nonnegative_on_interval() const { return at0 > Rational(0) || at1 > Rational(0); }
};

}  // namespace

std::vector<StrategyProfile> enumerate_nash_2x2(const Game& g) {
  if (g.actions_a().size() != 2 || g.actions_b().size() != 2)
    throw NotTwoByTwo("enumerate_nash_2x2 requires two actions per player");

  // f: Alice's advantage of action 0 over action 1 as a function of q, the
  // probability Bob puts on his action 0. g2: symmetric for Bob.
  Linear f{g.u1(0, 1) - g.u1(1, 1), g.u1(0, 0) - g.u1(1, 0)};
  Linear g2{g.u2(1, 0) - g.u2(1, 1), g.u2(0, 0) - g.u2(0, 1)};

  if (f.identically_zero() || g2.identically_zero())
    throw DegenerateGame("a player is indifferent against every opponent strategy");

  // Boundary indifference can open a segment of equilibria.
  if (f.at0.is_zero() && g2.nonpositive_on_interval())
    throw DegenerateGame("continuum of equilibria against Bob's pure second action");
  if (f.at1.is_zero() && g2.nonnegative_on_interval())
    throw DegenerateGame("continuum of equilibria against Bob's pure first action");
  if (g2.at0.is_zero() && f.nonpositive_on_interval())
    throw DegenerateGame("continuum of equilibria against Alice's pure second action");
  if (g2.at1.is_zero() && f.nonnegative_on_interval())
    throw DegenerateGame("continuum of equilibria against Alice's pure first action");

  std::vector<StrategyProfile> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      StrategyProfile s{MarginalPMF::point(g.actions_a(), g.actions_a().symbol(i)),
                        MarginalPMF::point(g.actions_b(), g.actions_b().symbol(j))};
      if (is_nash(g, s)) out.push_back(std::move(s));
    }

  auto q = f.root();   // Bob's mix making Alice indifferent
  auto p = g2.root();  // Alice's mix making Bob indifferent
  if (q && p && *q > Rational(0) && *q < Rational(1) && *p > Rational(0) &&
      *p < Rational(1)) {
    out.push_back(StrategyProfile{
        MarginalPMF(g.actions_a(), {*p, Rational(1) - *p}),
        MarginalPMF(g.actions_b(), {*q, Rational(1) - *q})});
  }
  return out;
}

}  // namespace medsim
