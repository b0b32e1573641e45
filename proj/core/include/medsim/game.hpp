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

#ifndef MEDSIM_GAME_HPP
#define MEDSIM_GAME_HPP

#include <string>
#include <vector>

#include "medsim/pmf.hpp"

namespace medsim {

// Two-player strategic game with rational-valued utilities. Row player is
// Alice (actions_a), column player is Bob (actions_b).
class Game {
 public:
  Game(Alphabet actions_a, Alphabet actions_b, std::vector<std::vector<Rational>> u1,
       std::vector<std::vector<Rational>> u2);

  const Alphabet& actions_a() const { return actions_a_; }
  const Alphabet& actions_b() const { return actions_b_; }
  const Rational& u1(int i, int j) const { return u1_.at(i).at(j); }
  const Rational& u2(int i, int j) const { return u2_.at(i).at(j); }
  const std::vector<std::vector<Rational>>& u1_rows() const { return u1_; }
  const std::vector<std::vector<Rational>>& u2_rows() const { return u2_; }

 private:
  Alphabet actions_a_, actions_b_;
  std::vector<std::vector<Rational>> u1_, u2_;
};

// Independent mixed strategies, one per player.
struct StrategyProfile {
  MarginalPMF px;
  MarginalPMF py;
};

// Joint distribution over action profiles, as drawn by a mediator.
struct CorrelatedStrategy {
  JointPMF pmf;
};

struct PayoffPoint {
  Rational p1;
  Rational p2;
  friend bool operator==(const PayoffPoint& a, const PayoffPoint& b) {
    return a.p1 == b.p1 && a.p2 == b.p2;
  }
};

// Exact expected payoffs sum_{x,y} P(x,y) u_i(x,y). Throws AlphabetMismatch.
PayoffPoint expected_payoffs(const Game& g, const CorrelatedStrategy& s);
PayoffPoint expected_payoffs(const Game& g, const StrategyProfile& s);

// The independent product distribution of a strategy profile.
CorrelatedStrategy product_strategy(const StrategyProfile& s);

// True iff every supported action of each player is a best response to the
// other's mixed strategy, checked against all pure deviations exactly.
bool is_nash(const Game& g, const StrategyProfile& s);

// True iff for every signal x with positive marginal and every alternative
// x': sum_y P(x,y) [u1(x,y) - u1(x',y)] >= 0, and symmetrically for Bob.
bool is_correlated_eq(const Game& g, const CorrelatedStrategy& s);

// All Nash equilibria of a 2x2 game: the pure ones plus the fully-mixed one
// obtained from the indifference equations. Throws NotTwoByTwo for other
// sizes and DegenerateGame when a continuum of equilibria exists.
std::vector<StrategyProfile> enumerate_nash_2x2(const Game& g);

}  // namespace medsim

#endif  // MEDSIM_GAME_HPP
