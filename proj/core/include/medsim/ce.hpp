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

#ifndef MEDSIM_CE_HPP
#define MEDSIM_CE_HPP

#include <utility>
#include <vector>

#include "medsim/game.hpp"
#include "medsim/lp.hpp"

namespace medsim {

// Maximizes w1*E[u1] + w2*E[u2] over the correlated-equilibrium polytope of
// g (an exact LP). The polytope is never empty, so this always succeeds; the
// returned strategy is re-checked with is_correlated_eq before return.
std::pair<CorrelatedStrategy, PayoffPoint> optimize_ce(
    const Game& g, const std::pair<Rational, Rational>& weights);

// The CE constraint system as an explicit LP over one variable per action
// cell (row-major). Shared by optimize_ce and its test oracle.
LinearProgram ce_polytope_lp(const Game& g, const Rational& w1, const Rational& w2);

// Vertices of the convex hull of the Nash payoff points of a 2x2 game,
// counterclockwise, exact arithmetic. Collinear point sets come back as the
// two extreme points; a single point as itself. DegenerateGame propagates
// from the equilibrium enumeration.
std::vector<PayoffPoint> nash_payoff_hull(const Game& g);

// Exact point-in-convex-polygon test; hull vertices counterclockwise as
// produced by nash_payoff_hull. Boundary counts as inside.
bool point_in_hull(const std::vector<PayoffPoint>& hull, const PayoffPoint& p);

// Extends each Nash profile with a shared label z drawn with the given
// weight, producing the joint distribution of ((x,z),(y,z)) on alphabets
// labeled "sym@z<i>". The result is separable by construction: each label
// contributes an independent block. Throws NotNash when a profile fails
// is_nash, BadWeights when the weights are not a distribution over the list.
JointPMF lift_convex_combination(const Game& g,
                                 const std::vector<StrategyProfile>& equilibria,
                                 const std::vector<Rational>& weights);

// The game the lifted distribution is played in: utilities depend on actions
// only, duplicated across labels. num_labels must match the lift.
Game lifted_game(const Game& g, int num_labels);

// Marginalizes the label coordinate of a lifted distribution back onto the
// base action alphabets.
JointPMF project_actions(const Alphabet& base_x, const Alphabet& base_y,
                         const JointPMF& lifted);

}  // namespace medsim

#endif  // MEDSIM_CE_HPP
