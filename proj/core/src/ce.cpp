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

#include "medsim/ce.hpp"

#include <algorithm>
#include <map>

namespace medsim {

LinearProgram ce_polytope_lp(const Game& g, const Rational& w1, const Rational& w2) {
  const int na = g.actions_a().size();
  const int nb = g.actions_b().size();
  const int n = na * nb;
  auto cell = [nb](int i, int j) { return i * nb + j; };

  LinearProgram lp;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      lp.variables.push_back("p(" + g.actions_a().symbol(i) + "," + g.actions_b().symbol(j) + ")");
  lp.objective.assign(n, Rational(0));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      lp.objective[cell(i, j)] = w1 * g.u1(i, j) + w2 * g.u2(i, j);

  for (int k = 0; k < n; ++k) {
    LpConstraint nonneg{std::vector<Rational>(n, Rational(0)), Relation::GreaterEq, Rational(0)};
    nonneg.coeffs[k] = 1;
    lp.constraints.push_back(std::move(nonneg));
  }
  lp.constraints.push_back({std::vector<Rational>(n, Rational(1)), Relation::Equal, Rational(1)});

  // Per-signal swap inequalities: signal i, deviation i'.
  for (int i = 0; i < na; ++i)
    for (int ip = 0; ip < na; ++ip) {
      if (ip == i) continue;
      LpConstraint c{std::vector<Rational>(n, Rational(0)), Relation::GreaterEq, Rational(0)};
      for (int j = 0; j < nb; ++j) c.coeffs[cell(i, j)] = g.u1(i, j) - g.u1(ip, j);
      lp.constraints.push_back(std::move(c));
    }
  for (int j = 0; j < nb; ++j)
    for (int jp = 0; jp < nb; ++jp) {
      if (jp == j) continue;
      LpConstraint c{std::vector<Rational>(n, Rational(0)), Relation::GreaterEq, Rational(0)};
      for (int i = 0; i < na; ++i) c.coeffs[cell(i, j)] = g.u2(i, j) - g.u2(i, jp);
      lp.constraints.push_back(std::move(c));
    }
  return lp;
}

std::pair<CorrelatedStrategy, PayoffPoint> optimize_ce(
    const Game& g, const std::pair<Rational, Rational>& weights) {
  const int na = g.actions_a().size();
  const int nb = g.actions_b().size();
  LinearProgram lp = ce_polytope_lp(g, weights.first, weights.second);
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal)
    throw MalformedLP("correlated-equilibrium polytope solve did not reach an optimum");

  std::vector<std::vector<Rational>> rows(na, std::vector<Rational>(nb));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) rows[i][j] = sol.assignment[i * nb + j];
  CorrelatedStrategy s{JointPMF::make(g.actions_a(), g.actions_b(), rows)};
  if (!is_correlated_eq(g, s))
    throw NotCorrelatedEq("optimizer returned a point outside the polytope");
  return {s, expected_payoffs(g, s)};
}

namespace {

Rational cross(const PayoffPoint& o, const PayoffPoint& a, const PayoffPoint& b) {
  return (a.p1 - o.p1) * (b.p2 - o.p2) - (a.p2 - o.p2) * (b.p1 - o.p1);
}

bool lex_less(const PayoffPoint& a, const PayoffPoint& b) {
  return a.p1 < b.p1 || (a.p1 == b.p1 && a.p2 < b.p2);
}

// Monotone chain; strictly convex turns only, so collinear boundary points
// are dropped. Returns vertices counterclockwise starting at the
// lexicographically smallest point.
std::vector<PayoffPoint> convex_hull(std::vector<PayoffPoint> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<PayoffPoint> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= Rational(0)) --k;
    h[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= Rational(0)) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);  // last point repeats the first
  return h;
}

}  // namespace

std::vector<PayoffPoint> nash_payoff_hull(const Game& g) {
  std::vector<PayoffPoint> pts;
  for (const StrategyProfile& s : enumerate_nash_2x2(g)) pts.push_back(expected_payoffs(g, s));
  return convex_hull(std::move(pts));
}

bool point_in_hull(const std::vector<PayoffPoint>& hull, const PayoffPoint& p) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return hull[0] == p;
  if (hull.size() == 2) {
    // On the segment: collinear and within the bounding box.
    if (cross(hull[0], hull[1], p) != Rational(0)) return false;
    const PayoffPoint& a = lex_less(hull[0], hull[1]) ? hull[0] : hull[1];
    const PayoffPoint& b = lex_less(hull[0], hull[1]) ? hull[1] : hull[0];
    return !lex_less(p, a) && !lex_less(b, p);
  }
  for (size_t i = 0; i < hull.size(); ++i) {
    const PayoffPoint& a = hull[i];
    const PayoffPoint& b = hull[(i + 1) % hull.size()];
    if (cross(a, b, p) < Rational(0)) return false;
  }
  return true;
}

JointPMF lift_convex_combination(const Game& g,
                                 const std::vector<StrategyProfile>& equilibria,
                                 const std::vector<Rational>& weights) {
  if (equilibria.empty()) throw BadWeights("no equilibria to combine");
  if (weights.size() != equilibria.size())
    throw BadWeights("weight count does not match equilibrium count");
  Rational total = 0;
  for (const Rational& w : weights) {
    if (w < Rational(0)) throw BadWeights("negative weight");
    total += w;
  }
  if (total != Rational(1)) throw BadWeights("weights must sum to 1");
  for (const StrategyProfile& s : equilibria)
    if (!is_nash(g, s)) throw NotNash("profile is not a Nash equilibrium of the game");

  const int na = g.actions_a().size();
  const int nb = g.actions_b().size();
  const int k = static_cast<int>(equilibria.size());
  std::vector<std::string> ax, ay;
  // Label-major so each shared-label block is contiguous.
  for (int z = 0; z < k; ++z)
    for (int i = 0; i < na; ++i)
      ax.push_back(g.actions_a().symbol(i) + "@z" + std::to_string(z));
  for (int z = 0; z < k; ++z)
    for (int j = 0; j < nb; ++j)
      ay.push_back(g.actions_b().symbol(j) + "@z" + std::to_string(z));

  std::vector<std::vector<Rational>> rows(k * na, std::vector<Rational>(k * nb, Rational(0)));
  for (int z = 0; z < k; ++z)
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < nb; ++j)
        rows[z * na + i][z * nb + j] = weights[z] * equilibria[z].px.at(i) * equilibria[z].py.at(j);
  return JointPMF::make(Alphabet(ax), Alphabet(ay), rows);
}

Game lifted_game(const Game& g, int num_labels) {
  if (num_labels < 1) throw ValidationError("need at least one label");
  const int na = g.actions_a().size();
  const int nb = g.actions_b().size();
  std::vector<std::string> ax, ay;
  for (int z = 0; z < num_labels; ++z)
    for (int i = 0; i < na; ++i)
      ax.push_back(g.actions_a().symbol(i) + "@z" + std::to_string(z));
  for (int z = 0; z < num_labels; ++z)
    for (int j = 0; j < nb; ++j)
      ay.push_back(g.actions_b().symbol(j) + "@z" + std::to_string(z));
  std::vector<std::vector<Rational>> u1(num_labels * na, std::vector<Rational>(num_labels * nb));
  std::vector<std::vector<Rational>> u2 = u1;
  for (int zi = 0; zi < num_labels; ++zi)
    for (int i = 0; i < na; ++i)
      for (int zj = 0; zj < num_labels; ++zj)
        for (int j = 0; j < nb; ++j) {
          u1[zi * na + i][zj * nb + j] = g.u1(i, j);
          u2[zi * na + i][zj * nb + j] = g.u2(i, j);
        }
  return Game(Alphabet(ax), Alphabet(ay), std::move(u1), std::move(u2));
}

namespace {

std::string base_symbol(const std::string& lifted) {
  const size_t at = lifted.rfind('@');
  if (at == std::string::npos)
    throw ValidationError("symbol '" + lifted + "' carries no label suffix");
  return lifted.substr(0, at);
}

}  // namespace

JointPMF project_actions(const Alphabet& base_x, const Alphabet& base_y,
                         const JointPMF& lifted) {
  std::vector<std::vector<Rational>> rows(base_x.size(),
                                          std::vector<Rational>(base_y.size(), Rational(0)));
  for (int i = 0; i < lifted.alphabet_x().size(); ++i) {
    const int bi = base_x.index_of(base_symbol(lifted.alphabet_x().symbol(i)));
    for (int j = 0; j < lifted.alphabet_y().size(); ++j) {
      const int bj = base_y.index_of(base_symbol(lifted.alphabet_y().symbol(j)));
      rows[bi][bj] += lifted.at(i, j);
    }
  }
  return JointPMF::make(base_x, base_y, rows);
}

}  // namespace medsim
