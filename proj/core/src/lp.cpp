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

#include "medsim/lp.hpp"

namespace medsim {

namespace {

// Dense simplex tableau over exact rationals. Rows are constraints in
// equality form with rhs >= 0; the last row is the objective row holding
// reduced costs (positive entry = improving column for maximization).
class Tableau {
 public:
  Tableau(int rows, int cols) : rows_(rows), cols_(cols), a_(rows + 1, std::vector<Rational>(cols + 1, Rational(0))), basis_(rows, -1) {}

  Rational& at(int r, int c) { return a_[r][c]; }
  Rational& rhs(int r) { return a_[r][cols_]; }
  Rational& obj(int c) { return a_[rows_][c]; }
  Rational& obj_rhs() { return a_[rows_][cols_]; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int basis(int r) const { return basis_[r]; }
  void set_basis(int r, int c) { basis_[r] = c; }

  void pivot(int pr, int pc) {
    const Rational piv = a_[pr][pc];
    for (int c = 0; c <= cols_; ++c) a_[pr][c] /= piv;
    for (int r = 0; r <= rows_; ++r) {
      if (r == pr || a_[r][pc].is_zero()) continue;
      const Rational factor = a_[r][pc];
      for (int c = 0; c <= cols_; ++c) a_[r][c] -= factor * a_[pr][c];
    }
    basis_[pr] = pc;
  }

  // Bland's rule: entering = lowest-index improving column among `eligible`,
  // leaving = min ratio, ties broken by lowest basis variable index.
  // Returns false when no improving column exists (optimum reached).
  // Throws Unbounded via sentinel return of -1 row.
  enum class Step { Optimal, Pivoted, Unbounded };
  Step step(int eligible_cols) {
    int pc = -1;
    for (int c = 0; c < eligible_cols; ++c)
      if (obj(c) > Rational(0)) {
        pc = c;
        break;
      }
    if (pc < 0) return Step::Optimal;
    int pr = -1;
    for (int r = 0; r < rows_; ++r) {
      if (a_[r][pc] <= Rational(0)) continue;
      if (pr < 0) {
        pr = r;
        continue;
      }
      const Rational cur = rhs(r) / a_[r][pc];
      const Rational best = rhs(pr) / a_[pr][pc];
      if (cur < best || (cur == best && basis_[r] < basis_[pr])) pr = r;
    }
    if (pr < 0) return Step::Unbounded;
    pivot(pr, pc);
    return Step::Pivoted;
  }

 private:
  int rows_, cols_;
  std::vector<std::vector<Rational>> a_;  // tableau incl. objective row + rhs col
  std::vector<int> basis_;
};

bool satisfies(const LpConstraint& c, const std::vector<Rational>& x) {
  Rational lhs = 0;
  for (size_t j = 0; j < x.size(); ++j) lhs += c.coeffs[j] * x[j];
  switch (c.rel) {
    case Relation::LessEq: return lhs <= c.rhs;
    case Relation::Equal: return lhs == c.rhs;
    case Relation::GreaterEq: return lhs >= c.rhs;
  }
  return false;
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const int n = static_cast<int>(lp.variables.size());
  if (static_cast<int>(lp.objective.size()) != n)
    throw MalformedLP("objective length does not match variable count");
  for (const auto& c : lp.constraints)
    if (static_cast<int>(c.coeffs.size()) != n)
      throw MalformedLP("constraint length does not match variable count");

  const int m = static_cast<int>(lp.constraints.size());
  // Free variables split as x_j = y_{2j} - y_{2j+1}; one slack/surplus column
  // per inequality; one artificial per row.
  int n_split = 2 * n;
  int n_slack = 0;
  for (const auto& c : lp.constraints)
    if (c.rel != Relation::Equal) ++n_slack;
  const int art0 = n_split + n_slack;
  const int total = art0 + m;

  Tableau t(m, total);
  int slack = n_split;
  for (int r = 0; r < m; ++r) {
    const auto& c = lp.constraints[r];
    const bool flip = c.rhs < Rational(0);
    const Rational sign = flip ? Rational(-1) : Rational(1);
    for (int j = 0; j < n; ++j) {
      t.at(r, 2 * j) = sign * c.coeffs[j];
      t.at(r, 2 * j + 1) = -sign * c.coeffs[j];
    }
    if (c.rel != Relation::Equal) {
      // <= gets +slack, >= gets -slack (then possibly flipped with the row).
      Rational s = (c.rel == Relation::LessEq) ? Rational(1) : Rational(-1);
      t.at(r, slack++) = sign * s;
    }
    t.rhs(r) = sign * c.rhs;
    t.at(r, art0 + r) = 1;
    t.set_basis(r, art0 + r);
  }

  // Phase 1: maximize -(sum of artificials). Objective row must be expressed
  // in non-basic terms: start from sum of constraint rows.
  for (int r = 0; r < m; ++r)
    for (int c = 0; c <= art0 - 1; ++c) t.obj(c) += t.at(r, c);
  for (int r = 0; r < m; ++r) t.obj_rhs() += t.rhs(r);

  while (true) {
    auto s = t.step(art0);  // artificials never re-enter
    if (s == Tableau::Step::Optimal) break;
    if (s == Tableau::Step::Unbounded)
      throw MalformedLP("phase-1 objective unbounded (internal error)");
  }
  if (!t.obj_rhs().is_zero()) return {LpStatus::Infeasible, {}, Rational(0)};

  // Drive out artificials still in the basis at level zero.
  for (int r = 0; r < m; ++r) {
    if (t.basis(r) < art0) continue;
    int pc = -1;
    for (int c = 0; c < art0; ++c)
      if (!t.at(r, c).is_zero()) {
        pc = c;
        break;
      }
    if (pc >= 0) t.pivot(r, pc);
    // Otherwise the row is redundant; harmless to leave (rhs is zero).
  }

  // Phase 2: replace the objective row with the real objective expressed in
  // the current basis.
  for (int c = 0; c <= total; ++c) t.obj(c) = 0;
  std::vector<Rational> cost(total, Rational(0));
  for (int j = 0; j < n; ++j) {
    cost[2 * j] = lp.objective[j];
    cost[2 * j + 1] = -lp.objective[j];
  }
  for (int c = 0; c < total; ++c) t.obj(c) = cost[c];
  t.obj_rhs() = 0;
  for (int r = 0; r < m; ++r) {
    const int b = t.basis(r);
    if (cost[b].is_zero()) continue;
    const Rational cb = cost[b];
    for (int c = 0; c < total; ++c) t.obj(c) -= cb * t.at(r, c);
    t.obj_rhs() -= cb * t.rhs(r);
  }
  // Canonical form keeps basic columns at zero reduced cost; artificials are
  // excluded from pivoting below, so zero them to be safe.
  for (int c = art0; c < total; ++c) t.obj(c) = 0;

  while (true) {
    auto s = t.step(art0);
    if (s == Tableau::Step::Optimal) break;
    if (s == Tableau::Step::Unbounded) return {LpStatus::Unbounded, {}, Rational(0)};
  }

  std::vector<Rational> y(total, Rational(0));
  for (int r = 0; r < m; ++r) y[t.basis(r)] = t.rhs(r);
  std::vector<Rational> x(n, Rational(0));
  for (int j = 0; j < n; ++j) x[j] = y[2 * j] - y[2 * j + 1];

  Rational value = 0;
  for (int j = 0; j < n; ++j) value += lp.objective[j] * x[j];
  for (const auto& c : lp.constraints)
    if (!satisfies(c, x))
      throw MalformedLP("simplex produced an assignment violating a constraint");
  return {LpStatus::Optimal, std::move(x), std::move(value)};
}

}  // namespace medsim
