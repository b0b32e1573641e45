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

#ifndef MEDSIM_PMF_HPP
#define MEDSIM_PMF_HPP

#include <utility>
#include <vector>

#include "medsim/alphabet.hpp"
#include "medsim/rational.hpp"

namespace medsim {

// Probability mass function over one alphabet. Entries are exact rationals,
// nonnegative, summing to exactly 1.
class MarginalPMF {
 public:
  MarginalPMF(Alphabet alphabet, std::vector<Rational> mass);

  const Alphabet& alphabet() const { return alphabet_; }
  const Rational& at(int i) const { return mass_.at(i); }
  const Rational& at(const std::string& sym) const { return mass_.at(alphabet_.index_of(sym)); }
  const std::vector<Rational>& mass() const { return mass_; }
  int size() const { return alphabet_.size(); }

  // Point mass on one symbol of the alphabet.
  static MarginalPMF point(Alphabet alphabet, const std::string& sym);
  static MarginalPMF uniform(Alphabet alphabet);

  friend bool operator==(const MarginalPMF& a, const MarginalPMF& b) {
    return a.alphabet_ == b.alphabet_ && a.mass_ == b.mass_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Rational> mass_;
};

// Joint probability mass function over a product alphabet X x Y, row-major
// in X. Entries are exact rationals, nonnegative, summing to exactly 1.
class JointPMF {
 public:
  // Validating constructor; `entries[i][j]` is the mass on (x_i, y_j).
  // Throws DimensionMismatch / NegativeMass / MassNotOne.
  static JointPMF make(Alphabet alphabet_x, Alphabet alphabet_y,
                       const std::vector<std::vector<Rational>>& entries);

  const Alphabet& alphabet_x() const { return ax_; }
  const Alphabet& alphabet_y() const { return ay_; }
  const Rational& at(int i, int j) const { return mass_.at(i * ay_.size() + j); }
  const Rational& at(const std::string& x, const std::string& y) const {
    return at(ax_.index_of(x), ay_.index_of(y));
  }

  std::pair<MarginalPMF, MarginalPMF> marginals() const;

  friend bool operator==(const JointPMF& a, const JointPMF& b) {
    return a.ax_ == b.ax_ && a.ay_ == b.ay_ && a.mass_ == b.mass_;
  }
  friend bool operator!=(const JointPMF& a, const JointPMF& b) { return !(a == b); }

 private:
  JointPMF(Alphabet ax, Alphabet ay, std::vector<Rational> mass)
      : ax_(std::move(ax)), ay_(std::move(ay)), mass_(std::move(mass)) {}
  Alphabet ax_, ay_;
  std::vector<Rational> mass_;  // row-major
};

// Exact test for P(x,y) = P_X(x) * P_Y(y) on every cell.
bool is_product(const JointPMF& p);

// Shannon mutual information I(X;Y) in bits; floating point, 0 log 0 = 0.
// Diagnostic only; never used as a branch condition anywhere in the library.
double mutual_information(const JointPMF& p);

// Shannon entropy in bits of a marginal; floating point.
double entropy(const MarginalPMF& p);

// Total variation distance, exact: half the L1 distance. Alphabets must match.
Rational tv_distance(const JointPMF& a, const JointPMF& b);

// Swaps the roles of X and Y.
JointPMF transpose(const JointPMF& p);

}  // namespace medsim

#endif  // MEDSIM_PMF_HPP
