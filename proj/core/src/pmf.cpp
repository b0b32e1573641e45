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

#include "medsim/pmf.hpp"

#include <cmath>

namespace medsim {

MarginalPMF::MarginalPMF(Alphabet alphabet, std::vector<Rational> mass)
    : alphabet_(std::move(alphabet)), mass_(std::move(mass)) {
  if (static_cast<int>(mass_.size()) != alphabet_.size())
    throw DimensionMismatch("marginal mass vector does not match alphabet size");
  Rational sum = 0;
  for (const Rational& m : mass_) {
    if (m < Rational(0)) throw NegativeMass("negative mass " + m.str());
    sum += m;
  }
  if (sum != Rational(1)) throw MassNotOne("marginal mass sums to " + sum.str());
}

MarginalPMF MarginalPMF::point(Alphabet alphabet, const std::string& sym) {
  std::vector<Rational> mass(alphabet.size(), Rational(0));
  mass[alphabet.index_of(sym)] = 1;
  return MarginalPMF(std::move(alphabet), std::move(mass));
}

MarginalPMF MarginalPMF::uniform(Alphabet alphabet) {
  int n = alphabet.size();
  std::vector<Rational> mass(n, Rational(1, n));
  return MarginalPMF(std::move(alphabet), std::move(mass));
}

JointPMF JointPMF::make(Alphabet alphabet_x, Alphabet alphabet_y,
                        const std::vector<std::vector<Rational>>& entries) {
  const int nx = alphabet_x.size(), ny = alphabet_y.size();
  if (static_cast<int>(entries.size()) != nx)
    throw DimensionMismatch("expected " + std::to_string(nx) + " rows");
  std::vector<Rational> mass;
  mass.reserve(static_cast<size_t>(nx) * ny);
  Rational sum = 0;
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != ny)
      throw DimensionMismatch("expected " + std::to_string(ny) + " columns");
    for (const Rational& m : row) {
      if (m < Rational(0)) throw NegativeMass("negative mass " + m.str());
      mass.push_back(m);
      sum += m;
    }
  }
  if (sum != Rational(1)) throw MassNotOne("joint mass sums to " + sum.str());
  return JointPMF(std::move(alphabet_x), std::move(alphabet_y), std::move(mass));
}

std::pair<MarginalPMF, MarginalPMF> JointPMF::marginals() const {
  std::vector<Rational> px(ax_.size(), Rational(0));
  std::vector<Rational> py(ay_.size(), Rational(0));
  for (int i = 0; i < ax_.size(); ++i)
    for (int j = 0; j < ay_.size(); ++j) {
      px[i] += at(i, j);
      py[j] += at(i, j);
    }
  return {MarginalPMF(ax_, std::move(px)), MarginalPMF(ay_, std::move(py))};
}

bool is_product(const JointPMF& p) {
  auto [px, py] = p.marginals();
  for (int i = 0; i < px.size(); ++i)
    for (int j = 0; j < py.size(); ++j)
      if (p.at(i, j) != px.at(i) * py.at(j)) return false;
  return true;
}

double mutual_information(const JointPMF& p) {
  auto [px, py] = p.marginals();
  double mi = 0.0;
  for (int i = 0; i < px.size(); ++i)
    for (int j = 0; j < py.size(); ++j) {
      const Rational& m = p.at(i, j);
      if (m.is_zero()) continue;
      double pij = m.to_double();
      double ratio = (m / (px.at(i) * py.at(j))).to_double();
      mi += pij * std::log2(ratio);
    }
  return mi;
}

double entropy(const MarginalPMF& p) {
  double h = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    if (p.at(i).is_zero()) continue;
    double pi = p.at(i).to_double();
    h -= pi * std::log2(pi);
  }
  return h;
}

Rational tv_distance(const JointPMF& a, const JointPMF& b) {
  if (a.alphabet_x() != b.alphabet_x() || a.alphabet_y() != b.alphabet_y())
    throw AlphabetMismatch("tv_distance requires identical alphabets");
  Rational l1 = 0;
  for (int i = 0; i < a.alphabet_x().size(); ++i)
    for (int j = 0; j < a.alphabet_y().size(); ++j)
      l1 += (a.at(i, j) - b.at(i, j)).abs();
  return l1 / Rational(2);
}

JointPMF transpose(const JointPMF& p) {
  const int nx = p.alphabet_x().size(), ny = p.alphabet_y().size();
  std::vector<std::vector<Rational>> rows(ny, std::vector<Rational>(nx, Rational(0)));
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) rows[j][i] = p.at(i, j);
  return JointPMF::make(p.alphabet_y(), p.alphabet_x(), rows);
}

}  // namespace medsim
