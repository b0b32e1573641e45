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

#include "medsim/ergodic.hpp"

#include <numeric>

namespace medsim {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

}  // namespace

int ErgodicDecomposition::label_index(const std::string& label) const {
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    if (labels[i] == label) return i;
  throw ValidationError("unknown component label '" + label + "'");
}

ErgodicDecomposition ergodic_decomposition(const JointPMF& p) {
  const int nx = p.alphabet_x().size();
  const int ny = p.alphabet_y().size();
  // Nodes 0..nx-1 are x symbols, nx..nx+ny-1 are y symbols.
  UnionFind uf(nx + ny);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      if (!p.at(i, j).is_zero()) uf.unite(i, nx + j);

  // Components ordered by smallest supported x-index.
  std::map<int, int> root_to_label;  // uf root -> label index
  ErgodicDecomposition d;
  std::vector<Rational> masses;
  for (int i = 0; i < nx; ++i) {
    bool supported = false;
    for (int j = 0; j < ny; ++j)
      if (!p.at(i, j).is_zero()) supported = true;
    if (!supported) continue;
    int root = uf.find(i);
    auto [it, fresh] = root_to_label.emplace(root, static_cast<int>(d.labels.size()));
    if (fresh) {
      d.labels.push_back("w" + std::to_string(it->second));
      masses.emplace_back(0);
    }
    d.component_of_x[p.alphabet_x().symbol(i)] = d.labels[it->second];
  }
  for (int j = 0; j < ny; ++j) {
    bool supported = false;
    for (int i = 0; i < nx; ++i)
      if (!p.at(i, j).is_zero()) supported = true;
    if (!supported) continue;
    // Every supported y is linked to some supported x, so its root is known.
    int label = root_to_label.at(uf.find(nx + j));
    d.component_of_y[p.alphabet_y().symbol(j)] = d.labels[label];
  }
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      if (!p.at(i, j).is_zero()) masses[root_to_label.at(uf.find(i))] += p.at(i, j);
  for (size_t k = 0; k < d.labels.size(); ++k) d.component_mass[d.labels[k]] = masses[k];
  return d;
}

bool is_separable(const JointPMF& p) {
  ErgodicDecomposition d = ergodic_decomposition(p);
  auto [px, py] = p.marginals();
  // Rows and columns never cross components, so the within-component row sum
  // of x is exactly P_X(x), and likewise for y.
  for (int i = 0; i < p.alphabet_x().size(); ++i)
    for (int j = 0; j < p.alphabet_y().size(); ++j) {
      if (p.at(i, j).is_zero()) continue;
      const Rational& mass =
          d.component_mass.at(d.component_of_x.at(p.alphabet_x().symbol(i)));
      if (p.at(i, j) * mass != px.at(i) * py.at(j)) return false;
    }
  return true;
}

const char* to_string(Channel c) {
  return c == Channel::CheapTalk ? "cheap-talk" : "polite-talk";
}

const char* to_string(Adversary a) {
  return a == Adversary::SemiHonest ? "semi-honest" : "malicious";
}

const char* to_string(FeasibilityReason r) {
  switch (r) {
    case FeasibilityReason::Independent: return "independent";
    case FeasibilityReason::Separable: return "separable";
    case FeasibilityReason::NotSeparable: return "not separable";
    case FeasibilityReason::Dependent: return "not independent";
  }
  return "?";
}

FeasibilityVerdict classify(const JointPMF& p, Channel channel, Adversary adversary) {
  if (adversary == Adversary::Malicious && channel == Channel::PoliteTalk) {
    bool product = is_product(p);
    return {channel, adversary, product,
            product ? FeasibilityReason::Independent : FeasibilityReason::Dependent};
  }
  bool separable = is_separable(p);
  return {channel, adversary, separable,
          separable ? FeasibilityReason::Separable : FeasibilityReason::NotSeparable};
}

}  // namespace medsim
