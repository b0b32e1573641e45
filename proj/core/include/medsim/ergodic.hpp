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

#ifndef MEDSIM_ERGODIC_HPP
#define MEDSIM_ERGODIC_HPP

#include <map>
#include <string>
#include <vector>

#include "medsim/pmf.hpp"

namespace medsim {

// Labeling of the connected components of the bipartite support graph of a
// joint PMF (an edge joins x and y iff P(x,y) > 0). The component label W is
// a deterministic function of X alone and of Y alone on the support.
// Zero-probability symbols appear in neither map.
struct ErgodicDecomposition {
  std::vector<std::string> labels;            // canonical order (see below)
  std::map<std::string, std::string> component_of_x;
  std::map<std::string, std::string> component_of_y;
  std::map<std::string, Rational> component_mass;

  int label_index(const std::string& label) const;
};

// Computes the decomposition by union-find over supported cells. Labels are
// "w0", "w1", ... assigned in order of the smallest x-index contained in
// each component, so results are comparable across runs.
ErgodicDecomposition ergodic_decomposition(const JointPMF& p);

// True iff X - W - Y is a Markov chain for W the ergodic decomposition:
// P(x,y) * mass(w) == rowsum_w(x) * colsum_w(y) on every supported cell,
// tested with exact rational equality.
bool is_separable(const JointPMF& p);

enum class Channel { CheapTalk, PoliteTalk };
enum class Adversary { SemiHonest, Malicious };

const char* to_string(Channel c);
const char* to_string(Adversary a);

// Why a distribution is or is not feasible for a given channel/adversary pair.
enum class FeasibilityReason { Independent, Separable, NotSeparable, Dependent };

const char* to_string(FeasibilityReason r);

struct FeasibilityVerdict {
  Channel channel;
  Adversary adversary;
  bool feasible;
  FeasibilityReason reason;
};

// Feasibility of securely sampling p over the given channel against the
// given adversary class. Semi-honest (either channel) and malicious cheap
// talk require separability; malicious polite talk requires independence.
FeasibilityVerdict classify(const JointPMF& p, Channel channel, Adversary adversary);

}  // namespace medsim

#endif  // MEDSIM_ERGODIC_HPP
