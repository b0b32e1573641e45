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

#ifndef MEDSIM_LP_HPP
#define MEDSIM_LP_HPP

#include <string>
#include <vector>

#include "medsim/rational.hpp"

namespace medsim {

enum class Relation { LessEq, Equal, GreaterEq };

struct LpConstraint {
  std::vector<Rational> coeffs;
  Relation rel;
  Rational rhs;
};

// Maximize objective . x subject to the constraints. Variables are free;
// nonnegativity, where wanted, is an explicit constraint.
struct LinearProgram {
  std::vector<std::string> variables;
  std::vector<Rational> objective;
  std::vector<LpConstraint> constraints;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status;
  std::vector<Rational> assignment;  // meaningful only when Optimal
  Rational value;                    // meaningful only when Optimal
};

// Exact two-phase simplex over rationals. Bland's pivoting rule, so the
// solve always terminates. The returned assignment is re-checked against
// every constraint before being handed back. Throws MalformedLP on shape
// errors.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace medsim

#endif  // MEDSIM_LP_HPP
