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

#ifndef MEDSIM_ERRORS_HPP
#define MEDSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace medsim {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define MEDSIM_DEFINE_ERROR(Name)                              \
  class Name : public Error {                                  \
   public:                                                     \
    explicit Name(const std::string& what) : Error(what) {}    \
  }

// Probability / distribution construction.
MEDSIM_DEFINE_ERROR(NegativeMass);
MEDSIM_DEFINE_ERROR(MassNotOne);
MEDSIM_DEFINE_ERROR(DimensionMismatch);

// Games and equilibria.
MEDSIM_DEFINE_ERROR(AlphabetMismatch);
MEDSIM_DEFINE_ERROR(NotTwoByTwo);
MEDSIM_DEFINE_ERROR(DegenerateGame);
MEDSIM_DEFINE_ERROR(NotNash);
MEDSIM_DEFINE_ERROR(BadWeights);
MEDSIM_DEFINE_ERROR(NotCorrelatedEq);

// Linear programming.
MEDSIM_DEFINE_ERROR(MalformedLP);

// Protocol engine.
MEDSIM_DEFINE_ERROR(ModeError);
MEDSIM_DEFINE_ERROR(NonTermination);
MEDSIM_DEFINE_ERROR(StateExplosion);

// Protocol construction.
MEDSIM_DEFINE_ERROR(NotSeparable);
MEDSIM_DEFINE_ERROR(EmptyPartitionClass);
MEDSIM_DEFINE_ERROR(UnknownKind);

// Security checks.
MEDSIM_DEFINE_ERROR(TailMassNonzero);
MEDSIM_DEFINE_ERROR(MarginalMismatch);
MEDSIM_DEFINE_ERROR(ImplicationViolated);

// Spec-file front end.
MEDSIM_DEFINE_ERROR(SyntaxError);
MEDSIM_DEFINE_ERROR(ValidationError);

#undef MEDSIM_DEFINE_ERROR

}  // namespace medsim

#endif  // MEDSIM_ERRORS_HPP
