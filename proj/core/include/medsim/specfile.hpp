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

#ifndef MEDSIM_SPECFILE_HPP
#define MEDSIM_SPECFILE_HPP

#include <optional>
#include <string>

#include "medsim/game.hpp"
#include "medsim/pmf.hpp"

namespace medsim {

// One parsed input file: either a joint distribution or a bimatrix game.
//
//   dist "coin"                     game "bos"
//   alphabet X: 0 1                 actions A: M O
//   alphabet Y: 0 1                 actions B: M O
//   pmf: 1/2 0 / 0 1/2              u1: 2 0 / 0 1
//                                   u2: 1 0 / 0 2
//
// '#' starts a comment, matrices may wrap across lines, and a bare '/'
// separates matrix rows.
struct SpecFile {
  enum class Kind { Dist, Game };
  Kind kind = Kind::Dist;
  std::string name;
  std::optional<JointPMF> dist;
  std::optional<Game> game;
};

// Throws SyntaxError with a 1-based line and column on malformed text;
// distribution and game validation errors propagate unchanged.
SpecFile parse_spec(const std::string& text);

// Canonical single-line-per-section form; parse(render(f)) reproduces f.
std::string render(const SpecFile& f);

// Reads and parses one file; ValidationError when it cannot be read.
SpecFile load_spec_file(const std::string& path);

}  // namespace medsim

#endif  // MEDSIM_SPECFILE_HPP
