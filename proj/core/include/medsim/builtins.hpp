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

#ifndef MEDSIM_BUILTINS_HPP
#define MEDSIM_BUILTINS_HPP

#include <string>
#include <vector>

#include "medsim/game.hpp"
#include "medsim/pmf.hpp"
#include "medsim/protocols.hpp"

namespace medsim {

// Stock distributions over two-symbol alphabets unless noted.
JointPMF uniform2_dist();  // independent uniform product on {0,1} x {0,1}
JointPMF coin_dist();      // common fair coin: half on (0,0), half on (1,1)
JointPMF triangle_dist();  // uniform on (0,0), (0,1), (1,1); one component
JointPMF block_dist();     // 3x3: a 2x2 uniform block plus an isolated cell
JointPMF bos_diag_dist();  // half on (M,M), half on (O,O)
JointPMF cod_ce_dist();    // uniform on (C,C), (C,D), (D,C)

Game bos_game();       // coordination with opposed favorites, actions {M,O}
Game cod_game();       // chicken-style game on {C,D}
Game constant_game();  // every cell pays (1,1), actions {C,D}
Game match_game();     // both paid 1 on agreement, 0 otherwise, on {0,1}

// Lookups by the names listed by the *_names functions; UnknownKind on miss.
JointPMF builtin_dist(const std::string& name);
Game builtin_game(const std::string& name);
ProtocolSpec builtin_protocol(const std::string& name);

std::vector<std::string> builtin_dist_names();
std::vector<std::string> builtin_game_names();
std::vector<std::string> builtin_protocol_names();

}  // namespace medsim

#endif  // MEDSIM_BUILTINS_HPP
