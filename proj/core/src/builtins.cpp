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

#include "medsim/builtins.hpp"

#include "medsim/errors.hpp"

namespace medsim {

namespace {

JointPMF dist01(std::vector<std::vector<Rational>> rows) {
  return JointPMF::make(Alphabet({"0", "1"}), Alphabet({"0", "1"}), std::move(rows));
}

const Rational kHalf(1, 2);
const Rational kThird(1, 3);

}  // namespace

JointPMF uniform2_dist() {
  const Rational q(1, 4);
  return dist01({{q, q}, {q, q}});
}

JointPMF coin_dist() { return dist01({{kHalf, 0}, {0, kHalf}}); }

JointPMF triangle_dist() { return dist01({{kThird, kThird}, {0, kThird}}); }

JointPMF block_dist() {
  const Rational e(1, 8);
  return JointPMF::make(Alphabet({"a1", "a2", "a3"}), Alphabet({"b1", "b2", "b3"}),
                        {{e, e, 0}, {e, e, 0}, {0, 0, kHalf}});
}

JointPMF bos_diag_dist() {
  return JointPMF::make(Alphabet({"M", "O"}), Alphabet({"M", "O"}), {{kHalf, 0}, {0, kHalf}});
}

JointPMF cod_ce_dist() {
  return JointPMF::make(Alphabet({"C", "D"}), Alphabet({"C", "D"}),
                        {{kThird, kThird}, {kThird, 0}});
}

Game bos_game() {
  return Game(Alphabet({"M", "O"}), Alphabet({"M", "O"}), {{2, 0}, {0, 1}}, {{1, 0}, {0, 2}});
}

Game cod_game() {
  return Game(Alphabet({"C", "D"}), Alphabet({"C", "D"}), {{4, 1}, {5, 0}}, {{4, 5}, {1, 0}});
}

Game constant_game() {
  return Game(Alphabet({"C", "D"}), Alphabet({"C", "D"}), {{1, 1}, {1, 1}}, {{1, 1}, {1, 1}});
}

Game match_game() {
  return Game(Alphabet({"0", "1"}), Alphabet({"0", "1"}), {{1, 0}, {0, 1}}, {{1, 0}, {0, 1}});
}

JointPMF builtin_dist(const std::string& name) {
  if (name == "uniform2") return uniform2_dist();
  if (name == "coin") return coin_dist();
  if (name == "triangle") return triangle_dist();
  if (name == "block") return block_dist();
  if (name == "bos-diag") return bos_diag_dist();
  if (name == "cod-ce") return cod_ce_dist();
  throw UnknownKind("no builtin distribution '" + name + "'");
}

Game builtin_game(const std::string& name) {
  if (name == "bos") return bos_game();
  if (name == "cod") return cod_game();
  if (name == "constant") return constant_game();
  if (name == "match") return match_game();
  throw UnknownKind("no builtin game '" + name + "'");
}

namespace {

ProtocolSpec named(ProtocolSpec spec, const std::string& name) {
  spec.name = name;
  return spec;
}

}  // namespace

ProtocolSpec builtin_protocol(const std::string& name) {
  if (name == "xor-coin") return xor_coin_spec();
  if (name == "uniform2") return joint_uniform_spec(2);
  if (name == "uniform3") return joint_uniform_spec(3);
  if (name == "naive-polite-coinflip") return naive_polite_coinflip();
  if (name == "mediator-coin") return named(mediator_sampler(coin_dist()), name);
  if (name == "mediator-block") return named(mediator_sampler(block_dist()), name);
  if (name == "mediator-bos-diag") return named(mediator_sampler(bos_diag_dist()), name);
  if (name == "one-sided-cod-ce") return named(one_sided_sampler(cod_ce_dist()), name);
  if (name == "one-sided-coin") return named(one_sided_sampler(coin_dist()), name);
  if (name == "coin-map-block") return named(coin_map(block_dist(), {"w1"}), name);
  if (name == "coin-map-coin") return named(coin_map(coin_dist(), {"w1"}), name);
  throw UnknownKind("no builtin protocol '" + name + "'");
}

std::vector<std::string> builtin_dist_names() {
  return {"uniform2", "coin", "triangle", "block", "bos-diag", "cod-ce"};
}

std::vector<std::string> builtin_game_names() { return {"bos", "cod", "constant", "match"}; }

std::vector<std::string> builtin_protocol_names() {
  return {"xor-coin",          "uniform2",         "uniform3",
          "naive-polite-coinflip", "mediator-coin", "mediator-block",
          "mediator-bos-diag", "one-sided-cod-ce", "one-sided-coin",
          "coin-map-block",    "coin-map-coin"};
}

}  // namespace medsim
