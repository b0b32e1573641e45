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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "medsim/builtins.hpp"
#include "medsim/ce.hpp"
#include "medsim/engine.hpp"
#include "medsim/ergodic.hpp"
#include "medsim/pmf.hpp"
#include "medsim/protocols.hpp"

namespace {

using namespace medsim;

// n x n distribution made of 2x2 uniform blocks along the diagonal; n even.
JointPMF block_diagonal(int n) {
  std::vector<std::string> xs, ys;
  for (int i = 0; i < n; ++i) {
    xs.push_back("x" + std::to_string(i));
    ys.push_back("y" + std::to_string(i));
  }
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
  for (int b = 0; b < n / 2; ++b)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) rows[2 * b + i][2 * b + j] = Rational(1, 2 * n);
  return JointPMF::make(Alphabet(xs), Alphabet(ys), rows);
}

void BM_ErgodicDecomposition(benchmark::State& state) {
  const JointPMF p = block_diagonal(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ergodic_decomposition(p));
}
BENCHMARK(BM_ErgodicDecomposition)->Arg(8)->Arg(32)->Arg(128);

void BM_OptimizeCe(benchmark::State& state) {
  const Game g = cod_game();
  for (auto _ : state)
    benchmark::DoNotOptimize(optimize_ce(g, {Rational(1), Rational(1)}));
}
BENCHMARK(BM_OptimizeCe);

void BM_MediatorBiasedCoin(benchmark::State& state) {
  // Component masses 1/3 and 2/3 force a retry loop over two bits.
  const JointPMF target = JointPMF::make(
      Alphabet({"0", "1"}), Alphabet({"0", "1"}),
      {{Rational(1, 3), Rational(0)}, {Rational(0), Rational(2, 3)}});
  const ProtocolSpec spec = mediator_sampler(target);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        enumerate_executions(*spec.party_a, *spec.party_b, spec.phases, spec.mode));
}
BENCHMARK(BM_MediatorBiasedCoin);

void BM_MediatorLiftedMixture(benchmark::State& state) {
  const Game bos = bos_game();
  const auto eqs = enumerate_nash_2x2(bos);
  const JointPMF lifted =
      lift_convex_combination(bos, eqs, {Rational(1, 4), Rational(1, 4), Rational(1, 2)});
  const ProtocolSpec spec = mediator_sampler(lifted);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        enumerate_executions(*spec.party_a, *spec.party_b, spec.phases, spec.mode));
}
BENCHMARK(BM_MediatorLiftedMixture);

void BM_MutualInformation(benchmark::State& state) {
  const JointPMF p = block_diagonal(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mutual_information(p));
}
BENCHMARK(BM_MutualInformation)->Arg(32)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
