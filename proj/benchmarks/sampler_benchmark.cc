//
// Copyright 2026 The dppca Authors
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
//

#include <benchmark/benchmark.h>

#include <Eigen/Dense>
#include <cmath>

#include "dppca/mechanism.h"
#include "dppca/rng.h"
#include "dppca/spectral.h"

namespace dppca {
namespace {

SpectralSummary SpikedDiagonal(Eigen::Index p, int k) {
  Eigen::VectorXd lambda = Eigen::VectorXd::Ones(p);
  for (int i = 0; i < k; ++i) lambda(i) = 3.0 - 0.1 * i;
  return SpectralSummary::Diagonal(lambda, k,
                                   std::pow(static_cast<double>(p), 1.5));
}

void BM_SampleApprox(benchmark::State& state) {
  const GibbsTarget target(
      SpikedDiagonal(state.range(0), static_cast<int>(state.range(1))), 2.0);
  Rng rng = MakeRng(kDefaultSeed);
  for (auto _ : state) benchmark::DoNotOptimize(SampleApprox(target, rng));
}
BENCHMARK(BM_SampleApprox)
    ->Args({300, 1})
    ->Args({300, 5})
    ->Args({2000, 1})
    ->Args({2000, 10});

void BM_MhStep(benchmark::State& state) {
  const GibbsTarget target(
      SpikedDiagonal(state.range(0), static_cast<int>(state.range(1))), 2.0);
  Rng rng = MakeRng(kDefaultSeed);
  IndependenceMhChain chain(target, rng);
  for (auto _ : state) benchmark::DoNotOptimize(chain.Step(rng));
}
BENCHMARK(BM_MhStep)->Args({400, 1})->Args({400, 5});

void BM_EigSym(benchmark::State& state) {
  const Eigen::Index p = state.range(0);
  const Eigen::MatrixXd a = Eigen::MatrixXd::Random(p, p);
  const Eigen::MatrixXd sym = (a + a.transpose()) / 2.0;
  for (auto _ : state) benchmark::DoNotOptimize(EigSym(sym, 1));
}
BENCHMARK(BM_EigSym)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_Hilbert(benchmark::State& state) {
  const SpectralSummary summary = SpikedDiagonal(state.range(0), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(Hilbert(summary, summary.top_edge(), 1));
}
BENCHMARK(BM_Hilbert)->Arg(500)->Arg(2000);

}  // namespace
}  // namespace dppca

BENCHMARK_MAIN();
