// Copyright 2026 The qht Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qht/asymptotics.hpp"
#include "qht/bounds.hpp"
#include "qht/hypothesis.hpp"
#include "qht/modular.hpp"
#include "qht/rng.hpp"

namespace {

void BM_EigHermitian(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  qht::Rng rng(7);
  const qht::Matrix g = rng.ginibre(dim, dim);
  const qht::HermitianMatrix h{qht::Matrix(0.5 * (g + g.adjoint()))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qht::eig_hermitian(h));
  }
}
BENCHMARK(BM_EigHermitian)->Arg(4)->Arg(16)->Arg(64);

void BM_ModularSpectrum(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const qht::StatePair pair = qht::random_pair(dim, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qht::ModularSpectrum(pair));
  }
}
BENCHMARK(BM_ModularSpectrum)->Arg(4)->Arg(16)->Arg(32);

void BM_KeLiTest(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const qht::StatePair pair = qht::random_pair(dim, 13);
  const qht::ModularSpectrum spec(pair);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qht::keli_test(pair, spec, 0.5));
  }
}
BENCHMARK(BM_KeLiTest)->Arg(4)->Arg(16)->Arg(32);

void BM_ConvolvePower(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const qht::StatePair pair = qht::random_pair(4, 17);
  const qht::AtomicMeasure base =
      qht::spectral_distribution(qht::ModularSpectrum(pair),
                                 qht::Reference::Sigma);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qht::convolve_power(base, n, qht::kDefaultMergeTol, 1e-18));
  }
}
BENCHMARK(BM_ConvolvePower)->Arg(10)->Arg(50)->Arg(200);

void BM_ChernoffBound(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const qht::StatePair pair = qht::random_pair(dim, 19);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qht::chernoff_bound(pair, 0.5));
  }
}
BENCHMARK(BM_ChernoffBound)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
