//
// Copyright 2026 The qdpkit Authors
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

#include "qdpkit/divergence.hpp"
#include "qdpkit/dpcert.hpp"
#include "qdpkit/rng.hpp"

namespace {

using namespace qdpkit;

StatePair bench_pair(int dim) {
  Rng rng(99);
  return StatePair(DensityOperator(random_density_matrix(rng, dim, dim + 2)),
                   DensityOperator(random_density_matrix(rng, dim, dim + 2)));
}

void BM_HockeyStick(benchmark::State& state) {
  const StatePair pair = bench_pair(static_cast<int>(state.range(0)));
  double gamma = 1.0;
  for (auto _ : state) {
    // Vary gamma so the memo cache never serves the request.
    gamma += 1e-9;
    benchmark::DoNotOptimize(pair.hockey_stick(gamma));
  }
}
BENCHMARK(BM_HockeyStick)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_HypTestDual(benchmark::State& state) {
  const StatePair pair = bench_pair(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(np_beta_q(pair, 0.25));
  }
}
BENCHMARK(BM_HypTestDual)->Arg(2)->Arg(4)->Arg(8);

void BM_RelativeEntropyQuadrature(benchmark::State& state) {
  const StatePair pair = bench_pair(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(relative_entropy_via_integral(pair));
  }
}
BENCHMARK(BM_RelativeEntropyQuadrature)->Arg(2)->Arg(4)->Arg(8);

void BM_RenyiHockey(benchmark::State& state) {
  const StatePair pair = bench_pair(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(renyi_hockey(pair, 2.0));
  }
}
BENCHMARK(BM_RenyiHockey);

void BM_CertifyDp(benchmark::State& state) {
  const StatePair pair = bench_pair(static_cast<int>(state.range(0)));
  const PrivacyParams p(0.8, 0.05);
  Rng rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_dp_pair(rng, static_cast<int>(state.range(0)), p));
  }
}
BENCHMARK(BM_CertifyDp)->Arg(2)->Arg(4);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
