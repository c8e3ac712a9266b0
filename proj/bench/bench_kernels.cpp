// Copyright 2026 The bosonlab Authors
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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "bosonlab/architecture.hpp"
#include "bosonlab/noise.hpp"
#include "bosonlab/probability.hpp"
#include "bosonlab/sampling.hpp"

namespace {

using namespace bosonlab;

Matrix random_block(int n) {
  Rng rng(7);
  return haar_columns(64, n, rng).topRows(n);
}

void BM_PermanentSerial(benchmark::State& state) {
  const Matrix a = random_block(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(permanent_serial(a));
}
BENCHMARK(BM_PermanentSerial)->Arg(14)->Arg(16)->Arg(18);

void BM_PermanentParallel(benchmark::State& state) {
  const Matrix a = random_block(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(permanent(a));
}
BENCHMARK(BM_PermanentParallel)->Arg(14)->Arg(16)->Arg(18);

void BM_DistributionSerial(benchmark::State& state) {
  Rng rng(3);
  const ComplexUnitary u = haar_unitary_global(8, rng);
  const OutcomeConfig t = OutcomeConfig::first_modes(8, 4);
  for (auto _ : state) benchmark::DoNotOptimize(full_distribution_serial(u, t));
}
BENCHMARK(BM_DistributionSerial);

void BM_DistributionParallel(benchmark::State& state) {
  Rng rng(3);
  const ComplexUnitary u = haar_unitary_global(8, rng);
  const OutcomeConfig t = OutcomeConfig::first_modes(8, 4);
  for (auto _ : state) benchmark::DoNotOptimize(full_distribution(u, t));
}
BENCHMARK(BM_DistributionParallel);

ExperimentConfig small_experiment() {
  ExperimentConfig c;
  c.modes = 32;
  c.photons = {4, 6};
  c.reps = {1};
  c.circuits = 8;
  c.samples = 50;
  return c;
}

void BM_ExperimentSerial(benchmark::State& state) {
  const ExperimentConfig c = small_experiment();
  for (auto _ : state) benchmark::DoNotOptimize(collision_ratio_experiment_serial(c));
}
BENCHMARK(BM_ExperimentSerial)->Unit(benchmark::kMillisecond);

void BM_ExperimentParallel(benchmark::State& state) {
  const ExperimentConfig c = small_experiment();
  for (auto _ : state) benchmark::DoNotOptimize(collision_ratio_experiment(c));
}
BENCHMARK(BM_ExperimentParallel)->Unit(benchmark::kMillisecond);

void BM_LossySerial(benchmark::State& state) {
  Rng rng(5);
  const Circuit c = random_local_circuit(build_kaleidoscope(4, 1), rng);
  const LossModel loss = LossModel::uniform(c.gates().size(), 0.1);
  const OutcomeConfig t = OutcomeConfig::first_modes(4, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lossy_sample_batch_serial(c, t, loss, 2000, RngHandle{9}));
  }
}
BENCHMARK(BM_LossySerial)->Unit(benchmark::kMillisecond);

void BM_LossyParallel(benchmark::State& state) {
  Rng rng(5);
  const Circuit c = random_local_circuit(build_kaleidoscope(4, 1), rng);
  const LossModel loss = LossModel::uniform(c.gates().size(), 0.1);
  const OutcomeConfig t = OutcomeConfig::first_modes(4, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lossy_sample_batch(c, t, loss, 2000, RngHandle{9}));
  }
}
BENCHMARK(BM_LossyParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
