// Copyright 2026 The qgxor Authors
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

#include "qgxor/gates.hpp"
#include "qgxor/purify.hpp"
#include "qgxor/random.hpp"
#include "qgxor/teleport.hpp"

namespace {

using namespace qgxor;

void BM_NonlinearMap(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    Rng rng(1);
    const auto sigma = random_density_matrix({Dim(d), Dim(d)}, rng);
    for (auto _ : state) benchmark::DoNotOptimize(purify::nonlinear_map(sigma));
}
BENCHMARK(BM_NonlinearMap)->Arg(2)->Arg(5)->Arg(10)->Arg(20);

void BM_NonlinearMapOracle(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    Rng rng(2);
    const auto sigma = random_density_matrix({Dim(d)}, rng);
    for (auto _ : state) benchmark::DoNotOptimize(purify::nonlinear_map_oracle(sigma, sigma, 1, 1));
}
BENCHMARK(BM_NonlinearMapOracle)->Arg(2)->Arg(5)->Arg(10);

void BM_PurificationStep(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const auto werner = purify::werner_state(0.5, Dim(d));
    std::size_t step = 0;
    for (auto _ : state) benchmark::DoNotOptimize(purify::purification_step(werner, step++));
}
BENCHMARK(BM_PurificationStep)->Arg(3)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_BellMeasurement(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    Rng rng(3);
    const auto psi = random_pure_state({Dim(d), Dim(d)}, rng);
    benchmark::DoNotOptimize(gates::bell_measurement(psi));  // fill the gate cache
    for (auto _ : state) benchmark::DoNotOptimize(gates::bell_measurement(psi));
}
BENCHMARK(BM_BellMeasurement)->Arg(2)->Arg(5)->Arg(10)->Arg(20);

void BM_Teleport(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    Rng rng(4);
    const auto chi = random_pure_state({Dim(d)}, rng);
    for (auto _ : state) benchmark::DoNotOptimize(teleport::teleport(chi, Dit(1), Dit(0), rng));
}
BENCHMARK(BM_Teleport)->Arg(2)->Arg(5)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
