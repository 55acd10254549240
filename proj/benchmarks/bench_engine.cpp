// Copyright 2026 The simon-dqc Authors
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

#include "simon_dqc/algorithms.hpp"
#include "simon_dqc/rng.hpp"

using namespace simon_dqc;

namespace {

SimonFunction bench_function(int n, std::uint64_t seed) {
    auto rng = make_rng(seed);
    std::uint64_t s = 1 + uniform_below(rng, (std::uint64_t{1} << n) - 1);
    return SimonFunction::generate(n, n - 1, BitVec::from_int(s, static_cast<std::size_t>(n)),
                                   rng());
}

void BM_ImprovedFinalStateSparse(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int t = static_cast<int>(state.range(1));
    SimonFunction f = bench_function(n, 1);
    auto fam = split(f, t);
    for (auto _ : state) {
        benchmark::DoNotOptimize(improved_final_state(fam, QuantumState::Repr::Sparse));
    }
}
BENCHMARK(BM_ImprovedFinalStateSparse)
    ->Args({4, 1})
    ->Args({6, 1})
    ->Args({6, 3})
    ->Args({6, 5})
    ->Args({8, 4});

void BM_ImprovedFinalStateDense(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    SimonFunction f = bench_function(n, 2);
    auto fam = split(f, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(improved_final_state(fam, QuantumState::Repr::Dense));
    }
}
BENCHMARK(BM_ImprovedFinalStateDense)->Arg(4)->Arg(5)->Arg(6);

void BM_BaselineFinalStateSparse(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int t = static_cast<int>(state.range(1));
    SimonFunction f = bench_function(n, 3);
    auto fam = split(f, t);
    for (auto _ : state) {
        benchmark::DoNotOptimize(baseline_final_state(fam, QuantumState::Repr::Sparse));
    }
}
BENCHMARK(BM_BaselineFinalStateSparse)->Args({6, 1})->Args({6, 5})->Args({8, 4});

void BM_FullRecovery(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    SimonFunction f = bench_function(n, 4);
    RunConfig config;
    config.algorithm = AlgorithmKind::Improved;
    config.n = n;
    config.m = n - 1;
    config.t = 2;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        config.seed = ++seed;
        benchmark::DoNotOptimize(run_improved(f, config));
    }
}
BENCHMARK(BM_FullRecovery)->Arg(4)->Arg(6)->Arg(8);

}  // namespace
