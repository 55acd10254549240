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

#include "simon_dqc/gf2.hpp"
#include "simon_dqc/rng.hpp"

using namespace simon_dqc;

namespace {

void BM_BasisInsertSolve(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    auto rng = make_rng(7);
    std::uint64_t s_int = 1 + uniform_below(rng, (std::uint64_t{1} << n) - 1);
    BitVec s = BitVec::from_int(s_int, n);
    // Pre-draw a pool of vectors orthogonal to s.
    std::vector<BitVec> pool;
    while (pool.size() < 4 * n) {
        BitVec z = BitVec::from_int(uniform_below(rng, std::uint64_t{1} << n), n);
        if (dot(z, s) == 0) pool.push_back(z);
    }
    for (auto _ : state) {
        Gf2Basis basis(n);
        std::size_t i = 0;
        while (basis.rank() < n - 1) basis.insert(pool[i++ % pool.size()]);
        benchmark::DoNotOptimize(basis.solve_hidden());
    }
}
BENCHMARK(BM_BasisInsertSolve)->Arg(8)->Arg(12)->Arg(14);

void BM_DotProduct(benchmark::State& state) {
    std::size_t len = static_cast<std::size_t>(state.range(0));
    auto rng = make_rng(11);
    BitVec a(len);
    BitVec b(len);
    for (std::size_t i = 0; i < len; ++i) {
        a.set_bit(i, static_cast<int>(rng() & 1));
        b.set_bit(i, static_cast<int>(rng() & 1));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(dot(a, b));
    }
}
BENCHMARK(BM_DotProduct)->Arg(14)->Arg(64)->Arg(321);

}  // namespace
