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

#include <doctest.h>

#include <cmath>
#include <set>

#include "simon_dqc/algorithms.hpp"
#include "reference_sim.hpp"
#include "test_util.hpp"

using namespace simon_dqc;

namespace {

// Cross-check an engine marginal against the naive reference simulator.
void check_against_reference(const std::vector<MeasurementOutcome>& dist,
                             const std::vector<double>& reference, std::size_t bits) {
    for (std::uint64_t z = 0; z < reference.size(); ++z) {
        double engine_p = probability_of(dist, BitVec::from_int(z, bits));
        CHECK(engine_p == doctest::Approx(reference[z]).epsilon(1e-9));
    }
}

}  // namespace

TEST_CASE("centralized run samples s-perp uniformly") {
    SimonFunction f = SimonFunction::generate(2, 1, BitVec::from_string("11"), 3);
    auto gen = test_util::rng(67);
    for (int i = 0; i < 16; ++i) {
        BitVec z = run_classic_once(f, gen);
        CHECK((z == BitVec::from_string("00") || z == BitVec::from_string("11")));
    }
    auto dist = classic_measurement_distribution(f);
    check_against_reference(dist, refsim::marginal_prefix(
                                      refsim::classic_circuit(test_util::int_table(f.table()), 2, 1),
                                      3, 2),
                            2);
}

TEST_CASE("indexed-combiner run matches the reference simulator") {
    struct Params {
        int n, m, t;
        std::uint64_t seed;
    };
    for (Params p : {Params{2, 1, 1, 4}, Params{3, 2, 1, 5}, Params{3, 2, 2, 6},
                     Params{4, 3, 1, 7}, Params{4, 3, 2, 8}}) {
        auto gen = test_util::rng(p.seed);
        BitVec s = test_util::random_nonzero_bitvec(gen, static_cast<std::size_t>(p.n));
        SimonFunction f = SimonFunction::generate(p.n, p.m, s, gen());
        auto fam = split(f, p.t);
        auto dist = improved_measurement_distribution(fam);
        auto reference = refsim::marginal_prefix(
            refsim::improved_circuit(test_util::int_table(f.table()), p.n, p.m, p.t),
            p.n + ((1 << p.t) + 1) * p.m, p.n);
        check_against_reference(dist, reference, static_cast<std::size_t>(p.n));

        // Certainty + uniformity: 2^(1-n) on s-perp, nothing elsewhere.
        double uniform = std::ldexp(1.0, 1 - p.n);
        for (std::uint64_t z = 0; z < (std::uint64_t{1} << p.n); ++z) {
            BitVec candidate = BitVec::from_int(z, static_cast<std::size_t>(p.n));
            double prob = probability_of(dist, candidate);
            if (dot(candidate, s) == 0) {
                CHECK(prob == doctest::Approx(uniform).epsilon(1e-10));
            } else {
                CHECK(prob <= 1e-12);
            }
        }
    }
}

TEST_CASE("n=2 t=1 final distribution is exactly half-half on {00, 11}") {
    SimonFunction f = SimonFunction::generate(2, 1, BitVec::from_string("11"), 9);
    auto dist = improved_measurement_distribution(split(f, 1));
    CHECK(probability_of(dist, BitVec::from_string("00")) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(probability_of(dist, BitVec::from_string("11")) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(probability_of(dist, BitVec::from_string("01")) <= 1e-12);
    CHECK(probability_of(dist, BitVec::from_string("10")) <= 1e-12);
}

TEST_CASE("centralized and indexed-combiner distributions coincide") {
    auto gen = test_util::rng(71);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 2 + static_cast<int>(gen() % 3);
        int t = 1 + static_cast<int>(gen() % (n - 1));
        BitVec s = test_util::random_nonzero_bitvec(gen, static_cast<std::size_t>(n));
        SimonFunction f = SimonFunction::generate(n, n - 1, s, gen());
        auto improved = improved_measurement_distribution(split(f, t));
        auto classic = classic_measurement_distribution(f);
        for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
            BitVec candidate = BitVec::from_int(z, static_cast<std::size_t>(n));
            CHECK(std::abs(probability_of(improved, candidate) -
                           probability_of(classic, candidate)) < 1e-10);
        }
    }
}

TEST_CASE("work registers end disentangled at zero") {
    SimonFunction f = SimonFunction::generate(3, 2, BitVec::from_string("101"), 11);
    auto fam = split(f, 1);
    QuantumState state = improved_final_state(fam, QuantumState::Repr::Sparse);
    auto work = measure_distribution(state, {"value0", "value1"});
    REQUIRE(work.size() == 1);
    CHECK(work[0].bits.is_zero());
    CHECK(work[0].probability == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("sorting-combiner run is supported exactly on s1-perp") {
    SimonFunction f = SimonFunction::generate(3, 2, BitVec::from_string("110"), 13);
    auto fam = split(f, 1);
    auto gen = test_util::rng(73);
    for (int i = 0; i < 12; ++i) {
        BitVec z1 = run_baseline_once(fam, gen);
        CHECK((z1 == BitVec::from_string("00") || z1 == BitVec::from_string("11")));
    }
    auto dist = baseline_measurement_distribution(fam);
    auto reference = refsim::marginal_prefix(
        refsim::baseline_circuit(test_util::int_table(f.table()), 3, 2, 1), 2 + 8, 2);
    check_against_reference(dist, reference, 2);

    // Support equals s1-perp, uniformly.
    BitVec s1 = BitVec::from_string("11");
    for (std::uint64_t z = 0; z < 4; ++z) {
        BitVec candidate = BitVec::from_int(z, 2);
        double prob = probability_of(dist, candidate);
        if (dot(candidate, s1) == 0) {
            CHECK(prob == doctest::Approx(0.5).epsilon(1e-10));
        } else {
            CHECK(prob <= 1e-12);
        }
    }

    // The uncompute sweep zeroes the value blocks with certainty; the sort
    // target keeps the sorted concatenation, one outcome per coset of u.
    QuantumState state = baseline_final_state(fam, QuantumState::Repr::Sparse);
    auto work = measure_distribution(state, {"value0", "value1"});
    REQUIRE(work.size() == 1);
    CHECK(work[0].bits.is_zero());
    CHECK(work[0].probability == doctest::Approx(1.0).epsilon(1e-10));

    std::set<std::string> expected_sorted_concats;
    for (std::uint64_t u = 0; u < 4; ++u) {
        BitVec a = fam.eval_at(0, u);
        BitVec b = fam.eval_at(1, u);
        expected_sorted_concats.insert((std::min(a, b).to_string() + std::max(a, b).to_string()));
    }
    auto sort_target = measure_distribution(state, {"sort_target"});
    std::set<std::string> observed;
    for (const auto& outcome : sort_target) {
        observed.insert(outcome.bits.to_string());
        CHECK(outcome.probability == doctest::Approx(0.5).epsilon(1e-10));
    }
    CHECK(observed == expected_sorted_concats);
}

TEST_CASE("full driver recovers the planted string") {
    SimonFunction f = SimonFunction::generate(4, 3, BitVec::from_string("1011"), 15);
    RunConfig config;
    config.algorithm = AlgorithmKind::Improved;
    config.n = 4;
    config.m = 3;
    config.t = 1;
    config.seed = 77;
    RunResult result = run_improved(f, config);
    REQUIRE(result.converged);
    CHECK(result.recovered_s == BitVec::from_string("1011"));
    CHECK(result.recovered_s == f.classical_solve());
    for (const BitVec& z : result.samples) {
        CHECK(dot(z, f.hidden_string()) == 0);
    }
    CHECK(result.repetitions_used <= config.effective_max_repetitions());

    // Same seed, same result: the driver is deterministic.
    RunResult again = run_improved(f, config);
    CHECK(again.samples == result.samples);
    CHECK(again.recovered_s == result.recovered_s);
}

TEST_CASE("driver detects the degenerate s = 0 by reaching full rank") {
    SimonFunction f = SimonFunction::generate(3, 3, BitVec(3), 15);
    RunConfig config;
    config.algorithm = AlgorithmKind::Improved;
    config.n = 3;
    config.m = 3;
    config.t = 1;
    config.seed = 5;
    RunResult result = run_improved(f, config);
    REQUIRE(result.converged);
    CHECK(result.recovered_s.is_zero());
    // Reaching rank n requires n independent samples.
    CHECK(result.repetitions_used >= 3);
}

TEST_CASE("prefix+suffix driver recovers the planted string") {
    SimonFunction f = SimonFunction::generate(4, 3, BitVec::from_string("0111"), 29);
    RunConfig config;
    config.algorithm = AlgorithmKind::Baseline;
    config.n = 4;
    config.m = 3;
    config.t = 2;
    config.seed = 31;
    RunResult result = run_baseline(f, config);
    REQUIRE(result.converged);
    CHECK(result.recovered_s == BitVec::from_string("0111"));
    // Algorithm 2 contributes its 2^t + 1 classical queries.
    CHECK(result.cost.classical_queries >= (1 << 2) + 1);
    for (const BitVec& z1 : result.samples) {
        CHECK(dot(z1, BitVec::from_string("01")) == 0);
    }
}

TEST_CASE("prefix 0 edge: full rank on the prefix, suffix still found") {
    // s = 00 || 11 with t = 2: s1 = 00 forces the basis to full rank.
    SimonFunction f = SimonFunction::generate(4, 3, BitVec::from_string("0011"), 37);
    RunConfig config;
    config.algorithm = AlgorithmKind::Baseline;
    config.n = 4;
    config.m = 3;
    config.t = 2;
    config.seed = 41;
    RunResult result = run_baseline(f, config);
    REQUIRE(result.converged);
    CHECK(result.recovered_s == BitVec::from_string("0011"));
}

TEST_CASE("one-bit prefix can resolve with zero quantum runs") {
    // t = n-1 leaves a single control qubit: the only nonzero candidate "1"
    // is checked before any sampling, and the suffix search confirms it.
    SimonFunction f = SimonFunction::generate(4, 3, BitVec::from_string("1010"), 53);
    RunConfig config;
    config.algorithm = AlgorithmKind::Baseline;
    config.n = 4;
    config.m = 3;
    config.t = 3;
    config.seed = 59;
    RunResult result = run_baseline(f, config);
    REQUIRE(result.converged);
    CHECK(result.recovered_s == BitVec::from_string("1010"));
    CHECK(result.repetitions_used == 0);
    CHECK(result.samples.empty());
    CHECK(result.cost.total_transmissions == 0);
    CHECK(result.cost.transmissions_per_run ==
          per_run_transmission_formula(AlgorithmKind::Baseline, 4, 3, 3));

    // With a zero prefix the candidate fails and sampling resumes.
    SimonFunction g = SimonFunction::generate(4, 3, BitVec::from_string("0110"), 61);
    RunResult zero_prefix = run_baseline(g, config);
    REQUIRE(zero_prefix.converged);
    CHECK(zero_prefix.recovered_s == BitVec::from_string("0110"));
    CHECK(zero_prefix.repetitions_used >= 1);
}

TEST_CASE("all three drivers agree on random instances") {
    auto gen = test_util::rng(79);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(gen() % 5);
        int t = 1 + static_cast<int>(gen() % (n - 1));
        int m = (n - 1) + static_cast<int>(gen() % 2);
        BitVec s = test_util::random_nonzero_bitvec(gen, static_cast<std::size_t>(n));
        SimonFunction f = SimonFunction::generate(n, m, s, gen());

        RunConfig config;
        config.n = n;
        config.m = m;
        config.t = t;
        config.seed = gen();

        config.algorithm = AlgorithmKind::Improved;
        RunResult improved = run(f, config);
        config.algorithm = AlgorithmKind::Baseline;
        RunResult baseline = run(f, config);
        config.algorithm = AlgorithmKind::Classic;
        RunResult classic = run(f, config);

        REQUIRE(improved.converged);
        REQUIRE(baseline.converged);
        REQUIRE(classic.converged);
        CHECK(improved.recovered_s == s);
        CHECK(baseline.recovered_s == s);
        CHECK(classic.recovered_s == s);
    }
}

TEST_CASE("exhausting max_repetitions reports a partial result") {
    SimonFunction f = SimonFunction::generate(4, 3, BitVec::from_string("1100"), 43);
    RunConfig config;
    config.algorithm = AlgorithmKind::Improved;
    config.n = 4;
    config.m = 3;
    config.t = 1;
    config.seed = 3;
    config.max_repetitions = 1;  // rank 3 is unreachable in one sample
    RunResult result = run_improved(f, config);
    CHECK_FALSE(result.converged);
    CHECK(result.repetitions_used == 1);
    CHECK(result.samples.size() == 1);
}

TEST_CASE("collected distribution is attached on request") {
    SimonFunction f = SimonFunction::generate(3, 2, BitVec::from_string("011"), 47);
    RunConfig config;
    config.algorithm = AlgorithmKind::Improved;
    config.n = 3;
    config.m = 2;
    config.t = 1;
    config.seed = 7;
    config.collect_distribution = true;
    RunResult result = run_improved(f, config);
    REQUIRE(result.exact_distribution.has_value());
    double total = 0.0;
    for (const auto& outcome : *result.exact_distribution) total += outcome.probability;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}
