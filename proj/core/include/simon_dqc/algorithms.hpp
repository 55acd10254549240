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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "simon_dqc/bitvec.hpp"
#include "simon_dqc/cost_model.hpp"
#include "simon_dqc/quantum_state.hpp"
#include "simon_dqc/simon_function.hpp"

namespace simon_dqc {

struct RunConfig {
    AlgorithmKind algorithm = AlgorithmKind::Improved;
    int n = 0;
    int m = 0;
    int t = 1;  // ignored by the centralized circuit
    std::uint64_t seed = 1;
    int max_repetitions = 0;  // 0 means the default 10 (n + 1)
    bool collect_distribution = false;
    std::optional<QuantumState::Repr> representation;  // auto when unset

    int effective_max_repetitions() const {
        return max_repetitions > 0 ? max_repetitions : 10 * (n + 1);
    }
};

struct RunResult {
    bool converged = false;
    BitVec recovered_s;
    std::vector<BitVec> samples;  // every measured vector, in order
    int repetitions_used = 0;
    CostReport cost;
    std::optional<std::vector<MeasurementOutcome>> exact_distribution;
};

/// Final state of the indexed-combiner circuit over all 2^t subfunctions
/// (init, H layer, forward query sweep, indexed combiner, uncompute sweep,
/// H layer). The optional trace records every inter-node qubit hop.
QuantumState improved_final_state(const SubfunctionFamily& fam, QuantumState::Repr repr,
                                  TransmissionTrace* trace = nullptr);

/// Final state of the sorting-combiner circuit (control register only goes
/// through the H layers; the measurement covers the first n-t qubits).
QuantumState baseline_final_state(const SubfunctionFamily& fam, QuantumState::Repr repr,
                                  TransmissionTrace* trace = nullptr);

/// Final state of the centralized circuit H, query, H.
QuantumState classic_final_state(const SimonFunction& f, QuantumState::Repr repr);

QuantumState::Repr pick_repr(std::size_t total_width, std::optional<QuantumState::Repr> requested);

/// Exact distribution of the first n qubits of the indexed-combiner run.
std::vector<MeasurementOutcome> improved_measurement_distribution(
    const SubfunctionFamily& fam, std::optional<QuantumState::Repr> repr = std::nullopt);

/// Exact distribution of the first n-t qubits of the sorting-combiner run.
std::vector<MeasurementOutcome> baseline_measurement_distribution(
    const SubfunctionFamily& fam, std::optional<QuantumState::Repr> repr = std::nullopt);

/// Exact distribution of the first n qubits of the centralized run.
std::vector<MeasurementOutcome> classic_measurement_distribution(
    const SimonFunction& f, std::optional<QuantumState::Repr> repr = std::nullopt);

/// One run of the indexed-combiner circuit; returns the measured z in s-perp.
BitVec run_improved_once(const SubfunctionFamily& fam, std::mt19937_64& rng,
                         TransmissionTrace* trace = nullptr,
                         std::optional<QuantumState::Repr> repr = std::nullopt);
BitVec run_improved_once(const SubfunctionFamily& fam, std::uint64_t seed);

/// One run of the sorting-combiner circuit; returns z1 in s1-perp.
BitVec run_baseline_once(const SubfunctionFamily& fam, std::mt19937_64& rng,
                         TransmissionTrace* trace = nullptr,
                         std::optional<QuantumState::Repr> repr = std::nullopt);
BitVec run_baseline_once(const SubfunctionFamily& fam, std::uint64_t seed);

/// One run of the centralized circuit.
BitVec run_classic_once(const SimonFunction& f, std::mt19937_64& rng,
                        std::optional<QuantumState::Repr> repr = std::nullopt);
BitVec run_classic_once(const SimonFunction& f, std::uint64_t seed);

/**
 * Full recovery drivers: repeat the circuit, feed measurements into a GF(2)
 * basis, and stop as soon as the rank determines the hidden string.
 *
 * At rank n-1 the unique nonzero candidate is checked against the function
 * with one classical collision query (f(0) vs f(candidate)); if the check
 * fails the true hidden string is 0^n and sampling continues until the
 * basis reaches full rank. The sorting-combiner driver recovers the prefix
 * s1 the same way over n-t bit vectors, confirms candidates through the
 * suffix search, and returns s1 || s2.
 *
 * A result with converged = false means max_repetitions was exhausted; the
 * samples gathered so far are still reported.
 */
RunResult run_improved(const SimonFunction& f, const RunConfig& config);
RunResult run_baseline(const SimonFunction& f, const RunConfig& config);
RunResult run_classic(const SimonFunction& f, const RunConfig& config);

/// Dispatch on config.algorithm.
RunResult run(const SimonFunction& f, const RunConfig& config);

}  // namespace simon_dqc
