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

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "simon_dqc/bitvec.hpp"
#include "simon_dqc/register_layout.hpp"
#include "simon_dqc/simon_function.hpp"

namespace simon_dqc {

using Amplitude = std::complex<double>;

/// Comparison tolerance for amplitudes and probabilities. All phases in the
/// simulated circuits are +-1 and all magnitudes dyadic, so anything larger
/// than rounding noise is a real discrepancy.
inline constexpr double kAmplitudeTolerance = 1e-10;

struct MeasurementOutcome {
    BitVec bits;
    double probability = 0.0;
};

/**
 * Exact complex-amplitude state over a RegisterLayout.
 *
 * Two interchangeable representations:
 *  - Dense: a full vector of 2^W amplitudes, capped at W = 24.
 *  - Sparse: a map from basis bit string to amplitude, for any width.
 *
 * Auto selection uses Dense up to 16 qubits and Sparse beyond. A state is
 * exclusively owned by one run; operators are pure transformations that
 * consume and return states.
 */
class QuantumState {
  public:
    enum class Repr { Dense, Sparse };

    static constexpr std::size_t kDenseWidthCap = 24;
    static constexpr std::size_t kDenseDefaultMax = 16;

    /// |0...0> in the representation best suited to the layout width.
    static QuantumState zero_state(RegisterLayout layout);
    static QuantumState zero_state(RegisterLayout layout, Repr repr);

    /// A single basis state with amplitude 1.
    static QuantumState basis_state(RegisterLayout layout, const BitVec& basis, Repr repr);

    const RegisterLayout& layout() const { return layout_; }
    Repr repr() const { return repr_; }

    Amplitude amplitude(const BitVec& basis) const;
    double norm() const;
    std::size_t support_size() const;

    /// Visits every nonzero-amplitude basis state (order unspecified).
    void for_each(const std::function<void(const BitVec&, Amplitude)>& visit) const;

    /// One line per nonzero amplitude, `bits re im`, sorted by bit string.
    std::string dump() const;

    // Used by the operator implementations and tests.
    void add_amplitude(const BitVec& basis, Amplitude a);

  private:
    QuantumState(RegisterLayout layout, Repr repr);

    RegisterLayout layout_;
    Repr repr_;
    std::vector<Amplitude> dense_;
    std::unordered_map<BitVec, Amplitude, BitVecHash> sparse_;

    friend QuantumState hadamard_layer(QuantumState state, const std::vector<std::string>& segment_names);
    friend QuantumState apply_basis_xor(QuantumState state,
                                        const std::function<BitVec(const BitVec&)>& xor_mask);
};

/// H on every qubit of each named segment; other qubits untouched.
QuantumState hadamard_layer(QuantumState state, const std::vector<std::string>& segment_names);

/**
 * Basis-state map key -> key xor xor_mask(key); the mask must not depend on
 * the bits it flips, which makes the map an involution. All XOR-style
 * operators (query oracles, the indexed combiner, the sorting combiner) are
 * instances of this.
 */
QuantumState apply_basis_xor(QuantumState state, const std::function<BitVec(const BitVec&)>& xor_mask);

/// Query oracle of a subfunction: value block BI(w) ^= f_w(control).
QuantumState apply_suboracle(QuantumState state, const SubfunctionFamily& fam, const BitVec& w,
                             const std::string& target_segment);

/// Full-function query oracle: target ^= f(control). Used by the
/// centralized circuit.
QuantumState apply_oracle(QuantumState state, const SimonFunction& f,
                          const std::string& control_segment, const std::string& target_segment);

/// Indexed combiner: target ^= value block selected by the index segment.
QuantumState apply_V(QuantumState state);

/// Sorting combiner: sort_target ^= concatenation of the value blocks in
/// ascending lexicographic order (duplicates kept adjacent).
QuantumState apply_usort(QuantumState state);

/**
 * Exact marginal distribution over the named segments, concatenated in the
 * order given. Analysis mode: the state is not collapsed. Outcomes are
 * sorted by bit string; groups with probability exactly zero are dropped.
 */
std::vector<MeasurementOutcome> measure_distribution(const QuantumState& state,
                                                     const std::vector<std::string>& segment_names);

/// Probability of `bits` in a distribution (0 when absent).
double probability_of(const std::vector<MeasurementOutcome>& distribution, const BitVec& bits);

/// One seeded draw from the exact marginal distribution.
BitVec sample(const QuantumState& state, const std::vector<std::string>& segment_names,
              std::mt19937_64& rng);
BitVec sample(const QuantumState& state, const std::vector<std::string>& segment_names,
              std::uint64_t seed);

/// Largest entrywise amplitude difference; representations may differ.
double max_amplitude_difference(const QuantumState& a, const QuantumState& b);

}  // namespace simon_dqc
