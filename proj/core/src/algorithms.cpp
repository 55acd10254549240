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

#include "simon_dqc/algorithms.hpp"

#include "simon_dqc/errors.hpp"
#include "simon_dqc/gf2.hpp"
#include "simon_dqc/rng.hpp"

namespace simon_dqc {

namespace {

void emit(TransmissionTrace* trace, TransmissionEvent::Leg leg, int qubits, int from, int to) {
    if (trace != nullptr) {
        trace->push_back({leg, qubits, from, to});
    }
}

// Query sweeps run w ascending on the way in and descending on the way out,
// matching the operator-product convention where the rightmost factor acts
// first. Each oracle writes its own value block, so the sweep order only
// shows up in the hop trace.
QuantumState forward_sweep(QuantumState state, const SubfunctionFamily& fam,
                           const NodePlan& plan, TransmissionTrace* trace) {
    int control_width = fam.n() - fam.t();
    int prev = plan.source_node();
    for (std::uint64_t wi = 0; wi < fam.subfunction_count(); ++wi) {
        int node = plan.oracle_node(wi);
        emit(trace, TransmissionEvent::Leg::ForwardControl, control_width, prev, node);
        prev = node;
        BitVec w = BitVec::from_int(wi, static_cast<std::size_t>(fam.t()));
        state = apply_suboracle(std::move(state), fam, w, RegisterLayout::value_block_name(wi));
    }
    return state;
}

QuantumState backward_sweep(QuantumState state, const SubfunctionFamily& fam,
                            const NodePlan& plan, TransmissionTrace* trace) {
    int control_width = fam.n() - fam.t();
    std::uint64_t count = fam.subfunction_count();
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint64_t wi = count - 1 - i;
        if (i > 0) {
            emit(trace, TransmissionEvent::Leg::BackwardControl, control_width,
                 plan.oracle_node(wi + 1), plan.oracle_node(wi));
        }
        BitVec w = BitVec::from_int(wi, static_cast<std::size_t>(fam.t()));
        state = apply_suboracle(std::move(state), fam, w, RegisterLayout::value_block_name(wi));
    }
    emit(trace, TransmissionEvent::Leg::BackwardControl, control_width, plan.oracle_node(0),
         plan.source_node());
    return state;
}

void emit_gather(const NodePlan& plan, const SubfunctionFamily& fam, TransmissionTrace* trace) {
    if (plan.algorithm == AlgorithmKind::Improved) {
        emit(trace, TransmissionEvent::Leg::Gather, fam.t(), plan.index_node(),
             plan.combiner_node());
    }
    for (std::uint64_t wi = 0; wi < fam.subfunction_count(); ++wi) {
        emit(trace, TransmissionEvent::Leg::Gather, fam.m(), plan.oracle_node(wi),
             plan.combiner_node());
    }
}

void emit_scatter(const NodePlan& plan, const SubfunctionFamily& fam, TransmissionTrace* trace) {
    std::uint64_t count = fam.subfunction_count();
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint64_t wi = count - 1 - i;
        emit(trace, TransmissionEvent::Leg::ReturnScatter, fam.m(), plan.combiner_node(),
             plan.oracle_node(wi));
    }
    if (plan.algorithm == AlgorithmKind::Improved) {
        emit(trace, TransmissionEvent::Leg::ReturnScatter, fam.t(), plan.combiner_node(),
             plan.index_node());
    }
}

}  // namespace

QuantumState::Repr pick_repr(std::size_t total_width, std::optional<QuantumState::Repr> requested) {
    if (requested) return *requested;
    return total_width <= QuantumState::kDenseDefaultMax ? QuantumState::Repr::Dense
                                                         : QuantumState::Repr::Sparse;
}

QuantumState improved_final_state(const SubfunctionFamily& fam, QuantumState::Repr repr,
                                  TransmissionTrace* trace) {
    NodePlan plan = make_node_plan(AlgorithmKind::Improved, fam.n(), fam.m(), fam.t());
    RegisterLayout layout = RegisterLayout::improved(fam.n(), fam.t(), fam.m());
    QuantumState state = QuantumState::zero_state(std::move(layout), repr);
    state = hadamard_layer(std::move(state), {"control", "index"});
    state = forward_sweep(std::move(state), fam, plan, trace);
    emit_gather(plan, fam, trace);
    state = apply_V(std::move(state));
    emit_scatter(plan, fam, trace);
    state = backward_sweep(std::move(state), fam, plan, trace);
    state = hadamard_layer(std::move(state), {"control", "index"});
    return state;
}

QuantumState baseline_final_state(const SubfunctionFamily& fam, QuantumState::Repr repr,
                                  TransmissionTrace* trace) {
    NodePlan plan = make_node_plan(AlgorithmKind::Baseline, fam.n(), fam.m(), fam.t());
    RegisterLayout layout = RegisterLayout::baseline(fam.n(), fam.t(), fam.m());
    QuantumState state = QuantumState::zero_state(std::move(layout), repr);
    state = hadamard_layer(std::move(state), {"control"});
    state = forward_sweep(std::move(state), fam, plan, trace);
    emit_gather(plan, fam, trace);
    state = apply_usort(std::move(state));
    emit_scatter(plan, fam, trace);
    state = backward_sweep(std::move(state), fam, plan, trace);
    state = hadamard_layer(std::move(state), {"control"});
    return state;
}

QuantumState classic_final_state(const SimonFunction& f, QuantumState::Repr repr) {
    RegisterLayout layout = RegisterLayout::classic(f.n(), f.m());
    QuantumState state = QuantumState::zero_state(std::move(layout), repr);
    state = hadamard_layer(std::move(state), {"input"});
    state = apply_oracle(std::move(state), f, "input", "output");
    state = hadamard_layer(std::move(state), {"input"});
    return state;
}

std::vector<MeasurementOutcome> improved_measurement_distribution(
    const SubfunctionFamily& fam, std::optional<QuantumState::Repr> repr) {
    RegisterLayout layout = RegisterLayout::improved(fam.n(), fam.t(), fam.m());
    QuantumState state = improved_final_state(fam, pick_repr(layout.total_width(), repr));
    return measure_distribution(state, {"control", "index"});
}

std::vector<MeasurementOutcome> baseline_measurement_distribution(
    const SubfunctionFamily& fam, std::optional<QuantumState::Repr> repr) {
    RegisterLayout layout = RegisterLayout::baseline(fam.n(), fam.t(), fam.m());
    QuantumState state = baseline_final_state(fam, pick_repr(layout.total_width(), repr));
    return measure_distribution(state, {"control"});
}

std::vector<MeasurementOutcome> classic_measurement_distribution(
    const SimonFunction& f, std::optional<QuantumState::Repr> repr) {
    RegisterLayout layout = RegisterLayout::classic(f.n(), f.m());
    QuantumState state = classic_final_state(f, pick_repr(layout.total_width(), repr));
    return measure_distribution(state, {"input"});
}

BitVec run_improved_once(const SubfunctionFamily& fam, std::mt19937_64& rng,
                         TransmissionTrace* trace, std::optional<QuantumState::Repr> repr) {
    RegisterLayout layout = RegisterLayout::improved(fam.n(), fam.t(), fam.m());
    QuantumState state = improved_final_state(fam, pick_repr(layout.total_width(), repr), trace);
    return sample(state, {"control", "index"}, rng);
}

BitVec run_improved_once(const SubfunctionFamily& fam, std::uint64_t seed) {
    auto rng = make_rng(seed);
    return run_improved_once(fam, rng);
}

BitVec run_baseline_once(const SubfunctionFamily& fam, std::mt19937_64& rng,
                         TransmissionTrace* trace, std::optional<QuantumState::Repr> repr) {
    RegisterLayout layout = RegisterLayout::baseline(fam.n(), fam.t(), fam.m());
    QuantumState state = baseline_final_state(fam, pick_repr(layout.total_width(), repr), trace);
    return sample(state, {"control"}, rng);
}

BitVec run_baseline_once(const SubfunctionFamily& fam, std::uint64_t seed) {
    auto rng = make_rng(seed);
    return run_baseline_once(fam, rng);
}

BitVec run_classic_once(const SimonFunction& f, std::mt19937_64& rng,
                        std::optional<QuantumState::Repr> repr) {
    RegisterLayout layout = RegisterLayout::classic(f.n(), f.m());
    QuantumState state = classic_final_state(f, pick_repr(layout.total_width(), repr));
    return sample(state, {"input"}, rng);
}

BitVec run_classic_once(const SimonFunction& f, std::uint64_t seed) {
    auto rng = make_rng(seed);
    return run_classic_once(f, rng);
}

namespace {

struct EliminationState {
    Gf2Basis basis;
    std::size_t candidate_checked_at_rank;  // avoids re-checking a stale candidate

    explicit EliminationState(std::size_t width)
        : basis(width), candidate_checked_at_rank(static_cast<std::size_t>(-1)) {}
};

// Outcome of one look at the basis between samples.
enum class RankStatus { NeedMoreSamples, CandidateReady, FullRank };

RankStatus rank_status(EliminationState& st) {
    std::size_t width = st.basis.width();
    if (st.basis.rank() == width) return RankStatus::FullRank;
    if (st.basis.rank() + 1 == width && st.candidate_checked_at_rank != st.basis.rank()) {
        st.candidate_checked_at_rank = st.basis.rank();
        return RankStatus::CandidateReady;
    }
    return RankStatus::NeedMoreSamples;
}

}  // namespace

RunResult run_improved(const SimonFunction& f, const RunConfig& config) {
    SubfunctionFamily fam = split(f, config.t);
    int n = f.n();
    auto rng = make_rng(config.seed);
    int max_reps = config.effective_max_repetitions();

    RunResult result;
    TransmissionTrace trace;
    EliminationState st(static_cast<std::size_t>(n));
    std::int64_t classical_queries = 0;
    BitVec zero_input(static_cast<std::size_t>(n));

    while (true) {
        switch (rank_status(st)) {
            case RankStatus::CandidateReady: {
                BitVec candidate = *st.basis.solve_hidden();
                // One classical collision check tells the candidate apart
                // from the degenerate s = 0 (both annihilate the basis).
                classical_queries += 2;
                if (f.value(zero_input) == f.value(candidate)) {
                    result.converged = true;
                    result.recovered_s = candidate;
                }
                break;
            }
            case RankStatus::FullRank:
                result.converged = true;
                result.recovered_s = BitVec(static_cast<std::size_t>(n));
                break;
            case RankStatus::NeedMoreSamples:
                break;
        }
        if (result.converged || result.repetitions_used >= max_reps) break;

        BitVec z = run_improved_once(fam, rng, &trace, config.representation);
        result.samples.push_back(z);
        ++result.repetitions_used;
        st.basis.insert(std::move(z));
    }

    result.cost = count_transmissions(trace, AlgorithmKind::Improved, n, f.m(), config.t,
                                      result.repetitions_used, classical_queries);
    if (config.collect_distribution) {
        result.exact_distribution = improved_measurement_distribution(fam, config.representation);
    }
    return result;
}

RunResult run_baseline(const SimonFunction& f, const RunConfig& config) {
    SubfunctionFamily fam = split(f, config.t);
    int n = f.n();
    int prefix_width = n - config.t;
    auto rng = make_rng(config.seed);
    int max_reps = config.effective_max_repetitions();

    RunResult result;
    TransmissionTrace trace;
    EliminationState st(static_cast<std::size_t>(prefix_width));
    std::int64_t classical_queries = 0;

    auto conclude = [&](const BitVec& s1, const BitVec& s2) {
        result.converged = true;
        result.recovered_s = concat(s1, s2);
    };

    while (true) {
        switch (rank_status(st)) {
            case RankStatus::CandidateReady: {
                BitVec candidate = *st.basis.solve_hidden();
                // The suffix search doubles as the verifier: a wrong nonzero
                // prefix admits no colliding suffix at all.
                classical_queries += (std::int64_t{1} << config.t) + 1;
                if (auto s2 = try_find_s2(fam, candidate)) {
                    conclude(candidate, *s2);
                }
                break;
            }
            case RankStatus::FullRank: {
                BitVec s1(static_cast<std::size_t>(prefix_width));
                classical_queries += (std::int64_t{1} << config.t) + 1;
                conclude(s1, find_s2(fam, s1));
                break;
            }
            case RankStatus::NeedMoreSamples:
                break;
        }
        if (result.converged || result.repetitions_used >= max_reps) break;

        BitVec z1 = run_baseline_once(fam, rng, &trace, config.representation);
        result.samples.push_back(z1);
        ++result.repetitions_used;
        st.basis.insert(std::move(z1));
    }

    result.cost = count_transmissions(trace, AlgorithmKind::Baseline, n, f.m(), config.t,
                                      result.repetitions_used, classical_queries);
    if (config.collect_distribution) {
        result.exact_distribution = baseline_measurement_distribution(fam, config.representation);
    }
    return result;
}

RunResult run_classic(const SimonFunction& f, const RunConfig& config) {
    int n = f.n();
    auto rng = make_rng(config.seed);
    int max_reps = config.effective_max_repetitions();

    RunResult result;
    EliminationState st(static_cast<std::size_t>(n));
    std::int64_t classical_queries = 0;
    BitVec zero_input(static_cast<std::size_t>(n));

    while (true) {
        switch (rank_status(st)) {
            case RankStatus::CandidateReady: {
                BitVec candidate = *st.basis.solve_hidden();
                classical_queries += 2;
                if (f.value(zero_input) == f.value(candidate)) {
                    result.converged = true;
                    result.recovered_s = candidate;
                }
                break;
            }
            case RankStatus::FullRank:
                result.converged = true;
                result.recovered_s = BitVec(static_cast<std::size_t>(n));
                break;
            case RankStatus::NeedMoreSamples:
                break;
        }
        if (result.converged || result.repetitions_used >= max_reps) break;

        BitVec z = run_classic_once(f, rng, config.representation);
        result.samples.push_back(z);
        ++result.repetitions_used;
        st.basis.insert(std::move(z));
    }

    result.cost = count_transmissions({}, AlgorithmKind::Classic, n, f.m(), 0,
                                      result.repetitions_used, classical_queries);
    if (config.collect_distribution) {
        result.exact_distribution = classic_measurement_distribution(f, config.representation);
    }
    return result;
}

RunResult run(const SimonFunction& f, const RunConfig& config) {
    switch (config.algorithm) {
        case AlgorithmKind::Classic: return run_classic(f, config);
        case AlgorithmKind::Baseline: return run_baseline(f, config);
        case AlgorithmKind::Improved: return run_improved(f, config);
    }
    throw UsageError("unknown algorithm");
}

}  // namespace simon_dqc
