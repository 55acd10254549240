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
#include <string>
#include <vector>

namespace simon_dqc {

enum class AlgorithmKind { Classic, Baseline, Improved };

std::string algorithm_name(AlgorithmKind kind);

/**
 * One qubit transfer between computing nodes.
 *
 * Legs split the hops of a distributed run:
 *  - ForwardControl: the control register travelling down the oracle chain.
 *  - Gather: value/index qubits collected into the combiner node.
 *  - ReturnScatter / BackwardControl: the mirror hops of the uncompute
 *    sweep. These are reported in the extended counters only; the per-run
 *    closed forms cover ForwardControl + Gather.
 */
struct TransmissionEvent {
    enum class Leg { ForwardControl, Gather, ReturnScatter, BackwardControl };
    Leg leg;
    int qubits = 0;
    int from_node = 0;
    int to_node = 0;
};

using TransmissionTrace = std::vector<TransmissionEvent>;

/**
 * Node roster of a distributed run. Node 1 is the source holding the
 * control register; the oracles follow (preceded by the index holder, Node
 * 2, in the improved plan); the last node is the combiner.
 */
struct NodeSpec {
    enum class Role { Source, IndexHolder, Oracle, Combiner };
    int id = 0;
    Role role = Role::Source;
    std::int64_t oracle_index = -1;  // BI(w) for oracle nodes
    int qubit_capacity = 0;
};

struct NodePlan {
    AlgorithmKind algorithm = AlgorithmKind::Improved;
    int n = 0;
    int m = 0;
    int t = 0;
    std::vector<NodeSpec> nodes;

    int source_node() const;
    int index_node() const;  // improved only
    int oracle_node(std::uint64_t w_index) const;
    int combiner_node() const;
    int max_capacity() const;
};

NodePlan make_node_plan(AlgorithmKind algorithm, int n, int m, int t);

/// Active qubits engaged by one oracle call: n+m for the centralized
/// circuit, n+m-t for either distributed circuit. t may be 0 for the
/// centralized row.
int active_qubits(AlgorithmKind algorithm, int n, int m, int t);

/// Largest register any single node must hold: 2^(t+1) m for the sorting
/// combiner, (2^t+1) m + t for the indexed combiner (the larger of that and
/// the oracle's n-t+m; the combiner dominates whenever m >= n-1).
int max_node_qubits(AlgorithmKind algorithm, int n, int m, int t);

/// Qubit moves of one run covered by the closed forms:
/// 2^t (n-t) + 2^t m for the sorting run, plus t for the indexed run.
std::int64_t per_run_transmission_formula(AlgorithmKind algorithm, int n, int m, int t);

struct CostReport {
    AlgorithmKind algorithm = AlgorithmKind::Improved;
    int n = 0;
    int m = 0;
    int t = 0;
    int active_qubits_per_oracle = 0;
    int max_node_qubits = 0;
    std::int64_t runs = 0;
    std::int64_t transmissions_per_run = 0;  // ForwardControl + Gather, measured
    std::int64_t total_transmissions = 0;
    std::int64_t extended_per_run = 0;       // all legs, measured
    std::int64_t total_extended = 0;
    std::int64_t classical_queries = 0;
    std::int64_t formula_per_run = 0;
    std::int64_t formula_total = 0;          // formula_per_run * runs

    bool operator==(const CostReport&) const = default;
};

/**
 * Folds an instrumented trace into a CostReport and checks the counters
 * against the closed forms hop by hop. A mismatch means the driver and the
 * accountant disagree and throws std::logic_error.
 */
CostReport count_transmissions(const TransmissionTrace& trace, AlgorithmKind algorithm, int n,
                               int m, int t, std::int64_t runs, std::int64_t classical_queries);

/// Formula side of the published comparison tables.
struct ComparisonTable {
    int n = 0;
    int m = 0;
    int t = 0;
    // Active qubits per oracle call.
    int classic_active_qubits = 0;      // n + m
    int distributed_active_qubits = 0;  // n + m - t
    // Largest single-node register.
    int baseline_max_node_qubits = 0;   // 2^(t+1) m
    int improved_max_node_qubits = 0;   // (2^t + 1) m + t
    // Communication: per-run counts and the evaluated complexity forms.
    std::int64_t baseline_per_run = 0;          // 2^t (n + m - t)
    std::int64_t improved_per_run = 0;          // 2^t (n + m - t) + t
    std::int64_t baseline_total_form = 0;       // (n - t) * baseline_per_run
    std::int64_t improved_total_form = 0;       // n * improved_per_run
    std::string baseline_complexity;
    std::string improved_complexity;
};

ComparisonTable comparison_table(int n, int m, int t);

}  // namespace simon_dqc
