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

#include "simon_dqc/cost_model.hpp"

#include <algorithm>
#include <stdexcept>

#include "simon_dqc/errors.hpp"

namespace simon_dqc {

namespace {

void check_distributed_params(int n, int m, int t) {
    if (n < 2 || t < 1 || t >= n || m < 1) {
        throw ParameterError("distributed cost parameters require n >= 2, 1 <= t < n, m >= 1");
    }
}

}  // namespace

std::string algorithm_name(AlgorithmKind kind) {
    switch (kind) {
        case AlgorithmKind::Classic: return "classic";
        case AlgorithmKind::Baseline: return "baseline";
        case AlgorithmKind::Improved: return "improved";
    }
    return "unknown";
}

int NodePlan::source_node() const { return 1; }

int NodePlan::index_node() const {
    if (algorithm != AlgorithmKind::Improved) {
        throw UsageError("only the improved plan has an index holder node");
    }
    return 2;
}

int NodePlan::oracle_node(std::uint64_t w_index) const {
    int first = algorithm == AlgorithmKind::Improved ? 3 : 2;
    return first + static_cast<int>(w_index);
}

int NodePlan::combiner_node() const {
    // Node 2^t+2 hosts the sorting combiner; node 2^t+3 the indexed one.
    int oracles = 1 << t;
    return algorithm == AlgorithmKind::Improved ? oracles + 3 : oracles + 2;
}

int NodePlan::max_capacity() const {
    int best = 0;
    for (const NodeSpec& node : nodes) best = std::max(best, node.qubit_capacity);
    return best;
}

NodePlan make_node_plan(AlgorithmKind algorithm, int n, int m, int t) {
    if (algorithm == AlgorithmKind::Classic) {
        throw UsageError("node plans exist for the distributed algorithms only");
    }
    check_distributed_params(n, m, t);
    NodePlan plan;
    plan.algorithm = algorithm;
    plan.n = n;
    plan.m = m;
    plan.t = t;
    plan.nodes.push_back({1, NodeSpec::Role::Source, -1, n - t});
    if (algorithm == AlgorithmKind::Improved) {
        plan.nodes.push_back({2, NodeSpec::Role::IndexHolder, -1, t});
    }
    int oracles = 1 << t;
    for (int i = 0; i < oracles; ++i) {
        plan.nodes.push_back({plan.oracle_node(static_cast<std::uint64_t>(i)),
                              NodeSpec::Role::Oracle, i, n - t + m});
    }
    int combiner_capacity = algorithm == AlgorithmKind::Improved ? (oracles + 1) * m + t
                                                                 : 2 * oracles * m;
    plan.nodes.push_back({plan.combiner_node(), NodeSpec::Role::Combiner, -1, combiner_capacity});
    return plan;
}

int active_qubits(AlgorithmKind algorithm, int n, int m, int t) {
    if (n < 1 || m < 1 || t < 0 || t >= n) {
        throw ParameterError("invalid active-qubit parameters");
    }
    if (algorithm == AlgorithmKind::Classic) {
        return n + m;
    }
    return n + m - t;
}

int max_node_qubits(AlgorithmKind algorithm, int n, int m, int t) {
    if (algorithm == AlgorithmKind::Classic) {
        return n + m;
    }
    check_distributed_params(n, m, t);
    int oracles = 1 << t;
    if (algorithm == AlgorithmKind::Baseline) {
        // With m >= n-1 the sorting combiner dominates the oracles' n-t+m.
        return 2 * oracles * m;
    }
    return std::max(n - t + m, (oracles + 1) * m + t);
}

std::int64_t per_run_transmission_formula(AlgorithmKind algorithm, int n, int m, int t) {
    if (algorithm == AlgorithmKind::Classic) return 0;
    check_distributed_params(n, m, t);
    std::int64_t oracles = std::int64_t{1} << t;
    std::int64_t control_chain = oracles * (n - t);
    std::int64_t gather = oracles * m + (algorithm == AlgorithmKind::Improved ? t : 0);
    return control_chain + gather;
}

CostReport count_transmissions(const TransmissionTrace& trace, AlgorithmKind algorithm, int n,
                               int m, int t, std::int64_t runs, std::int64_t classical_queries) {
    CostReport report;
    report.algorithm = algorithm;
    report.n = n;
    report.m = m;
    report.t = t;
    report.active_qubits_per_oracle = active_qubits(algorithm, n, m, t);
    report.max_node_qubits = max_node_qubits(algorithm, n, m, t);
    report.runs = runs;
    report.classical_queries = classical_queries;

    std::int64_t forward = 0;
    std::int64_t gather = 0;
    std::int64_t extended = 0;
    for (const TransmissionEvent& event : trace) {
        if (event.qubits < 0) throw std::logic_error("negative qubit count in trace");
        extended += event.qubits;
        switch (event.leg) {
            case TransmissionEvent::Leg::ForwardControl: forward += event.qubits; break;
            case TransmissionEvent::Leg::Gather: gather += event.qubits; break;
            default: break;
        }
    }

    report.formula_per_run = per_run_transmission_formula(algorithm, n, m, t);
    report.formula_total = report.formula_per_run * runs;
    report.total_transmissions = forward + gather;
    report.total_extended = extended;
    report.transmissions_per_run = runs > 0 ? report.total_transmissions / runs : report.formula_per_run;
    report.extended_per_run = runs > 0 ? report.total_extended / runs : 0;

    if (algorithm != AlgorithmKind::Classic) {
        std::int64_t oracles = std::int64_t{1} << t;
        std::int64_t expect_forward = runs * oracles * (n - t);
        std::int64_t expect_gather = runs * (oracles * m + (algorithm == AlgorithmKind::Improved ? t : 0));
        if (forward != expect_forward || gather != expect_gather) {
            throw std::logic_error("transmission trace does not match the closed-form hop counts");
        }
        if (report.total_transmissions != report.formula_total) {
            throw std::logic_error("total transmissions disagree with per-run formula x runs");
        }
    } else if (!trace.empty()) {
        throw std::logic_error("centralized runs must not produce transmission events");
    }
    return report;
}

ComparisonTable comparison_table(int n, int m, int t) {
    check_distributed_params(n, m, t);
    ComparisonTable table;
    table.n = n;
    table.m = m;
    table.t = t;
    table.classic_active_qubits = active_qubits(AlgorithmKind::Classic, n, m, 0);
    table.distributed_active_qubits = active_qubits(AlgorithmKind::Improved, n, m, t);
    table.baseline_max_node_qubits = max_node_qubits(AlgorithmKind::Baseline, n, m, t);
    table.improved_max_node_qubits = max_node_qubits(AlgorithmKind::Improved, n, m, t);
    table.baseline_per_run = per_run_transmission_formula(AlgorithmKind::Baseline, n, m, t);
    table.improved_per_run = per_run_transmission_formula(AlgorithmKind::Improved, n, m, t);
    table.baseline_total_form = static_cast<std::int64_t>(n - t) * table.baseline_per_run;
    table.improved_total_form = static_cast<std::int64_t>(n) * table.improved_per_run;
    table.baseline_complexity = "O((n-t)(2^t(n+m-t)))";
    table.improved_complexity = "O(n(2^t(n+m-t)+t))";
    return table;
}

}  // namespace simon_dqc
