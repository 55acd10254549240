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

#include "simon_dqc/report.hpp"

#include <json.hpp>

#include "simon_dqc/errors.hpp"

namespace simon_dqc {

using json = nlohmann::ordered_json;

std::optional<AlgorithmKind> algorithm_from_name(const std::string& name) {
    if (name == "classic") return AlgorithmKind::Classic;
    if (name == "baseline") return AlgorithmKind::Baseline;
    if (name == "improved") return AlgorithmKind::Improved;
    return std::nullopt;
}

namespace {

json cost_to_json(const CostReport& cost) {
    json j;
    j["algorithm"] = algorithm_name(cost.algorithm);
    j["n"] = cost.n;
    j["m"] = cost.m;
    j["t"] = cost.t;
    j["active_qubits_per_oracle"] = cost.active_qubits_per_oracle;
    j["max_node_qubits"] = cost.max_node_qubits;
    j["runs"] = cost.runs;
    j["transmissions_per_run"] = cost.transmissions_per_run;
    j["total_transmissions"] = cost.total_transmissions;
    j["extended_per_run"] = cost.extended_per_run;
    j["total_extended"] = cost.total_extended;
    j["classical_queries"] = cost.classical_queries;
    j["formula_per_run"] = cost.formula_per_run;
    j["formula_total"] = cost.formula_total;
    return j;
}

CostReport cost_from_json(const json& j) {
    CostReport cost;
    auto kind = algorithm_from_name(j.at("algorithm").get<std::string>());
    if (!kind) throw ParameterError("unknown algorithm in report");
    cost.algorithm = *kind;
    cost.n = j.at("n").get<int>();
    cost.m = j.at("m").get<int>();
    cost.t = j.at("t").get<int>();
    cost.active_qubits_per_oracle = j.at("active_qubits_per_oracle").get<int>();
    cost.max_node_qubits = j.at("max_node_qubits").get<int>();
    cost.runs = j.at("runs").get<std::int64_t>();
    cost.transmissions_per_run = j.at("transmissions_per_run").get<std::int64_t>();
    cost.total_transmissions = j.at("total_transmissions").get<std::int64_t>();
    cost.extended_per_run = j.at("extended_per_run").get<std::int64_t>();
    cost.total_extended = j.at("total_extended").get<std::int64_t>();
    cost.classical_queries = j.at("classical_queries").get<std::int64_t>();
    cost.formula_per_run = j.at("formula_per_run").get<std::int64_t>();
    cost.formula_total = j.at("formula_total").get<std::int64_t>();
    return cost;
}

json trial_to_json(const TrialReport& trial) {
    json j;
    j["trial"] = trial.trial;
    j["seed"] = trial.seed;
    j["converged"] = trial.converged;
    j["recovered_s"] = trial.recovered_s;
    j["matches_planted"] = trial.matches_planted;
    j["samples_orthogonal"] = trial.samples_orthogonal;
    j["repetitions"] = trial.repetitions;
    j["samples"] = trial.samples;
    j["cost"] = cost_to_json(trial.cost);
    if (trial.distribution) {
        json dist = json::array();
        for (const auto& [bits, p] : *trial.distribution) {
            dist.push_back(json{{"bits", bits}, {"probability", p}});
        }
        j["distribution"] = std::move(dist);
    }
    return j;
}

TrialReport trial_from_json(const json& j) {
    TrialReport trial;
    trial.trial = j.at("trial").get<int>();
    trial.seed = j.at("seed").get<std::uint64_t>();
    trial.converged = j.at("converged").get<bool>();
    trial.recovered_s = j.at("recovered_s").get<std::string>();
    trial.matches_planted = j.at("matches_planted").get<bool>();
    trial.samples_orthogonal = j.at("samples_orthogonal").get<bool>();
    trial.repetitions = j.at("repetitions").get<int>();
    trial.samples = j.at("samples").get<std::vector<std::string>>();
    trial.cost = cost_from_json(j.at("cost"));
    if (j.contains("distribution")) {
        std::vector<std::pair<std::string, double>> dist;
        for (const auto& entry : j.at("distribution")) {
            dist.emplace_back(entry.at("bits").get<std::string>(),
                              entry.at("probability").get<double>());
        }
        trial.distribution = std::move(dist);
    }
    return trial;
}

}  // namespace

std::string ReportDocument::serialize() const {
    json j;
    j["command"] = command;
    json config;
    config["algorithm"] = algorithm;
    config["n"] = n;
    config["m"] = m;
    config["t"] = t;
    config["s"] = planted_s;
    config["seed"] = seed;
    config["trials"] = trials;
    config["max_repetitions"] = max_repetitions;
    config["jobs"] = jobs;
    config["source"] = source;
    j["config"] = std::move(config);
    json trials_json = json::array();
    for (const TrialReport& trial : trial_reports) {
        trials_json.push_back(trial_to_json(trial));
    }
    j["trials"] = std::move(trials_json);
    json summary;
    summary["converged"] = converged_count;
    summary["matched"] = matched_count;
    summary["mean_repetitions"] = mean_repetitions;
    j["summary"] = std::move(summary);
    return j.dump(2) + "\n";
}

ReportDocument ReportDocument::parse(const std::string& text) {
    json j = json::parse(text);
    ReportDocument doc;
    doc.command = j.at("command").get<std::string>();
    const json& config = j.at("config");
    doc.algorithm = config.at("algorithm").get<std::string>();
    doc.n = config.at("n").get<int>();
    doc.m = config.at("m").get<int>();
    doc.t = config.at("t").get<int>();
    doc.planted_s = config.at("s").get<std::string>();
    doc.seed = config.at("seed").get<std::uint64_t>();
    doc.trials = config.at("trials").get<int>();
    doc.max_repetitions = config.at("max_repetitions").get<int>();
    doc.jobs = config.at("jobs").get<int>();
    doc.source = config.at("source").get<std::string>();
    for (const auto& trial : j.at("trials")) {
        doc.trial_reports.push_back(trial_from_json(trial));
    }
    const json& summary = j.at("summary");
    doc.converged_count = summary.at("converged").get<int>();
    doc.matched_count = summary.at("matched").get<int>();
    doc.mean_repetitions = summary.at("mean_repetitions").get<double>();
    return doc;
}

TrialReport make_trial_report(int trial, std::uint64_t seed, const BitVec& planted,
                              const RunResult& result) {
    TrialReport entry;
    entry.trial = trial;
    entry.seed = seed;
    entry.converged = result.converged;
    entry.recovered_s = result.converged ? result.recovered_s.to_string() : "";
    entry.matches_planted = result.converged && result.recovered_s == planted;
    entry.repetitions = result.repetitions_used;
    entry.samples.reserve(result.samples.size());
    // The distributed baseline measures (n-t)-bit vectors orthogonal to the
    // prefix of s; everything else measures n-bit vectors orthogonal to s.
    entry.samples_orthogonal = true;
    for (const BitVec& z : result.samples) {
        entry.samples.push_back(z.to_string());
        if (dot(z, planted.slice(0, z.size())) != 0) entry.samples_orthogonal = false;
    }
    entry.cost = result.cost;
    if (result.exact_distribution) {
        std::vector<std::pair<std::string, double>> dist;
        dist.reserve(result.exact_distribution->size());
        for (const MeasurementOutcome& outcome : *result.exact_distribution) {
            dist.emplace_back(outcome.bits.to_string(), outcome.probability);
        }
        entry.distribution = std::move(dist);
    }
    return entry;
}

void finalize_report(ReportDocument& doc) {
    doc.converged_count = 0;
    doc.matched_count = 0;
    double total_reps = 0.0;
    for (const TrialReport& trial : doc.trial_reports) {
        if (trial.converged) ++doc.converged_count;
        if (trial.matches_planted) ++doc.matched_count;
        total_reps += trial.repetitions;
    }
    doc.mean_repetitions =
        doc.trial_reports.empty() ? 0.0 : total_reps / static_cast<double>(doc.trial_reports.size());
}

}  // namespace simon_dqc
