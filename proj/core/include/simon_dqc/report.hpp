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
#include <string>
#include <utility>
#include <vector>

#include "simon_dqc/algorithms.hpp"
#include "simon_dqc/cost_model.hpp"

namespace simon_dqc {

std::optional<AlgorithmKind> algorithm_from_name(const std::string& name);

struct TrialReport {
    int trial = 0;
    std::uint64_t seed = 0;
    bool converged = false;
    std::string recovered_s;  // empty when the trial did not converge
    bool matches_planted = false;
    bool samples_orthogonal = false;  // every sample annihilates the planted s / s1
    int repetitions = 0;
    std::vector<std::string> samples;
    CostReport cost;
    std::optional<std::vector<std::pair<std::string, double>>> distribution;

    bool operator==(const TrialReport&) const = default;
};

/**
 * Machine-readable run report. Serializes to a JSON document with a fixed
 * key order, so identical seed + config produce byte-identical output and
 * the document round-trips losslessly.
 */
struct ReportDocument {
    std::string command = "run";
    std::string algorithm;
    int n = 0;
    int m = 0;
    int t = 0;
    std::string planted_s;
    std::uint64_t seed = 0;
    int trials = 1;
    int max_repetitions = 0;
    int jobs = 1;
    std::string source;  // "inline" or "file:<path>"
    std::vector<TrialReport> trial_reports;
    int converged_count = 0;
    int matched_count = 0;
    double mean_repetitions = 0.0;

    bool operator==(const ReportDocument&) const = default;

    std::string serialize() const;
    static ReportDocument parse(const std::string& text);
};

/// Builds a trial entry from a driver result, filling in the built-in checks.
TrialReport make_trial_report(int trial, std::uint64_t seed, const BitVec& planted,
                              const RunResult& result);

/// Fills the summary counters from the trial entries.
void finalize_report(ReportDocument& doc);

}  // namespace simon_dqc
