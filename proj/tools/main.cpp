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

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "simon_dqc/algorithms.hpp"
#include "simon_dqc/errors.hpp"
#include "simon_dqc/report.hpp"
#include "simon_dqc/rng.hpp"

namespace {

using namespace simon_dqc;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConvergenceFailure = 3;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SIMON_DQC_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 1;
}

BitVec parse_hidden_string(const std::string& bits, int n) {
    if (static_cast<int>(bits.size()) != n) {
        throw ParameterError("hidden string must have exactly n bits");
    }
    return BitVec::from_string(bits);
}

BitVec random_nonzero_string(int n, std::uint64_t seed) {
    auto rng = make_rng(seed);
    std::uint64_t value = 1 + uniform_below(rng, (std::uint64_t{1} << n) - 1);
    return BitVec::from_int(value, static_cast<std::size_t>(n));
}

struct InstanceOptions {
    std::string table_path;
    int n = 0;
    int m = 0;
    std::string s_bits;
};

// Builds the function under test from --table or inline parameters; the
// file header's s is authoritative when a table is given.
SimonFunction resolve_function(const InstanceOptions& opts, std::uint64_t seed) {
    if (!opts.table_path.empty()) {
        if (opts.n != 0 || opts.m != 0 || !opts.s_bits.empty()) {
            throw ParameterError("--table and inline parameters are mutually exclusive");
        }
        return SimonFunction::load_file(opts.table_path);
    }
    if (opts.n == 0 || opts.m == 0) {
        throw ParameterError("either --table or both -n and -m are required");
    }
    BitVec s = opts.s_bits.empty() ? random_nonzero_string(opts.n, derive_seed(seed, 0x5eed))
                                   : parse_hidden_string(opts.s_bits, opts.n);
    return SimonFunction::generate(opts.n, opts.m, s, derive_seed(seed, 0x9e4));
}

// ---------------------------------------------------------------- generate

int cmd_generate(int n, int m, const std::string& s_bits, std::uint64_t seed,
                 const std::string& out_path) {
    BitVec s = s_bits.empty() ? random_nonzero_string(n, derive_seed(seed, 0x5eed))
                              : parse_hidden_string(s_bits, n);
    SimonFunction f = SimonFunction::generate(n, m, s, derive_seed(seed, 0x9e4));
    f.store_file(out_path);
    std::cout << "wrote " << out_path << " (n=" << n << " m=" << m << " s=" << s.to_string()
              << ")\n";
    return kExitOk;
}

// --------------------------------------------------------------------- run

void print_human_report(const ReportDocument& doc) {
    std::printf("algorithm      %s\n", doc.algorithm.c_str());
    std::printf("n m t          %d %d %d\n", doc.n, doc.m, doc.t);
    std::printf("planted s      %s\n", doc.planted_s.c_str());
    std::printf("seed           %llu\n", static_cast<unsigned long long>(doc.seed));
    for (const TrialReport& trial : doc.trial_reports) {
        std::printf("trial %-3d      %s  reps=%d  samples=%zu  transmissions=%lld (per run %lld)\n",
                    trial.trial, trial.converged ? trial.recovered_s.c_str() : "(no convergence)",
                    trial.repetitions, trial.samples.size(),
                    static_cast<long long>(trial.cost.total_transmissions),
                    static_cast<long long>(trial.cost.transmissions_per_run));
    }
    std::printf("converged      %d/%d\n", doc.converged_count, doc.trials);
    std::printf("matched        %d/%d\n", doc.matched_count, doc.trials);
    std::printf("mean reps      %.3f\n", doc.mean_repetitions);
}

int cmd_run(const std::string& algorithm, const InstanceOptions& instance, int t,
            std::uint64_t seed, int trials, int max_reps, const std::string& format, int jobs,
            bool with_distribution, const std::string& out_path) {
    auto kind = algorithm_from_name(algorithm);
    if (!kind) throw ParameterError("unknown algorithm: " + algorithm);
    SimonFunction f = resolve_function(instance, seed);

    RunConfig base;
    base.algorithm = *kind;
    base.n = f.n();
    base.m = f.m();
    base.t = t;
    base.max_repetitions = max_reps;
    base.collect_distribution = with_distribution;

    ReportDocument doc;
    doc.command = "run";
    doc.algorithm = algorithm;
    doc.n = f.n();
    doc.m = f.m();
    doc.t = *kind == AlgorithmKind::Classic ? 0 : t;
    doc.planted_s = f.hidden_string().to_string();
    doc.seed = seed;
    doc.trials = trials;
    doc.max_repetitions = base.effective_max_repetitions();
    doc.jobs = jobs;
    doc.source = instance.table_path.empty() ? "inline" : "file:" + instance.table_path;

    // Trials are independent; the pool shares only the immutable function.
    std::vector<RunResult> results(static_cast<std::size_t>(trials));
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (int i; (i = next.fetch_add(1)) < trials;) {
            RunConfig config = base;
            config.seed = derive_seed(seed, static_cast<std::uint64_t>(i));
            results[static_cast<std::size_t>(i)] = run(f, config);
        }
    };
    int pool_size = std::max(1, std::min(jobs, trials));
    std::vector<std::thread> pool;
    for (int i = 1; i < pool_size; ++i) pool.emplace_back(worker);
    worker();
    for (std::thread& thread : pool) thread.join();

    for (int i = 0; i < trials; ++i) {
        doc.trial_reports.push_back(make_trial_report(
            i, derive_seed(seed, static_cast<std::uint64_t>(i)), f.hidden_string(),
            results[static_cast<std::size_t>(i)]));
    }
    finalize_report(doc);

    if (format == "machine") {
        std::string text = doc.serialize();
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            out << text;
        }
    } else {
        print_human_report(doc);
    }
    return doc.converged_count == trials ? kExitOk : kExitConvergenceFailure;
}

// ------------------------------------------------------------------ verify

struct CheckResult {
    std::string name;
    std::string instance;
    bool passed = false;
    std::string detail;
};

void check_instance(const SimonFunction& f, int t, bool check_promise,
                    std::vector<CheckResult>& checks) {
    int n = f.n();
    char instance_buf[96];
    std::snprintf(instance_buf, sizeof(instance_buf), "n=%d m=%d t=%d s=%s", n, f.m(), t,
                  f.hidden_string().to_string().c_str());
    std::string instance = instance_buf;
    auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        checks.push_back({name, instance, ok, detail});
    };

    if (check_promise) {
        bool ok = f.verify_promise();
        add("promise", ok, ok ? "" : "table violates f(x)=f(y) <=> x^y in {0,s}");
        if (!ok) return;  // downstream checks assume a valid instance
    }

    const BitVec& s = f.hidden_string();
    auto fam = split(f, t);
    auto dist = improved_measurement_distribution(fam);
    double uniform = s.is_zero() ? std::ldexp(1.0, -n) : std::ldexp(1.0, 1 - n);
    bool support_ok = true;
    std::string support_detail;
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << n) && support_ok; ++z) {
        BitVec candidate = BitVec::from_int(z, static_cast<std::size_t>(n));
        double p = probability_of(dist, candidate);
        if (dot(candidate, s) == 0) {
            if (std::abs(p - uniform) > 1e-10) {
                support_ok = false;
                support_detail = "z=" + candidate.to_string() + " in s-perp has p=" +
                                 std::to_string(p);
            }
        } else if (p > 1e-12) {
            support_ok = false;
            support_detail = "z=" + candidate.to_string() + " outside s-perp has p=" +
                             std::to_string(p);
        }
    }
    add("support+uniformity", support_ok, support_detail);

    QuantumState final_state = improved_final_state(fam, QuantumState::Repr::Sparse);
    std::vector<std::string> value_segments;
    for (std::uint64_t wi = 0; wi < fam.subfunction_count(); ++wi) {
        value_segments.push_back(RegisterLayout::value_block_name(wi));
    }
    auto work = measure_distribution(final_state, value_segments);
    bool work_ok = work.size() == 1 && work[0].bits.is_zero() &&
                   std::abs(work[0].probability - 1.0) <= 1e-10;
    add("work-register-disentanglement", work_ok,
        work_ok ? "" : "value blocks are not |0...0> with certainty");

    auto classic = classic_measurement_distribution(f);
    bool equal_ok = true;
    std::string equal_detail;
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << n) && equal_ok; ++z) {
        BitVec candidate = BitVec::from_int(z, static_cast<std::size_t>(n));
        double diff =
            std::abs(probability_of(dist, candidate) - probability_of(classic, candidate));
        if (diff > 1e-10) {
            equal_ok = false;
            equal_detail = "z=" + candidate.to_string() + " differs by " + std::to_string(diff);
        }
    }
    add("classic-equivalence", equal_ok, equal_detail);
}

int cmd_verify(const InstanceOptions& instance, int t, std::uint64_t seed,
               const std::string& format) {
    std::vector<CheckResult> checks;
    if (!instance.table_path.empty() || instance.n != 0) {
        SimonFunction f = resolve_function(instance, seed);
        if (t < 1 || t >= f.n()) throw ParameterError("verify needs 1 <= t < n");
        if (f.n() > 10) {
            throw ParameterError("exact distribution verification is bounded to n <= 10");
        }
        check_instance(f, t, true, checks);
    } else {
        // Default sweep: n in {2,3,4}, every t, m = n-1, one seeded s each.
        for (int n = 2; n <= 4; ++n) {
            for (int tt = 1; tt < n; ++tt) {
                BitVec s = random_nonzero_string(
                    n, derive_seed(seed, static_cast<std::uint64_t>(n * 16 + tt)));
                SimonFunction f = SimonFunction::generate(
                    n, n - 1, s, derive_seed(seed, static_cast<std::uint64_t>(n * 64 + tt)));
                check_instance(f, tt, true, checks);
            }
        }
    }

    int failures = 0;
    if (format == "machine") {
        nlohmann::ordered_json j;
        j["command"] = "verify";
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const CheckResult& check : checks) {
            if (!check.passed) ++failures;
            list.push_back({{"check", check.name},
                            {"instance", check.instance},
                            {"passed", check.passed},
                            {"detail", check.detail}});
        }
        j["checks"] = std::move(list);
        j["failures"] = failures;
        j["skipped"] = 0;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const CheckResult& check : checks) {
            if (!check.passed) ++failures;
            std::printf("%s %-32s %s%s%s\n", check.passed ? "PASS" : "FAIL", check.name.c_str(),
                        check.instance.c_str(), check.detail.empty() ? "" : " : ",
                        check.detail.c_str());
        }
        std::printf("checks run: %zu, failures: %d, skipped: 0\n", checks.size(), failures);
    }
    return failures == 0 ? kExitOk : kExitVerificationFailure;
}

// ----------------------------------------------------------------- compare

int cmd_compare(int n, int m, int t, std::uint64_t seed, const std::string& format) {
    ComparisonTable table = comparison_table(n, m, t);
    BitVec s = random_nonzero_string(n, derive_seed(seed, 0x5eed));
    SimonFunction f = SimonFunction::generate(n, m, s, derive_seed(seed, 0x9e4));

    RunConfig config;
    config.n = n;
    config.m = m;
    config.t = t;
    config.seed = seed;
    config.algorithm = AlgorithmKind::Improved;
    RunResult improved = run_improved(f, config);
    config.algorithm = AlgorithmKind::Baseline;
    RunResult baseline = run_baseline(f, config);

    bool improved_match = improved.cost.transmissions_per_run == table.improved_per_run;
    bool baseline_match = baseline.cost.transmissions_per_run == table.baseline_per_run;

    if (format == "machine") {
        nlohmann::ordered_json j;
        j["command"] = "compare";
        j["n"] = n;
        j["m"] = m;
        j["t"] = t;
        j["active_qubits"] = {{"classic", table.classic_active_qubits},
                              {"distributed", table.distributed_active_qubits}};
        j["max_node_qubits"] = {{"baseline", table.baseline_max_node_qubits},
                                {"improved", table.improved_max_node_qubits}};
        j["per_run_transmissions"] = {{"baseline", table.baseline_per_run},
                                      {"improved", table.improved_per_run}};
        j["complexity"] = {{"baseline", table.baseline_complexity},
                           {"improved", table.improved_complexity}};
        j["measured"] = {
            {"baseline",
             {{"per_run", baseline.cost.transmissions_per_run},
              {"total", baseline.cost.total_transmissions},
              {"runs", baseline.cost.runs},
              {"matches_formula", baseline_match}}},
            {"improved",
             {{"per_run", improved.cost.transmissions_per_run},
              {"total", improved.cost.total_transmissions},
              {"runs", improved.cost.runs},
              {"matches_formula", improved_match}}}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("parameters: n=%d m=%d t=%d (planted s=%s)\n", n, m, t, s.to_string().c_str());
        std::printf("\nactive qubits per oracle\n");
        std::printf("  classic      %d\n", table.classic_active_qubits);
        std::printf("  distributed  %d\n", table.distributed_active_qubits);
        std::printf("\nmax qubits per computing node      communication complexity\n");
        std::printf("  baseline  %-8d                 %s\n", table.baseline_max_node_qubits,
                    table.baseline_complexity.c_str());
        std::printf("  improved  %-8d                 %s\n", table.improved_max_node_qubits,
                    table.improved_complexity.c_str());
        std::printf("\nper-run qubit transmissions (formula vs measured)\n");
        std::printf("  baseline  %lld vs %lld over %lld runs%s\n",
                    static_cast<long long>(table.baseline_per_run),
                    static_cast<long long>(baseline.cost.transmissions_per_run),
                    static_cast<long long>(baseline.cost.runs),
                    baseline_match ? "" : "  MISMATCH");
        std::printf("  improved  %lld vs %lld over %lld runs%s\n",
                    static_cast<long long>(table.improved_per_run),
                    static_cast<long long>(improved.cost.transmissions_per_run),
                    static_cast<long long>(improved.cost.runs),
                    improved_match ? "" : "  MISMATCH");
    }
    return improved_match && baseline_match ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact simulator and cost accountant for hidden-shift recovery on "
                 "partitioned query oracles"};
    app.require_subcommand(1);

    std::uint64_t seed = default_seed();

    // generate
    auto* generate = app.add_subcommand("generate", "write a promise-satisfying function table");
    int gen_n = 0;
    int gen_m = 0;
    std::string gen_s;
    std::string gen_out;
    generate->add_option("-n", gen_n, "input width")->required();
    generate->add_option("-m", gen_m, "output width")->required();
    generate->add_option("-s", gen_s, "hidden string (random nonzero when omitted)");
    generate->add_option("--seed", seed, "rng seed");
    generate->add_option("-o,--out", gen_out, "output path")->required();

    // run
    auto* run_cmd = app.add_subcommand("run", "execute a recovery driver");
    std::string run_alg = "improved";
    InstanceOptions run_instance;
    int run_t = 1;
    int run_trials = 1;
    int run_max_reps = 0;
    std::string run_format = "human";
    int run_jobs = 1;
    bool run_dist = false;
    std::string run_out;
    run_cmd->add_option("--alg", run_alg, "classic|baseline|improved")->required();
    run_cmd->add_option("--table", run_instance.table_path, "function table file");
    run_cmd->add_option("-n", run_instance.n, "input width (inline instance)");
    run_cmd->add_option("-m", run_instance.m, "output width (inline instance)");
    run_cmd->add_option("-s", run_instance.s_bits, "hidden string (inline instance)");
    run_cmd->add_option("-t", run_t, "split width (ignored by classic)");
    run_cmd->add_option("--seed", seed, "rng seed");
    run_cmd->add_option("--trials", run_trials, "independent trials")->check(CLI::PositiveNumber);
    run_cmd->add_option("--max-reps", run_max_reps, "repetition cap (default 10(n+1))");
    run_cmd->add_option("--format", run_format, "human|machine")
        ->check(CLI::IsMember({"human", "machine"}));
    run_cmd->add_option("--jobs", run_jobs, "worker pool size")->check(CLI::PositiveNumber);
    run_cmd->add_flag("--distributions", run_dist, "attach the exact measurement distribution");
    run_cmd->add_option("-o,--out", run_out, "write the report to a file");

    // verify
    auto* verify = app.add_subcommand("verify", "check the built-in invariants");
    InstanceOptions verify_instance;
    int verify_t = 1;
    std::string verify_format = "human";
    verify->add_option("--table", verify_instance.table_path, "function table file");
    verify->add_option("-n", verify_instance.n, "input width (inline instance)");
    verify->add_option("-m", verify_instance.m, "output width (inline instance)");
    verify->add_option("-s", verify_instance.s_bits, "hidden string (inline instance)");
    verify->add_option("-t", verify_t, "split width");
    verify->add_option("--seed", seed, "rng seed");
    verify->add_option("--format", verify_format, "human|machine")
        ->check(CLI::IsMember({"human", "machine"}));

    // compare
    auto* compare = app.add_subcommand("compare", "print the qubit/communication comparison");
    int cmp_n = 0;
    int cmp_m = 0;
    int cmp_t = 1;
    std::string cmp_format = "human";
    compare->add_option("-n", cmp_n, "input width")->required();
    compare->add_option("-m", cmp_m, "output width")->required();
    compare->add_option("-t", cmp_t, "split width")->required();
    compare->add_option("--seed", seed, "rng seed");
    compare->add_option("--format", cmp_format, "human|machine")
        ->check(CLI::IsMember({"human", "machine"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (generate->parsed()) {
            return cmd_generate(gen_n, gen_m, gen_s, seed, gen_out);
        }
        if (run_cmd->parsed()) {
            return cmd_run(run_alg, run_instance, run_t, seed, run_trials, run_max_reps,
                           run_format, run_jobs, run_dist, run_out);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_instance, verify_t, seed, verify_format);
        }
        if (compare->parsed()) {
            return cmd_compare(cmp_n, cmp_m, cmp_t, seed, cmp_format);
        }
    } catch (const ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
