// Copyright 2026 The onequery Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line runner for single-query search experiments.
//
//   onequery run      --n 16 --k 1 --trials 200 --seed 7
//   onequery sweep    --n 8,16,32 --k 1 --eta-mult 4 --format json --out sweep.json
//   onequery validate [--n 2,4] [--eta 1,2,3] [--cap 1048576]
//   onequery report   sweep.json
//
// Exit codes: 0 success, 2 domain error, 3 resource cap, 4 validation failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "onequery/bruteforce.hpp"
#include "onequery/errors.hpp"
#include "onequery/experiment.hpp"
#include "onequery/report_io.hpp"

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitResource = 3;
constexpr int kExitValidation = 4;

std::vector<std::size_t> parse_list(const std::string &text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != item.size() || item.front() == '-') {
            throw onequery::DomainError("not a non-negative integer: '" + item + "'");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

struct OutputFlags {
    std::string format = "csv";
    std::string out;
    unsigned workers = 1;
    bool timing = false;
};

void add_output_flags(CLI::App *cmd, OutputFlags &flags) {
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "table"}));
    cmd->add_option("--out", flags.out, "Write output to this file instead of stdout");
    cmd->add_option("--workers", flags.workers, "Worker threads per experiment")
        ->check(CLI::Range(1U, 1024U));
    cmd->add_flag("--timing", flags.timing, "Record wall_time_ms (breaks byte-reproducibility)");
}

void emit(const std::vector<onequery::ExperimentReport> &reports, const OutputFlags &flags) {
    std::string text;
    if (flags.format == "json") {
        text = onequery::to_json(reports);
    } else if (flags.format == "table") {
        text = onequery::to_table(reports);
    } else {
        text = onequery::to_csv(reports);
    }
    // Table output already lists warnings; the others keep them off the data stream.
    if (flags.format == "csv") {
        for (const auto &r : reports) {
            for (const auto &w : r.warnings) {
                std::cerr << "warning [N=" << r.n << ", k=" << r.k << "]: " << w << '\n';
            }
        }
    }
    if (flags.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(flags.out, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open " + flags.out + " for writing");
    }
    file << text;
}

std::string describe(const onequery::MarkedSet &marked) {
    std::string s = "{";
    for (const auto m : marked) {
        if (s.size() > 1) {
            s += ",";
        }
        s += std::to_string(m);
    }
    return s + "}";
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Single-query database search simulator"};
    app.require_subcommand(1);

    // run
    auto *run = app.add_subcommand("run", "Run seeded trials for one database");
    std::size_t run_n = 0;
    std::string run_marked;
    std::size_t run_k = 0;
    std::uint64_t run_eta = 0;
    double run_mult = onequery::kDefaultEtaMultiplier;
    std::uint64_t run_trials = 100;
    std::uint64_t run_seed = 0;
    OutputFlags run_out;
    run->add_option("--n", run_n, "Number of items (power of two)")->required();
    auto *marked_opt = run->add_option("--marked", run_marked, "Marked indices, e.g. 2,5");
    auto *k_opt = run->add_option("--k", run_k, "Number of marked items, placed at random");
    marked_opt->excludes(k_opt);
    auto *eta_opt = run->add_option("--eta", run_eta, "Subsystem count");
    run->add_option("--eta-mult", run_mult, "c in eta = ceil(c N ln N)")->excludes(eta_opt);
    run->add_option("--trials", run_trials, "Number of trials");
    run->add_option("--seed", run_seed, "Base seed");
    add_output_flags(run, run_out);

    // sweep
    auto *sw = app.add_subcommand("sweep", "Run one experiment per (N, k) pair");
    std::string sw_n;
    std::string sw_k = "1";
    std::uint64_t sw_eta = 0;
    double sw_mult = onequery::kDefaultEtaMultiplier;
    std::uint64_t sw_trials = 100;
    std::uint64_t sw_seed = 0;
    OutputFlags sw_out;
    sw->add_option("--n", sw_n, "Comma-separated item counts");
    sw->add_option("--k", sw_k, "Comma-separated marked counts");
    auto *sw_eta_opt = sw->add_option("--eta", sw_eta, "Fixed subsystem count");
    sw->add_option("--eta-mult", sw_mult, "c in eta = ceil(c N ln N)")->excludes(sw_eta_opt);
    sw->add_option("--trials", sw_trials, "Trials per row");
    sw->add_option("--seed", sw_seed, "Base seed");
    add_output_flags(sw, sw_out);

    // validate
    auto *val = app.add_subcommand("validate", "Cross-check factorized and brute-force pipelines");
    std::string val_n = "2,4";
    std::string val_eta = "1,2,3";
    std::string val_marked;
    std::size_t val_cap = onequery::default_global_cap();
    double val_tol = 1e-10;
    val->add_option("--n", val_n, "Comma-separated item counts");
    val->add_option("--eta", val_eta, "Comma-separated subsystem counts");
    val->add_option("--marked", val_marked, "Check only this marked set");
    val->add_option("--cap", val_cap, "Maximum global-state amplitudes");
    val->add_option("--tol", val_tol, "Maximum allowed probability discrepancy");

    // report
    auto *rep = app.add_subcommand("report", "Pretty-print a saved JSON report");
    std::string rep_path;
    std::string rep_format = "table";
    rep->add_option("file", rep_path, "JSON report file")->required();
    rep->add_option("--format", rep_format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "table"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            onequery::MarkedSet marked;
            if (!run_marked.empty()) {
                marked = onequery::MarkedSet(parse_list(run_marked));
            } else {
                marked = onequery::random_marked_set(run_n, k_opt->count() ? run_k : 1, run_seed);
            }
            onequery::ExperimentPlan plan{run_n, marked,
                                          eta_opt->count() ? run_eta
                                                           : onequery::recommended_eta(run_n, run_mult),
                                          run_seed, run_trials};
            const auto report =
                onequery::run_experiment(plan, {run_out.workers, run_out.timing});
            emit({report}, run_out);
        } else if (*sw) {
            onequery::EtaRule rule;
            if (sw_eta_opt->count()) {
                rule.fixed = sw_eta;
            }
            rule.multiplier = sw_mult;
            const auto rows = onequery::sweep(parse_list(sw_n), parse_list(sw_k), rule, sw_trials,
                                              sw_seed, {sw_out.workers, sw_out.timing});
            emit(rows, sw_out);
        } else if (*val) {
            std::vector<onequery::ValidationCase> cases;
            if (!val_marked.empty()) {
                const auto marked = onequery::MarkedSet(parse_list(val_marked));
                for (const auto n : parse_list(val_n)) {
                    for (const auto eta : parse_list(val_eta)) {
                        cases.push_back({n, eta, marked});
                    }
                }
            } else {
                cases = onequery::validation_grid(parse_list(val_n), parse_list(val_eta));
            }
            double worst = 0.0;
            bool ok = true;
            for (const auto &c : cases) {
                const auto r = onequery::cross_validate(c, val_cap);
                const bool pass = r.max_probability_discrepancy < val_tol;
                ok = ok && pass;
                worst = std::max(worst, r.max_probability_discrepancy);
                std::printf("N=%zu eta=%zu marked=%s max_discrepancy=%.3e %s\n", c.n, c.eta,
                            describe(c.marked).c_str(), r.max_probability_discrepancy,
                            pass ? "ok" : "FAIL");
            }
            std::printf("cases=%zu worst=%.3e tol=%.1e %s\n", cases.size(), worst, val_tol,
                        ok ? "PASS" : "FAIL");
            return ok ? 0 : kExitValidation;
        } else if (*rep) {
            std::ifstream file(rep_path, std::ios::binary);
            if (!file) {
                std::cerr << "error: cannot read " << rep_path << '\n';
                return kExitDomain;
            }
            std::stringstream buf;
            buf << file.rdbuf();
            const auto reports = onequery::reports_from_json(buf.str());
            OutputFlags flags;
            flags.format = rep_format;
            emit(reports, flags);
        }
    } catch (const onequery::ResourceError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const onequery::DomainError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const onequery::UnsupportedError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return 0;
}
