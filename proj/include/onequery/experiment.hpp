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

/**
 * @file
 * End-to-end trials, aggregated experiment reports and parameter sweeps.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "onequery/ensemble.hpp"
#include "onequery/oracle.hpp"

namespace onequery {

struct TrialResult {
    std::size_t decoded = 0;
    bool success = false;
    MeasurementTally tally;
    QueryLedger ledger;
};

struct ExperimentReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t eta = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::size_t> marked;

    double success_rate = 0.0;
    double tie_rate = 0.0;
    double mean_marked_count = 0.0; // per marked item, averaged over trials
    double exact_marked_probability = 0.0;
    double approx_9_over_n = 0.0;
    double probability_gap = 0.0;
    std::uint64_t quantum_oracle_calls_per_trial = 0;
    std::optional<std::uint64_t> classical_calls; // only for a single marked item
    std::uint64_t wall_time_ms = 0;
    std::vector<std::string> warnings;
};

struct RunOptions {
    unsigned workers = 1;
    /// Record wall time; off by default so output is byte-reproducible.
    bool timing = false;
};

/**
 * uniform -> parity phase query -> inversion about average -> sample eta
 * subsystems -> majority decode. Deterministic in (plan.seed, trial_index).
 */
[[nodiscard]] TrialResult run_trial(const ExperimentPlan &plan, std::uint64_t trial_index);

[[nodiscard]] ExperimentReport run_experiment(const ExperimentPlan &plan,
                                              const RunOptions &options = {});

/// Subsystem count per (N, k): a fixed eta when set, else recommended_eta(N, multiplier).
struct EtaRule {
    std::optional<std::uint64_t> fixed;
    double multiplier = kDefaultEtaMultiplier;

    [[nodiscard]] std::uint64_t eta_for(std::size_t n) const;
};

/// k distinct items of [0, n) chosen by a seeded partial Fisher-Yates shuffle.
[[nodiscard]] MarkedSet random_marked_set(std::size_t n, std::size_t k, std::uint64_t seed);

/// One report per (N, k) pair, N-major, in input order; marked items placed by random_marked_set.
[[nodiscard]] std::vector<ExperimentReport> sweep(const std::vector<std::size_t> &ns,
                                                  const std::vector<std::size_t> &ks,
                                                  const EtaRule &eta_rule, std::uint64_t trials,
                                                  std::uint64_t seed,
                                                  const RunOptions &options = {});

} // namespace onequery
