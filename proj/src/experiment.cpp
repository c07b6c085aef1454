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

#include "onequery/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "onequery/errors.hpp"
#include "onequery/operators.hpp"

namespace onequery {

namespace {

// Unbiased draw from [0, bound) by rejection; std distributions are not
// portable across standard libraries.
std::uint64_t bounded(std::mt19937_64 &gen, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = gen();
    while (x >= limit) {
        x = gen();
    }
    return x % bound;
}

} // namespace

TrialResult run_trial(const ExperimentPlan &plan, std::uint64_t trial_index) {
    const auto db = plan.database();
    TrialResult result;
    const auto queried = quantum_phase_query(uniform_state(db.size()), db, result.ledger);
    const auto reflected = inversion_about_average(queried);
    const auto dist = measurement_distribution(reflected);
    result.tally = sample_tally(dist, plan.eta, trial_seed(plan.seed, trial_index));
    result.decoded = result.tally.decoded;
    result.success = db.marked().contains(result.decoded);
    return result;
}

ExperimentReport run_experiment(const ExperimentPlan &plan, const RunOptions &options) {
    const auto start = std::chrono::steady_clock::now();
    const auto db = plan.database();

    std::vector<TrialResult> results(plan.trials);
    const unsigned workers =
        std::max(1U, std::min<unsigned>(options.workers, static_cast<unsigned>(plan.trials)));
    if (workers == 1) {
        for (std::uint64_t t = 0; t < plan.trials; ++t) {
            results[t] = run_trial(plan, t);
        }
    } else {
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        for (std::uint64_t t = w; t < plan.trials; t += workers) {
                            results[t] = run_trial(plan, t);
                        }
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (const auto &e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
    }

    ExperimentReport r;
    r.n = db.size();
    r.k = db.marked_count();
    r.eta = plan.eta;
    r.trials = plan.trials;
    r.seed = plan.seed;
    r.marked.assign(db.marked().begin(), db.marked().end());

    std::uint64_t successes = 0;
    std::uint64_t ties = 0;
    std::uint64_t marked_total = 0;
    for (const auto &t : results) {
        if (t.ledger.oracle_calls != 1) {
            throw std::logic_error("quantum trial used " + std::to_string(t.ledger.oracle_calls) +
                                   " oracle calls");
        }
        successes += t.success ? 1 : 0;
        ties += t.tally.tie ? 1 : 0;
        for (const auto m : db.marked()) {
            marked_total += t.tally.counts[m];
        }
    }
    const double trials = static_cast<double>(plan.trials);
    r.success_rate = static_cast<double>(successes) / trials;
    r.tie_rate = static_cast<double>(ties) / trials;
    r.mean_marked_count =
        static_cast<double>(marked_total) / (trials * static_cast<double>(r.k));
    const auto amps = post_step_amplitudes(r.n, r.k);
    r.exact_marked_probability = amps.marked_probability();
    r.approx_9_over_n = 9.0 / static_cast<double>(r.n);
    r.probability_gap = probability_gap(r.n, r.k);
    r.quantum_oracle_calls_per_trial = 1;

    if (r.k == 1) {
        QueryLedger classical;
        const auto found = classical_binary_search(db, classical);
        if (found != r.marked.front()) {
            throw std::logic_error("classical baseline returned the wrong item");
        }
        r.classical_calls = classical.classical_calls;
    } else {
        r.warnings.emplace_back("classical baseline skipped: more than one marked item");
    }
    if (db.many_marked()) {
        r.warnings.emplace_back("k >= N/4: majority decoding is unreliable");
    }
    if (ties > 0) {
        r.warnings.emplace_back("ties in " + std::to_string(ties) + " of " +
                                std::to_string(plan.trials) + " trials");
    }
    if (options.timing) {
        r.wall_time_ms = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                  start)
                .count());
    }
    return r;
}

std::uint64_t EtaRule::eta_for(std::size_t n) const {
    return fixed ? *fixed : recommended_eta(n, multiplier);
}

MarkedSet random_marked_set(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k > n) {
        throw DomainError("cannot mark " + std::to_string(k) + " of " + std::to_string(n) +
                          " items");
    }
    std::vector<std::size_t> items(n);
    for (std::size_t i = 0; i < n; ++i) {
        items[i] = i;
    }
    std::mt19937_64 gen(splitmix64(seed ^ 0x6d61726b6564ULL));
    for (std::size_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<std::size_t>(bounded(gen, n - i));
        std::swap(items[i], items[j]);
    }
    items.resize(k);
    return MarkedSet(std::move(items));
}

std::vector<ExperimentReport> sweep(const std::vector<std::size_t> &ns,
                                    const std::vector<std::size_t> &ks, const EtaRule &eta_rule,
                                    std::uint64_t trials, std::uint64_t seed,
                                    const RunOptions &options) {
    std::vector<ExperimentReport> rows;
    rows.reserve(ns.size() * ks.size());
    for (const auto n : ns) {
        for (const auto k : ks) {
            ExperimentPlan plan{n, random_marked_set(n, k, seed), eta_rule.eta_for(n), seed,
                                trials};
            rows.push_back(run_experiment(plan, options));
        }
    }
    return rows;
}

} // namespace onequery
