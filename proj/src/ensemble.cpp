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

#include "onequery/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "onequery/errors.hpp"
#include "onequery/operators.hpp"

namespace onequery {

DatabaseSpec ExperimentPlan::database() const {
    if (eta < 1) {
        throw DomainError("eta must be >= 1");
    }
    if (trials < 1) {
        throw DomainError("trials must be >= 1");
    }
    return DatabaseSpec(n, marked);
}

std::uint64_t MeasurementTally::total() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::vector<double> measurement_distribution(const SubsystemState &state) {
    std::vector<double> p(state.dim());
    for (std::size_t i = 0; i < state.dim(); ++i) {
        p[i] = std::norm(state[i]);
    }
    return p;
}

DecodeResult decode(std::span<const std::uint64_t> counts) {
    DecodeResult r;
    if (counts.empty()) {
        return r;
    }
    std::uint64_t best = counts[0];
    for (std::size_t i = 1; i < counts.size(); ++i) {
        if (counts[i] > best) {
            best = counts[i];
            r.item = i;
            r.tie = false;
        } else if (counts[i] == best) {
            r.tie = true;
        }
    }
    return r;
}

std::size_t decode(const MeasurementTally &tally) { return decode(tally.counts).item; }

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
    return splitmix64(seed ^ trial);
}

MeasurementTally sample_tally(std::span<const double> dist, std::uint64_t eta,
                              std::uint64_t seed) {
    if (dist.empty()) {
        throw DomainError("empty distribution");
    }
    std::vector<double> cdf(dist.size());
    double total = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        if (!std::isfinite(dist[i]) || dist[i] < 0.0) {
            throw DomainError("distribution entry " + std::to_string(i) +
                              " is negative or non-finite");
        }
        total += dist[i];
        cdf[i] = total;
    }
    if (std::abs(total - 1.0) > kNormTolerance) {
        throw DomainError("distribution sums to " + std::to_string(total) + ", expected 1");
    }
    for (auto &c : cdf) {
        c /= total;
    }

    std::mt19937_64 gen(seed);
    MeasurementTally tally;
    tally.counts.assign(dist.size(), 0);
    for (std::uint64_t draw = 0; draw < eta; ++draw) {
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        ++tally.counts[static_cast<std::size_t>(it - cdf.begin())];
    }
    const auto d = decode(tally.counts);
    tally.decoded = d.item;
    tally.tie = d.tie;
    return tally;
}

std::uint64_t recommended_eta(std::size_t n, double c) {
    if (n < 2) {
        throw DomainError("recommended_eta needs N >= 2");
    }
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw DomainError("eta multiplier must be positive");
    }
    const double nn = static_cast<double>(n);
    return static_cast<std::uint64_t>(std::ceil(c * nn * std::log(nn)));
}

DeviationStats deviation_stats(const MeasurementTally &tally, const ExperimentPlan &plan) {
    const auto db = plan.database();
    const auto amps = post_step_amplitudes(db.size(), db.marked_count());
    const double eta = static_cast<double>(plan.eta);
    const double p = amps.marked_probability();

    DeviationStats s;
    s.k_ratio = eta / static_cast<double>(db.size());
    s.expected_marked = eta * p;
    s.expected_unmarked = eta * amps.unmarked_probability();

    const std::size_t reference = *db.marked().begin();
    const double observed = reference < tally.counts.size()
                                ? static_cast<double>(tally.counts[reference])
                                : 0.0;
    const double variance = eta * p * (1.0 - p);
    s.gamma = variance > 1e-12 ? (observed - s.expected_marked) / std::sqrt(variance) : 0.0;
    return s;
}

double probability_gap(std::size_t n, std::size_t k) {
    const auto amps = post_step_amplitudes(n, k);
    return amps.marked_probability() - amps.unmarked_probability();
}

} // namespace onequery
