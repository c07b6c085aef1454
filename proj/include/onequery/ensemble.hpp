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
 * Ensemble-scale measurement: sampling eta subsystems from the post-step
 * distribution, majority decoding and deviation statistics.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "onequery/marked_set.hpp"
#include "onequery/oracle.hpp"
#include "onequery/state.hpp"

namespace onequery {

/// Parameters of one experiment: database, subsystem count and trial schedule.
struct ExperimentPlan {
    std::size_t n = 0;
    MarkedSet marked;
    std::uint64_t eta = 0;
    std::uint64_t seed = 0;
    std::uint64_t trials = 1;

    /// Validates the plan (throws DomainError) and returns its database.
    [[nodiscard]] DatabaseSpec database() const;
};

struct MeasurementTally {
    std::vector<std::uint64_t> counts;
    std::size_t decoded = 0;
    bool tie = false;

    [[nodiscard]] std::uint64_t total() const noexcept;
};

struct DecodeResult {
    std::size_t item = 0;
    bool tie = false;
};

struct DeviationStats {
    double k_ratio = 0.0;           // eta / N
    double expected_marked = 0.0;   // eta * m^2, about 9K for k = 1
    double expected_unmarked = 0.0; // eta * u^2, about K
    double gamma = 0.0;             // standardized deviation of the marked count
};

/// p[i] = |amps[i]|^2.
[[nodiscard]] std::vector<double> measurement_distribution(const SubsystemState &state);

/// Argmax of the counts; ties go to the smallest index and set `tie`.
[[nodiscard]] DecodeResult decode(std::span<const std::uint64_t> counts);
[[nodiscard]] std::size_t decode(const MeasurementTally &tally);

/**
 * Draws eta independent outcomes from `dist` with a 64-bit Mersenne Twister
 * seeded by `seed`. Uniform variates take the top 53 bits of each output and
 * are mapped through the normalized CDF, so tallies are identical on every
 * platform for a given (dist, eta, seed).
 */
[[nodiscard]] MeasurementTally sample_tally(std::span<const double> dist, std::uint64_t eta,
                                            std::uint64_t seed);

/// Seed for trial `trial` of an experiment seeded with `seed`: splitmix64(seed ^ trial).
[[nodiscard]] std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept;

[[nodiscard]] std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// ceil(c * N * ln N).
[[nodiscard]] std::uint64_t recommended_eta(std::size_t n, double c);

inline constexpr double kDefaultEtaMultiplier = 4.0;

/**
 * Expected counts from the exact post-step probabilities and the observed
 * deviation of the reference marked item (the smallest marked index) in
 * units of the binomial standard deviation. Zero variance reports gamma 0.
 */
[[nodiscard]] DeviationStats deviation_stats(const MeasurementTally &tally,
                                             const ExperimentPlan &plan);

/// m^2 - u^2 = 8(N - 2k) / N^2.
[[nodiscard]] double probability_gap(std::size_t n, std::size_t k);

} // namespace onequery
