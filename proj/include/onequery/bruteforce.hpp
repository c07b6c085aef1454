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
 * Exponential-cost reference pipeline on the explicit N^eta global state,
 * used to certify that the factorized pipeline computes the same marginals.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "onequery/marked_set.hpp"
#include "onequery/state.hpp"

namespace onequery {

struct ValidationCase {
    std::size_t n = 0;
    std::size_t eta = 0;
    MarkedSet marked;
};

struct CrossValidationReport {
    ValidationCase validation_case;
    /// max over subsystems and items of |marginal - factorized probability|.
    double max_probability_discrepancy = 0.0;
    /// max entrywise |global amplitude - tensor_power(factorized state)|.
    double max_amplitude_discrepancy = 0.0;
    std::uint64_t oracle_calls = 0;
};

/// Negates every basis amplitude whose digit string holds an odd number of marked digits.
[[nodiscard]] GlobalState global_parity_phase(const GlobalState &g, const MarkedSet &marked);

/// D applied to every subsystem: each digit axis in turn is reflected about its mean.
[[nodiscard]] GlobalState global_d_all(const GlobalState &g);

/// Probability distribution of subsystem `subsystem` alone.
[[nodiscard]] std::vector<double> marginal(const GlobalState &g, std::size_t subsystem);

/// Runs both pipelines for one case; throws ResourceError beyond `cap`.
[[nodiscard]] CrossValidationReport cross_validate(const ValidationCase &c,
                                                   std::size_t cap = kDefaultGlobalCap);

/// Every (N, eta, marked) with 1 <= |marked| < N, in input order, marked sets by bitmask.
/// N is limited to 16.
[[nodiscard]] std::vector<ValidationCase> validation_grid(const std::vector<std::size_t> &ns,
                                                          const std::vector<std::size_t> &etas);

} // namespace onequery
