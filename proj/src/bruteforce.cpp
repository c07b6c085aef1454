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

#include "onequery/bruteforce.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "onequery/ensemble.hpp"
#include "onequery/errors.hpp"
#include "onequery/operators.hpp"
#include "onequery/oracle.hpp"

namespace onequery {

namespace {

std::size_t axis_stride(const GlobalState &g, std::size_t position) {
    std::size_t stride = 1;
    for (std::size_t j = position + 1; j < g.eta(); ++j) {
        stride *= g.dim();
    }
    return stride;
}

} // namespace

GlobalState global_parity_phase(const GlobalState &g, const MarkedSet &marked) {
    marked.require_within(g.dim());
    std::vector<Amplitude> amps(g.amps().begin(), g.amps().end());
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        std::size_t rest = idx;
        unsigned parity = 0;
        for (std::size_t j = 0; j < g.eta(); ++j) {
            parity ^= marked.contains(rest % g.dim()) ? 1U : 0U;
            rest /= g.dim();
        }
        if (parity != 0) {
            amps[idx] = -amps[idx];
        }
    }
    const std::size_t size = amps.size();
    return GlobalState(g.dim(), g.eta(), std::move(amps), size);
}

GlobalState global_d_all(const GlobalState &g) {
    const std::size_t n = g.dim();
    std::vector<Amplitude> amps(g.amps().begin(), g.amps().end());
    for (std::size_t position = 0; position < g.eta(); ++position) {
        const std::size_t stride = axis_stride(g, position);
        const std::size_t block = stride * n;
        for (std::size_t base = 0; base < amps.size(); base += block) {
            for (std::size_t offset = 0; offset < stride; ++offset) {
                const std::size_t first = base + offset;
                Amplitude sum{0.0, 0.0};
                for (std::size_t d = 0; d < n; ++d) {
                    sum += amps[first + d * stride];
                }
                const Amplitude twice_mean = 2.0 * sum / static_cast<double>(n);
                for (std::size_t d = 0; d < n; ++d) {
                    auto &a = amps[first + d * stride];
                    a = twice_mean - a;
                }
            }
        }
    }
    const std::size_t size = amps.size();
    return GlobalState(n, g.eta(), std::move(amps), size);
}

std::vector<double> marginal(const GlobalState &g, std::size_t subsystem) {
    if (subsystem >= g.eta()) {
        throw DomainError("subsystem " + std::to_string(subsystem) + " out of range for eta=" +
                          std::to_string(g.eta()));
    }
    std::vector<double> p(g.dim(), 0.0);
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
        p[g.digit(idx, subsystem)] += std::norm(g[idx]);
    }
    return p;
}

CrossValidationReport cross_validate(const ValidationCase &c, std::size_t cap) {
    const DatabaseSpec db(c.n, c.marked);
    // Checked before any work so an oversized case fails fast.
    (void)global_size(c.n, c.eta, cap);

    CrossValidationReport report{c, 0.0, 0.0, 0};

    QueryLedger ledger;
    const auto factorized =
        inversion_about_average(quantum_phase_query(uniform_state(c.n), db, ledger));
    const auto expected = measurement_distribution(factorized);

    auto global = tensor_power(uniform_state(c.n), c.eta, cap);
    global = global_parity_phase(global, db.marked());
    global = global_d_all(global);
    report.oracle_calls = ledger.oracle_calls;

    for (std::size_t j = 0; j < c.eta; ++j) {
        const auto p = marginal(global, j);
        for (std::size_t i = 0; i < c.n; ++i) {
            report.max_probability_discrepancy =
                std::max(report.max_probability_discrepancy, std::abs(p[i] - expected[i]));
        }
    }
    const auto product = tensor_power(factorized, c.eta, cap);
    for (std::size_t idx = 0; idx < global.size(); ++idx) {
        report.max_amplitude_discrepancy =
            std::max(report.max_amplitude_discrepancy, std::abs(global[idx] - product[idx]));
    }
    return report;
}

std::vector<ValidationCase> validation_grid(const std::vector<std::size_t> &ns,
                                            const std::vector<std::size_t> &etas) {
    std::vector<ValidationCase> cases;
    for (const auto n : ns) {
        require_valid_dimension(n);
        if (n > 16) {
            throw DomainError("validation grid enumerates all marked subsets; N must be <= 16");
        }
        for (const auto eta : etas) {
            const std::uint64_t full = (std::uint64_t{1} << n) - 1;
            for (std::uint64_t mask = 1; mask < full; ++mask) {
                std::vector<std::size_t> items;
                for (std::size_t i = 0; i < n; ++i) {
                    if ((mask >> i) & 1U) {
                        items.push_back(i);
                    }
                }
                cases.push_back({n, eta, MarkedSet(std::move(items))});
            }
        }
    }
    return cases;
}

} // namespace onequery
