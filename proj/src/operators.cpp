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

#include "onequery/operators.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "onequery/errors.hpp"

namespace onequery {

AncillaState::AncillaState(std::size_t dim, std::vector<Amplitude> amps)
    : dim_(dim), amps_(std::move(amps)) {
    require_valid_dimension(dim_);
    if (amps_.size() != 2 * dim_) {
        throw DomainError("ancilla state needs 2N amplitudes");
    }
}

AncillaState AncillaState::product(const SubsystemState &s, Amplitude b0, Amplitude b1) {
    std::vector<Amplitude> amps(2 * s.dim());
    for (std::size_t x = 0; x < s.dim(); ++x) {
        amps[2 * x] = s[x] * b0;
        amps[2 * x + 1] = s[x] * b1;
    }
    return AncillaState(s.dim(), std::move(amps));
}

AncillaState AncillaState::with_minus_ancilla(const SubsystemState &s) {
    const double h = 1.0 / std::sqrt(2.0);
    return product(s, Amplitude{h, 0.0}, Amplitude{-h, 0.0});
}

AncillaState AncillaState::basis(std::size_t dim, std::size_t x, unsigned b) {
    if (x >= dim || b > 1) {
        throw DomainError("ancilla basis index out of range");
    }
    std::vector<Amplitude> amps(2 * dim);
    amps[2 * x + b] = Amplitude{1.0, 0.0};
    return AncillaState(dim, std::move(amps));
}

double AncillaState::norm() const noexcept {
    double total = 0.0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

SubsystemState phase_invert(const SubsystemState &state, const MarkedSet &marked) {
    marked.require_within(state.dim());
    std::vector<Amplitude> amps(state.amps().begin(), state.amps().end());
    for (const auto m : marked) {
        amps[m] = -amps[m];
    }
    return SubsystemState(std::move(amps));
}

AncillaState xor_oracle_apply(const AncillaState &joint, const MarkedSet &marked) {
    marked.require_within(joint.dim());
    std::vector<Amplitude> amps(joint.amps().begin(), joint.amps().end());
    for (const auto m : marked) {
        std::swap(amps[2 * m], amps[2 * m + 1]);
    }
    return AncillaState(joint.dim(), std::move(amps));
}

SubsystemState inversion_about_average(const SubsystemState &state) {
    Amplitude sum{0.0, 0.0};
    for (const auto &a : state.amps()) {
        sum += a;
    }
    const Amplitude twice_mean = 2.0 * sum / static_cast<double>(state.dim());
    std::vector<Amplitude> amps(state.dim());
    for (std::size_t i = 0; i < state.dim(); ++i) {
        amps[i] = twice_mean - state[i];
    }
    return SubsystemState(std::move(amps));
}

RealMatrix d_matrix(std::size_t n) {
    if (n < 2) {
        throw DomainError("d_matrix needs N >= 2");
    }
    const double off = 2.0 / static_cast<double>(n);
    RealMatrix d{n, std::vector<double>(n * n, off)};
    for (std::size_t i = 0; i < n; ++i) {
        d(i, i) = -1.0 + off;
    }
    return d;
}

PostStepAmplitudes post_step_amplitudes(std::size_t n, std::size_t k) {
    if (n < 2 || k < 1 || k >= n) {
        throw DomainError("post_step_amplitudes needs 1 <= k < N, got N=" + std::to_string(n) +
                          " k=" + std::to_string(k));
    }
    const double nn = static_cast<double>(n);
    const double kk = static_cast<double>(k);
    const double scale = nn * std::sqrt(nn);
    return {(3.0 * nn - 4.0 * kk) / scale, (nn - 4.0 * kk) / scale};
}

} // namespace onequery
