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

#include "onequery/state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "onequery/errors.hpp"

namespace onequery {

namespace {

double sum_of_squares(std::span<const Amplitude> amps) noexcept {
    double total = 0.0;
    for (const auto &a : amps) {
        total += std::norm(a);
    }
    return total;
}

void require_finite(std::span<const Amplitude> amps) {
    for (const auto &a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw DomainError("state contains a non-finite amplitude");
        }
    }
}

} // namespace

void require_valid_dimension(std::size_t n) {
    if (n < 2 || !is_power_of_two(n)) {
        throw DomainError("dimension must be a power of two >= 2, got " + std::to_string(n));
    }
}

SubsystemState::SubsystemState(std::vector<Amplitude> amps) : amps_(std::move(amps)) {
    require_valid_dimension(amps_.size());
    require_finite(amps_);
}

double SubsystemState::norm() const noexcept { return std::sqrt(sum_of_squares(amps_)); }

bool SubsystemState::is_normalized(double tol) const noexcept {
    return std::abs(norm() - 1.0) < tol;
}

SubsystemState SubsystemState::scaled(Amplitude factor) const {
    std::vector<Amplitude> out(amps_);
    for (auto &a : out) {
        a *= factor;
    }
    return SubsystemState(std::move(out));
}

std::size_t global_size(std::size_t dim, std::size_t eta, std::size_t cap) {
    if (eta == 0) {
        throw DomainError("eta must be >= 1");
    }
    std::size_t total = 1;
    for (std::size_t j = 0; j < eta; ++j) {
        if (total > cap / dim) {
            throw ResourceError("global state " + std::to_string(dim) + "^" +
                                std::to_string(eta) + " exceeds cap of " + std::to_string(cap) +
                                " amplitudes");
        }
        total *= dim;
    }
    return total;
}

std::size_t default_global_cap() {
    if (const char *env = std::getenv("ONEQUERY_GLOBAL_CAP")) {
        char *end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<std::size_t>(v);
        }
    }
    return kDefaultGlobalCap;
}

GlobalState::GlobalState(std::size_t dim, std::size_t eta, std::vector<Amplitude> amps,
                         std::size_t cap)
    : dim_(dim), eta_(eta), amps_(std::move(amps)) {
    require_valid_dimension(dim_);
    if (global_size(dim_, eta_, cap) != amps_.size()) {
        throw DomainError("global state needs dim^eta amplitudes");
    }
    require_finite(amps_);
}

std::size_t GlobalState::digit(std::size_t index, std::size_t position) const noexcept {
    // Digit 0 is the most significant, so skip the eta-1-position lower digits.
    for (std::size_t j = position + 1; j < eta_; ++j) {
        index /= dim_;
    }
    return index % dim_;
}

double GlobalState::norm() const noexcept { return std::sqrt(sum_of_squares(amps_)); }

bool GlobalState::is_normalized(double tol) const noexcept {
    return std::abs(norm() - 1.0) < tol;
}

SubsystemState uniform_state(std::size_t n) {
    require_valid_dimension(n);
    const double a = 1.0 / std::sqrt(static_cast<double>(n));
    return SubsystemState(std::vector<Amplitude>(n, Amplitude{a, 0.0}));
}

double norm(const SubsystemState &s) noexcept { return s.norm(); }
double norm(const GlobalState &g) noexcept { return g.norm(); }

bool equal_up_to_global_phase(const SubsystemState &a, const SubsystemState &b, double tol) {
    if (a.dim() != b.dim()) {
        throw DomainError("equal_up_to_global_phase: dimension mismatch");
    }
    const auto bs = b.amps();
    const auto pivot = static_cast<std::size_t>(
        std::max_element(bs.begin(), bs.end(),
                         [](const Amplitude &x, const Amplitude &y) {
                             return std::abs(x) < std::abs(y);
                         }) -
        bs.begin());
    const double pivot_mag = std::abs(bs[pivot]);
    if (pivot_mag < std::numeric_limits<double>::min()) {
        // b is the zero vector; only the zero vector matches it.
        return std::all_of(a.amps().begin(), a.amps().end(),
                           [tol](const Amplitude &x) { return std::abs(x) <= tol; });
    }
    const Amplitude ratio = a[pivot] / bs[pivot];
    const Amplitude phase = std::abs(ratio) > 0.0 ? ratio / std::abs(ratio) : Amplitude{1.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (std::abs(a[i] - phase * bs[i]) > tol) {
            return false;
        }
    }
    return true;
}

GlobalState tensor_power(const SubsystemState &state, std::size_t eta, std::size_t cap) {
    const std::size_t n = state.dim();
    const std::size_t total = global_size(n, eta, cap);
    // Build by repeated Kronecker product with the subsystem vector appended
    // as the new least-significant digit.
    std::vector<Amplitude> amps{Amplitude{1.0, 0.0}};
    amps.reserve(total);
    for (std::size_t j = 0; j < eta; ++j) {
        std::vector<Amplitude> next;
        next.reserve(amps.size() * n);
        for (const auto &prefix : amps) {
            for (const auto &a : state.amps()) {
                next.push_back(prefix * a);
            }
        }
        amps = std::move(next);
    }
    return GlobalState(n, eta, std::move(amps), cap);
}

} // namespace onequery
