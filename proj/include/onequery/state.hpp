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
 * State vectors for the factorized (one subsystem) and brute-force
 * (explicit tensor product) pictures.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace onequery {

using Amplitude = std::complex<double>;

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kExactTolerance = 1e-12;
inline constexpr std::size_t kDefaultGlobalCap = std::size_t{1} << 20;

[[nodiscard]] constexpr bool is_power_of_two(std::size_t n) noexcept {
    return n != 0 && (n & (n - 1)) == 0;
}

/// Throws DomainError unless n >= 2 and n is a power of two.
void require_valid_dimension(std::size_t n);

/**
 * One N-dimensional subsystem. N is a power of two >= 2 and the vector is
 * finite. Normalization is checked by `is_normalized()` rather than
 * enforced, so intermediate and test states can be built freely.
 */
class SubsystemState {
  public:
    explicit SubsystemState(std::vector<Amplitude> amps);

    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Amplitude> amps() const noexcept { return amps_; }
    [[nodiscard]] const Amplitude &operator[](std::size_t i) const { return amps_[i]; }

    [[nodiscard]] double norm() const noexcept;
    [[nodiscard]] bool is_normalized(double tol = kNormTolerance) const noexcept;

    /// Every amplitude multiplied by `factor`.
    [[nodiscard]] SubsystemState scaled(Amplitude factor) const;

  private:
    std::vector<Amplitude> amps_;
};

/**
 * Explicit state of eta subsystems: N^eta amplitudes. The basis index is a
 * big-endian base-N digit string, digit 0 (most significant) being the
 * basis state of subsystem 0.
 */
class GlobalState {
  public:
    GlobalState(std::size_t dim, std::size_t eta, std::vector<Amplitude> amps,
                std::size_t cap = kDefaultGlobalCap);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t eta() const noexcept { return eta_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Amplitude> amps() const noexcept { return amps_; }
    [[nodiscard]] const Amplitude &operator[](std::size_t i) const { return amps_[i]; }

    /// Basis state of subsystem `position` within basis index `index`.
    [[nodiscard]] std::size_t digit(std::size_t index, std::size_t position) const noexcept;

    [[nodiscard]] double norm() const noexcept;
    [[nodiscard]] bool is_normalized(double tol = kNormTolerance) const noexcept;

  private:
    std::size_t dim_;
    std::size_t eta_;
    std::vector<Amplitude> amps_;
};

/// N^eta, or throws ResourceError when it exceeds `cap` (overflow included).
[[nodiscard]] std::size_t global_size(std::size_t dim, std::size_t eta, std::size_t cap);

/// Cap taken from ONEQUERY_GLOBAL_CAP when set and parseable, else the default.
[[nodiscard]] std::size_t default_global_cap();

/// Equal amplitude 1/sqrt(N) in every basis state.
[[nodiscard]] SubsystemState uniform_state(std::size_t n);

[[nodiscard]] double norm(const SubsystemState &s) noexcept;
[[nodiscard]] double norm(const GlobalState &g) noexcept;

/**
 * True iff a == c * b entrywise within `tol` for some unit complex c. The
 * phase c is read off the largest-magnitude entry of b.
 */
[[nodiscard]] bool equal_up_to_global_phase(const SubsystemState &a, const SubsystemState &b,
                                            double tol = kExactTolerance);

/// amps[idx] = prod_j state[digit_j(idx)].
[[nodiscard]] GlobalState tensor_power(const SubsystemState &state, std::size_t eta,
                                       std::size_t cap = kDefaultGlobalCap);

} // namespace onequery
