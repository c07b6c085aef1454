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
 * Selective phase inversion, its ancilla/XOR realization, and the
 * inversion-about-average operator D.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "onequery/marked_set.hpp"
#include "onequery/state.hpp"

namespace onequery {

/**
 * Joint state of one subsystem and a single ancilla bit. The amplitude of
 * |x, b> lives at index 2x + b.
 */
class AncillaState {
  public:
    AncillaState(std::size_t dim, std::vector<Amplitude> amps);

    /// |s> (x) (b0|0> + b1|1>).
    [[nodiscard]] static AncillaState product(const SubsystemState &s, Amplitude b0,
                                              Amplitude b1);
    /// |s> (x) (|0> - |1>)/sqrt(2), the ancilla that turns XOR into a phase.
    [[nodiscard]] static AncillaState with_minus_ancilla(const SubsystemState &s);
    /// The single basis state |x, b>.
    [[nodiscard]] static AncillaState basis(std::size_t dim, std::size_t x, unsigned b);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::span<const Amplitude> amps() const noexcept { return amps_; }
    [[nodiscard]] const Amplitude &at(std::size_t x, unsigned b) const { return amps_[2 * x + b]; }
    [[nodiscard]] double norm() const noexcept;

  private:
    std::size_t dim_;
    std::vector<Amplitude> amps_;
};

/// Negates the amplitudes of the marked basis states.
[[nodiscard]] SubsystemState phase_invert(const SubsystemState &state, const MarkedSet &marked);

/// |x, b> -> |x, f(x) XOR b>, with f the indicator of `marked`.
[[nodiscard]] AncillaState xor_oracle_apply(const AncillaState &joint, const MarkedSet &marked);

/// result[i] = 2 * mean(amps) - amps[i]; same as multiplying by d_matrix(N), in O(N).
[[nodiscard]] SubsystemState inversion_about_average(const SubsystemState &state);

/// Dense row-major real matrix. Only used as a reference for D.
struct RealMatrix {
    std::size_t n = 0;
    std::vector<double> data;

    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }
    [[nodiscard]] double &operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
};

/// D_ii = -1 + 2/N, D_ij = 2/N.
[[nodiscard]] RealMatrix d_matrix(std::size_t n);

/// Exact amplitudes after one phase inversion of k items and one D, starting uniform.
struct PostStepAmplitudes {
    double marked = 0.0;   // (3N - 4k) / N^{3/2}
    double unmarked = 0.0; // (N - 4k) / N^{3/2}

    [[nodiscard]] double marked_probability() const noexcept { return marked * marked; }
    [[nodiscard]] double unmarked_probability() const noexcept { return unmarked * unmarked; }
};

[[nodiscard]] PostStepAmplitudes post_step_amplitudes(std::size_t n, std::size_t k);

} // namespace onequery
