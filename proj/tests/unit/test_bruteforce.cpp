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

#include <cmath>
#include <random>

#include "doctest.h"

#include "onequery/bruteforce.hpp"
#include "onequery/ensemble.hpp"
#include "onequery/errors.hpp"
#include "onequery/operators.hpp"
#include "reference.hpp"

using namespace onequery;
using namespace onequery::testing;

namespace {

GlobalState random_global(std::size_t n, std::size_t eta, std::mt19937_64 &rng) {
    // Generic, entangled: independent Gaussian entries.
    std::normal_distribution<double> g;
    std::vector<Amplitude> amps(global_size(n, eta, kDefaultGlobalCap));
    double total = 0.0;
    for (auto &a : amps) {
        a = {g(rng), g(rng)};
        total += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(total);
    }
    return GlobalState(n, eta, amps);
}

CMat kron_power(const CMat &m, std::size_t eta) {
    CMat out = m;
    for (std::size_t j = 1; j < eta; ++j) {
        out = kron(out, m);
    }
    return out;
}

} // namespace

TEST_CASE("global_parity_phase") {
    const auto g = tensor_power(uniform_state(2), 2);
    const auto r = global_parity_phase(g, {1});
    // basis 00, 01, 10, 11
    CHECK(max_abs_diff(to_cvec(r), CVec{0.5, -0.5, -0.5, 0.5}) < 1e-15);

    CHECK(max_abs_diff(to_cvec(global_parity_phase(g, {})), to_cvec(g)) == 0.0);

    std::mt19937_64 rng(8);
    const auto s = random_state(8, rng);
    CHECK(max_abs_diff(to_cvec(global_parity_phase(tensor_power(s, 1), {2, 5})),
                       to_cvec(phase_invert(s, {2, 5}))) == 0.0);
}

TEST_CASE("global_parity_phase is an involution and preserves norm") {
    std::mt19937_64 rng(31);
    for (std::size_t eta = 1; eta <= 3; ++eta) {
        const auto g = random_global(4, eta, rng);
        const auto once = global_parity_phase(g, {0, 3});
        CHECK(std::abs(once.norm() - g.norm()) < 1e-9);
        CHECK(max_abs_diff(to_cvec(global_parity_phase(once, {0, 3})), to_cvec(g)) == 0.0);
    }
}

TEST_CASE("global_parity_phase is the tensor product of per-subsystem flips") {
    for (std::size_t n : {2, 4}) {
        for (std::size_t eta = 1; eta <= 3; ++eta) {
            const MarkedSet marked{1};
            CMat flip = identity(n);
            flip[1][1] = -1.0;
            const auto g = tensor_power(uniform_state(n), eta);
            CHECK(max_abs_diff(to_cvec(global_parity_phase(g, marked)),
                               apply(kron_power(flip, eta), to_cvec(g))) < 1e-15);
        }
    }
}

TEST_CASE("global_d_all") {
    for (std::size_t eta = 1; eta <= 3; ++eta) {
        const auto g = tensor_power(uniform_state(4), eta);
        CHECK(max_abs_diff(to_cvec(global_d_all(g)), to_cvec(g)) < 1e-15);
    }

    std::mt19937_64 rng(4);
    const auto s = random_state(8, rng);
    CHECK(max_abs_diff(to_cvec(global_d_all(tensor_power(s, 1))),
                       to_cvec(inversion_about_average(s))) < 1e-15);
}

TEST_CASE("axis-wise D matches the dense Kronecker power on random global states") {
    std::mt19937_64 rng(12);
    for (std::size_t n : {2, 4}) {
        for (std::size_t eta = 1; eta <= 3; ++eta) {
            const auto dense = kron_power(reference_d(n), eta);
            for (int trial = 0; trial < 10; ++trial) {
                const auto g = random_global(n, eta, rng);
                const auto out = global_d_all(g);
                CHECK(max_abs_diff(to_cvec(out), apply(dense, to_cvec(g))) < 1e-12);
                CHECK(std::abs(out.norm() - 1.0) < 1e-9);
            }
        }
    }
}

TEST_CASE("factorization: global pipeline equals the tensor power of the subsystem pipeline") {
    const auto step = inversion_about_average(phase_invert(uniform_state(4), {0}));
    auto g = tensor_power(uniform_state(4), 2);
    g = global_d_all(global_parity_phase(g, {0}));
    CHECK(max_abs_diff(to_cvec(g), to_cvec(tensor_power(step, 2))) < 1e-12);
}

TEST_CASE("marginal") {
    std::mt19937_64 rng(2);
    const auto s = random_state(4, rng);
    const auto g = tensor_power(s, 3);
    const auto expected = measurement_distribution(s);
    for (std::size_t j = 0; j < 3; ++j) {
        const auto p = marginal(g, j);
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(std::abs(p[i] - expected[i]) < 1e-12);
        }
    }

    // Basis state |2, 0, 3>.
    std::vector<Amplitude> amps(64);
    amps[(2 * 4 + 0) * 4 + 3] = 1.0;
    const GlobalState basis(4, 3, amps);
    CHECK(marginal(basis, 0) == std::vector<double>{0, 0, 1, 0});
    CHECK(marginal(basis, 1) == std::vector<double>{1, 0, 0, 0});
    CHECK(marginal(basis, 2) == std::vector<double>{0, 0, 0, 1});

    auto post = tensor_power(uniform_state(4), 3);
    post = global_d_all(global_parity_phase(post, {1}));
    for (std::size_t j = 0; j < 3; ++j) {
        const auto p = marginal(post, j);
        CHECK(std::abs(p[1] - 1.0) < 1e-12);
        CHECK(std::abs(p[0]) < 1e-12);
        CHECK(std::abs(p[2]) < 1e-12);
        CHECK(std::abs(p[3]) < 1e-12);
    }

    CHECK_THROWS_AS((void)marginal(post, 3), DomainError);
}

TEST_CASE("cross_validate examples") {
    const auto a = cross_validate({2, 3, {0}});
    CHECK(a.max_probability_discrepancy < 1e-12);
    CHECK(a.max_amplitude_discrepancy < 1e-12);
    CHECK(a.oracle_calls == 1);

    CHECK(cross_validate({4, 2, {1, 2}}).max_probability_discrepancy < 1e-12);
    CHECK(cross_validate({4, 1, {3}}).max_probability_discrepancy < 1e-12);

    CHECK_THROWS_AS((void)cross_validate({4, 3, {0}}, 63), ResourceError);
    CHECK_THROWS_AS((void)cross_validate({4, 2, {}}), DomainError);
}

TEST_CASE("validation grid covers every proper non-empty marked set") {
    const auto cases = validation_grid({2, 4}, {1, 2, 3});
    CHECK(cases.size() == 3 * 2 + 3 * 14);
    for (const auto &c : cases) {
        const auto r = cross_validate(c);
        CHECK(r.max_probability_discrepancy < 1e-12);
        CHECK(r.max_amplitude_discrepancy < 1e-12);
    }
    CHECK(validation_grid({}, {1}).empty());
    CHECK_THROWS_AS((void)validation_grid({3}, {1}), DomainError);
    CHECK_THROWS_AS((void)validation_grid({32}, {1}), DomainError);
}
