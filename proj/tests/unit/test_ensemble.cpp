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
#include <numeric>

#include "doctest.h"

#include "onequery/ensemble.hpp"
#include "onequery/errors.hpp"
#include "onequery/operators.hpp"
#include "reference.hpp"

using namespace onequery;
using onequery::testing::binomial_se;

namespace {

std::vector<double> post_step_distribution(std::size_t n, const MarkedSet &marked) {
    return measurement_distribution(
        inversion_about_average(phase_invert(uniform_state(n), marked)));
}

} // namespace

TEST_CASE("measurement_distribution") {
    CHECK(measurement_distribution(uniform_state(4)) == std::vector<double>(4, 0.25));

    const auto p4 = post_step_distribution(4, {2});
    CHECK(p4 == std::vector<double>{0.0, 0.0, 1.0, 0.0});

    const auto p16 = post_step_distribution(16, {3});
    CHECK(std::abs(p16[3] - 0.47265625) < 1e-12);
    for (std::size_t i = 0; i < 16; ++i) {
        if (i != 3) {
            CHECK(std::abs(p16[i] - 0.03515625) < 1e-12);
        }
    }
    CHECK(std::abs(std::accumulate(p16.begin(), p16.end(), 0.0) - 1.0) < 1e-9);
}

TEST_CASE("measurement_distribution sums to one on every post-step state") {
    for (std::size_t n = 4; n <= 64; n *= 2) {
        for (std::size_t k = 1; k < n; ++k) {
            std::vector<std::size_t> items(k);
            std::iota(items.begin(), items.end(), 0);
            const auto p = post_step_distribution(n, MarkedSet(items));
            CHECK(std::abs(std::accumulate(p.begin(), p.end(), 0.0) - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("decode") {
    const std::vector<std::uint64_t> a{1, 7, 2};
    CHECK(decode(a).item == 1);
    CHECK_FALSE(decode(a).tie);

    const std::vector<std::uint64_t> b{5, 5, 3};
    CHECK(decode(b).item == 0);
    CHECK(decode(b).tie);

    const std::vector<std::uint64_t> c{0, 0, 50, 0};
    CHECK(decode(c).item == 2);

    // A tie below the maximum is not a tie.
    const std::vector<std::uint64_t> d{1, 1, 9};
    CHECK(decode(d).item == 2);
    CHECK_FALSE(decode(d).tie);

    const std::vector<std::uint64_t> e{2, 9, 3, 9};
    CHECK(decode(e).item == 1);
    CHECK(decode(e).tie);
}

TEST_CASE("sample_tally") {
    const std::vector<double> point{0.0, 0.0, 1.0, 0.0};
    const auto t = sample_tally(point, 50, 123);
    CHECK(t.counts == std::vector<std::uint64_t>{0, 0, 50, 0});
    CHECK(t.decoded == 2);
    CHECK_FALSE(t.tie);

    const std::vector<double> uniform(4, 0.25);
    const auto first = sample_tally(uniform, 4, 2024);
    const auto second = sample_tally(uniform, 4, 2024);
    CHECK(first.counts == second.counts);
    CHECK(first.total() == 4);
    // Frozen output of mt19937_64(2024) through the 53-bit CDF mapping.
    CHECK(first.counts == std::vector<std::uint64_t>{0, 2, 1, 1});

    CHECK_THROWS_AS((void)sample_tally(std::vector<double>{0.5, 0.4}, 10, 1), DomainError);
    CHECK_THROWS_AS((void)sample_tally(std::vector<double>{1.5, -0.5}, 10, 1), DomainError);
    CHECK_THROWS_AS((void)sample_tally(std::vector<double>{}, 10, 1), DomainError);
    CHECK_THROWS_AS((void)sample_tally(std::vector<double>{NAN, 1.0}, 10, 1), DomainError);
}

TEST_CASE("sample_tally is reproducible and seed sensitive") {
    const auto p = post_step_distribution(16, {5});
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto a = sample_tally(p, 300, seed);
        CHECK(a.counts == sample_tally(p, 300, seed).counts);
        CHECK(a.total() == 300);
    }
    CHECK(sample_tally(p, 300, 1).counts != sample_tally(p, 300, 2).counts);
}

TEST_CASE("sample frequencies match the distribution") {
    // Pooled chi-square against the exact probabilities, 15 degrees of freedom.
    const auto p = post_step_distribution(16, {5});
    const auto t = sample_tally(p, 200000, 77);
    double chi2 = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double expected = 200000 * p[i];
        chi2 += (t.counts[i] - expected) * (t.counts[i] - expected) / expected;
    }
    CHECK(chi2 < 37.7); // 99.9th percentile of chi2(15)
}

TEST_CASE("trial seeds") {
    CHECK(trial_seed(7, 3) == splitmix64(7 ^ 3));
    CHECK(trial_seed(7, 3) != trial_seed(7, 4));
    // Reference output of splitmix64 for input 0.
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
}

TEST_CASE("recommended_eta") {
    CHECK(recommended_eta(4, 4.0) == 23);
    CHECK(recommended_eta(2, 1.0) == 2);
    CHECK(recommended_eta(1024, 4.0) == 28392);
    CHECK(recommended_eta(16, 4.0) == 178);
    CHECK_THROWS_AS((void)recommended_eta(1, 4.0), DomainError);
    CHECK_THROWS_AS((void)recommended_eta(16, 0.0), DomainError);
    CHECK_THROWS_AS((void)recommended_eta(16, -1.0), DomainError);
}

TEST_CASE("deviation_stats") {
    SUBCASE("degenerate N=4 distribution reports gamma 0") {
        const ExperimentPlan plan{4, {2}, 40, 1, 1};
        const auto t = sample_tally(post_step_distribution(4, {2}), 40, 1);
        const auto s = deviation_stats(t, plan);
        CHECK(s.gamma == 0.0);
        CHECK(s.expected_marked == 40.0);
        CHECK(s.expected_unmarked == 0.0);
        CHECK(s.k_ratio == 10.0);
    }
    SUBCASE("K and expectations for N=16") {
        const ExperimentPlan plan{16, {0}, 160, 3, 1};
        const auto t = sample_tally(post_step_distribution(16, {0}), 160, 3);
        const auto s = deviation_stats(t, plan);
        CHECK(s.k_ratio == 10.0);
        CHECK(std::abs(s.expected_marked - 160 * 0.47265625) < 1e-9);
        CHECK(std::abs(s.expected_unmarked - 160 * 0.03515625) < 1e-9);
        const double sd = std::sqrt(160 * 0.47265625 * (1 - 0.47265625));
        CHECK(std::abs(s.gamma - (t.counts[0] - 160 * 0.47265625) / sd) < 1e-12);
    }
}

TEST_CASE("probability_gap") {
    CHECK(std::abs(probability_gap(16, 1) - 0.4375) < 1e-12);
    const auto p = post_step_distribution(16, {0});
    CHECK(std::abs(probability_gap(16, 1) - (p[0] - p[1])) < 1e-12);
    CHECK(std::abs(probability_gap(16, 8)) < 1e-12);
    CHECK_THROWS_AS((void)probability_gap(16, 0), DomainError);
    CHECK_THROWS_AS((void)probability_gap(16, 16), DomainError);

    for (std::size_t n = 4; n <= 256; n *= 2) {
        for (std::size_t k = 1; k < n / 2; ++k) {
            CHECK(probability_gap(n, k) > probability_gap(n, k + 1));
        }
    }
}

TEST_CASE("marked item wins the majority at eta = 4 N ln N (N=16)") {
    const auto p = post_step_distribution(16, {9});
    const auto eta = recommended_eta(16, 4.0);
    int wins = 0;
    double marked_total = 0.0;
    for (std::uint64_t run = 0; run < 1000; ++run) {
        const auto t = sample_tally(p, eta, trial_seed(42, run));
        wins += t.decoded == 9 ? 1 : 0;
        marked_total += t.counts[9];
    }
    CHECK(wins >= 990);
    // Mean marked count is 0.4727 * 178 = 84.1; sd of the mean is about 0.21.
    CHECK(std::abs(marked_total / 1000 - 0.47265625 * eta) < 1.0);
}

TEST_CASE("law of large numbers at N=16, eta=16000") {
    const auto p = post_step_distribution(16, {0});
    const double exact = p[0];
    const double eta = 16000;
    const double band = 3.0 * binomial_se(exact, eta);
    int inside = 0;
    for (std::uint64_t run = 0; run < 1000; ++run) {
        const auto t = sample_tally(p, 16000, trial_seed(99, run));
        inside += std::abs(t.counts[0] / eta - exact) <= band ? 1 : 0;
    }
    CHECK(inside >= 990);
}

TEST_CASE("complement markings have identical distributions") {
    const MarkedSet m{1, 4, 6};
    CHECK(post_step_distribution(8, m) == post_step_distribution(8, m.complement(8)));
}
