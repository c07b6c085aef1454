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
 * Database ground truth, the N-bit parity query, query accounting and the
 * classical binary-search baseline.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "onequery/marked_set.hpp"
#include "onequery/state.hpp"

namespace onequery {

/// N items of which 1 <= k < N are marked. N is a power of two.
class DatabaseSpec {
  public:
    DatabaseSpec(std::size_t n, MarkedSet marked);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] const MarkedSet &marked() const noexcept { return marked_; }
    [[nodiscard]] std::size_t marked_count() const noexcept { return marked_.size(); }

    /// k >= N/4: a single query plus D no longer gives a reliable majority.
    [[nodiscard]] bool many_marked() const noexcept { return 4 * marked_.size() >= n_; }

  private:
    std::size_t n_;
    MarkedSet marked_;
};

/// bit i = parity of the number of subsystems found in basis state i.
struct ParityQuery {
    std::vector<std::uint8_t> bits;

    [[nodiscard]] std::size_t size() const noexcept { return bits.size(); }
};

/// Oracle calls made by one pipeline run. Never shared between trials.
struct QueryLedger {
    std::uint64_t oracle_calls = 0;
    std::uint64_t classical_calls = 0;
};

[[nodiscard]] ParityQuery counts_to_query(std::span<const std::uint64_t> counts);

/**
 * One oracle call: 1 iff the total count over all marked items is odd,
 * i.e. the XOR of the query bits at the marked indices.
 */
[[nodiscard]] unsigned parity_answer(const DatabaseSpec &db, const ParityQuery &query,
                                     QueryLedger &ledger);

/**
 * The parity query acting on the factorized representation: a sign flip on
 * the marked basis states of the shared subsystem vector. Costs exactly one
 * oracle call whatever the number of subsystems.
 */
[[nodiscard]] SubsystemState quantum_phase_query(const SubsystemState &state,
                                                 const DatabaseSpec &db, QueryLedger &ledger);

/// Finds the unique marked item with log2(N) "is it in this half?" questions.
[[nodiscard]] std::size_t classical_binary_search(const DatabaseSpec &db, QueryLedger &ledger);

} // namespace onequery
