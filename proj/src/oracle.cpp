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

#include "onequery/oracle.hpp"

#include <string>

#include "onequery/errors.hpp"
#include "onequery/operators.hpp"

namespace onequery {

DatabaseSpec::DatabaseSpec(std::size_t n, MarkedSet marked) : n_(n), marked_(std::move(marked)) {
    require_valid_dimension(n_);
    marked_.require_within(n_);
    if (marked_.empty() || marked_.size() >= n_) {
        throw DomainError("need 1 <= marked count < N, got " + std::to_string(marked_.size()) +
                          " of " + std::to_string(n_));
    }
}

ParityQuery counts_to_query(std::span<const std::uint64_t> counts) {
    ParityQuery q;
    q.bits.reserve(counts.size());
    for (const auto c : counts) {
        q.bits.push_back(static_cast<std::uint8_t>(c & 1U));
    }
    return q;
}

unsigned parity_answer(const DatabaseSpec &db, const ParityQuery &query, QueryLedger &ledger) {
    if (query.size() != db.size()) {
        throw DomainError("parity query has " + std::to_string(query.size()) + " bits, expected " +
                          std::to_string(db.size()));
    }
    ++ledger.oracle_calls;
    unsigned answer = 0;
    for (const auto m : db.marked()) {
        answer ^= query.bits[m] & 1U;
    }
    return answer;
}

SubsystemState quantum_phase_query(const SubsystemState &state, const DatabaseSpec &db,
                                   QueryLedger &ledger) {
    if (state.dim() != db.size()) {
        throw DomainError("state dimension does not match database size");
    }
    ++ledger.oracle_calls;
    return phase_invert(state, db.marked());
}

std::size_t classical_binary_search(const DatabaseSpec &db, QueryLedger &ledger) {
    if (db.marked_count() != 1) {
        throw UnsupportedError("classical baseline is defined for a single marked item");
    }
    const std::size_t target = *db.marked().begin();
    auto in_range = [&](std::size_t lo, std::size_t hi) {
        ++ledger.classical_calls;
        return lo <= target && target < hi;
    };
    std::size_t lo = 0;
    std::size_t hi = db.size();
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (in_range(lo, mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return lo;
}

} // namespace onequery
