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

#include "onequery/marked_set.hpp"

#include <algorithm>
#include <string>

#include "onequery/errors.hpp"

namespace onequery {

MarkedSet::MarkedSet(std::initializer_list<std::size_t> items)
    : MarkedSet(std::vector<std::size_t>(items)) {}

MarkedSet::MarkedSet(std::vector<std::size_t> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool MarkedSet::contains(std::size_t item) const noexcept {
    return std::binary_search(items_.begin(), items_.end(), item);
}

void MarkedSet::require_within(std::size_t n) const {
    if (!items_.empty() && items_.back() >= n) {
        throw DomainError("marked item " + std::to_string(items_.back()) +
                          " out of range for " + std::to_string(n) + " items");
    }
}

MarkedSet MarkedSet::complement(std::size_t n) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (!contains(i)) {
            out.push_back(i);
        }
    }
    return MarkedSet(std::move(out));
}

} // namespace onequery
