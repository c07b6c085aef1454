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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace onequery {

/// Sorted, duplicate-free set of database item indices.
class MarkedSet {
  public:
    MarkedSet() = default;
    MarkedSet(std::initializer_list<std::size_t> items);
    explicit MarkedSet(std::vector<std::size_t> items);

    [[nodiscard]] std::size_t size() const noexcept { return items_.size(); }
    [[nodiscard]] bool empty() const noexcept { return items_.empty(); }
    [[nodiscard]] bool contains(std::size_t item) const noexcept;
    [[nodiscard]] std::span<const std::size_t> items() const noexcept { return items_; }
    [[nodiscard]] auto begin() const noexcept { return items_.begin(); }
    [[nodiscard]] auto end() const noexcept { return items_.end(); }

    /// Throws DomainError if any index is >= n.
    void require_within(std::size_t n) const;

    /// Items of [0, n) not in this set.
    [[nodiscard]] MarkedSet complement(std::size_t n) const;

    friend bool operator==(const MarkedSet &, const MarkedSet &) = default;

  private:
    std::vector<std::size_t> items_;
};

} // namespace onequery
