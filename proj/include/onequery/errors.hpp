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

#include <stdexcept>
#include <string>

namespace onequery {

/// Invalid argument: bad dimension, out-of-range index, malformed distribution.
class DomainError : public std::invalid_argument {
  public:
    explicit DomainError(const std::string &what) : std::invalid_argument(what) {}
};

/// A requested global state would exceed the configured amplitude cap.
class ResourceError : public std::runtime_error {
  public:
    explicit ResourceError(const std::string &what) : std::runtime_error(what) {}
};

/// The request is valid but outside what an operation supports
/// (e.g. the classical baseline with several marked items).
class UnsupportedError : public std::logic_error {
  public:
    explicit UnsupportedError(const std::string &what) : std::logic_error(what) {}
};

} // namespace onequery
