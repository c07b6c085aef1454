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
 * CSV / JSON serialization of experiment reports. Floats carry 10
 * significant digits so identical runs give byte-identical files.
 */
#pragma once

#include <span>
#include <string>
#include <vector>

#include "onequery/experiment.hpp"

namespace onequery {

/// Column order of the CSV output.
inline constexpr const char *kCsvHeader =
    "N,k,eta,trials,seed,success_rate,tie_rate,mean_marked_count,exact_marked_probability,"
    "approx_9_over_N,quantum_queries,classical_queries,wall_time_ms,probability_gap";

/// "%.10g".
[[nodiscard]] std::string format_real(double x);

/// Header plus one row per report. classical_queries is empty when not applicable.
[[nodiscard]] std::string to_csv(std::span<const ExperimentReport> reports);

/// JSON array of report objects, pretty-printed with two-space indent.
[[nodiscard]] std::string to_json(std::span<const ExperimentReport> reports);

/// Inverse of to_json. Throws DomainError on malformed input.
[[nodiscard]] std::vector<ExperimentReport> reports_from_json(const std::string &text);

/// Human-readable table, followed by any warnings.
[[nodiscard]] std::string to_table(std::span<const ExperimentReport> reports);

} // namespace onequery
