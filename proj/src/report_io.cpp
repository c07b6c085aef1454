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

#include "onequery/report_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

#include "onequery/errors.hpp"

namespace onequery {

namespace {

using nlohmann::json;

// Value that nlohmann's shortest round-trip printer renders with at most
// 10 significant digits.
double rounded(double x) { return std::strtod(format_real(x).c_str(), nullptr); }

json to_object(const ExperimentReport &r) {
    json j;
    j["N"] = r.n;
    j["k"] = r.k;
    j["eta"] = r.eta;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["marked"] = r.marked;
    j["success_rate"] = rounded(r.success_rate);
    j["tie_rate"] = rounded(r.tie_rate);
    j["mean_marked_count"] = rounded(r.mean_marked_count);
    j["exact_marked_probability"] = rounded(r.exact_marked_probability);
    j["approx_9_over_N"] = rounded(r.approx_9_over_n);
    j["probability_gap"] = rounded(r.probability_gap);
    j["quantum_queries"] = r.quantum_oracle_calls_per_trial;
    j["classical_queries"] = r.classical_calls ? json(*r.classical_calls) : json(nullptr);
    j["wall_time_ms"] = r.wall_time_ms;
    j["warnings"] = r.warnings;
    return j;
}

ExperimentReport from_object(const json &j) {
    ExperimentReport r;
    r.n = j.at("N").get<std::size_t>();
    r.k = j.at("k").get<std::size_t>();
    r.eta = j.at("eta").get<std::uint64_t>();
    r.trials = j.at("trials").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.marked = j.value("marked", std::vector<std::size_t>{});
    r.success_rate = j.at("success_rate").get<double>();
    r.tie_rate = j.at("tie_rate").get<double>();
    r.mean_marked_count = j.at("mean_marked_count").get<double>();
    r.exact_marked_probability = j.at("exact_marked_probability").get<double>();
    r.approx_9_over_n = j.at("approx_9_over_N").get<double>();
    r.probability_gap = j.value("probability_gap", 0.0);
    r.quantum_oracle_calls_per_trial = j.at("quantum_queries").get<std::uint64_t>();
    if (const auto &c = j.at("classical_queries"); !c.is_null()) {
        r.classical_calls = c.get<std::uint64_t>();
    }
    r.wall_time_ms = j.value("wall_time_ms", std::uint64_t{0});
    r.warnings = j.value("warnings", std::vector<std::string>{});
    return r;
}

} // namespace

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string to_csv(std::span<const ExperimentReport> reports) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto &r : reports) {
        out << r.n << ',' << r.k << ',' << r.eta << ',' << r.trials << ',' << r.seed << ','
            << format_real(r.success_rate) << ',' << format_real(r.tie_rate) << ','
            << format_real(r.mean_marked_count) << ',' << format_real(r.exact_marked_probability)
            << ',' << format_real(r.approx_9_over_n) << ',' << r.quantum_oracle_calls_per_trial
            << ',';
        if (r.classical_calls) {
            out << *r.classical_calls;
        }
        out << ',' << r.wall_time_ms << ',' << format_real(r.probability_gap) << '\n';
    }
    return out.str();
}

std::string to_json(std::span<const ExperimentReport> reports) {
    json arr = json::array();
    for (const auto &r : reports) {
        arr.push_back(to_object(r));
    }
    return arr.dump(2) + "\n";
}

std::vector<ExperimentReport> reports_from_json(const std::string &text) {
    try {
        const auto arr = json::parse(text);
        if (!arr.is_array()) {
            throw DomainError("report JSON must be an array");
        }
        std::vector<ExperimentReport> out;
        for (const auto &j : arr) {
            out.push_back(from_object(j));
        }
        return out;
    } catch (const json::exception &e) {
        throw DomainError(std::string("malformed report JSON: ") + e.what());
    }
}

std::string to_table(std::span<const ExperimentReport> reports) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%6s %4s %8s %7s %10s %10s %12s %12s %6s %9s\n", "N", "k",
                  "eta", "trials", "success", "ties", "p_marked", "9/N", "q_quant", "q_classic");
    out << line;
    for (const auto &r : reports) {
        const std::string classical =
            r.classical_calls ? std::to_string(*r.classical_calls) : std::string("-");
        std::snprintf(line, sizeof line,
                      "%6zu %4zu %8llu %7llu %10.4f %10.4f %12.7f %12.7f %6llu %9s\n", r.n, r.k,
                      static_cast<unsigned long long>(r.eta),
                      static_cast<unsigned long long>(r.trials), r.success_rate, r.tie_rate,
                      r.exact_marked_probability, r.approx_9_over_n,
                      static_cast<unsigned long long>(r.quantum_oracle_calls_per_trial),
                      classical.c_str());
        out << line;
    }
    for (const auto &r : reports) {
        for (const auto &w : r.warnings) {
            out << "warning [N=" << r.n << ", k=" << r.k << "]: " << w << '\n';
        }
    }
    return out.str();
}

} // namespace onequery
