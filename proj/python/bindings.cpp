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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "onequery/bruteforce.hpp"
#include "onequery/ensemble.hpp"
#include "onequery/errors.hpp"
#include "onequery/experiment.hpp"
#include "onequery/operators.hpp"
#include "onequery/oracle.hpp"
#include "onequery/report_io.hpp"
#include "onequery/state.hpp"

namespace py = pybind11;
using namespace onequery;

namespace {

using AmpVec = std::vector<Amplitude>;

AmpVec to_vec(const SubsystemState &s) { return {s.amps().begin(), s.amps().end()}; }
AmpVec to_vec(const GlobalState &g) { return {g.amps().begin(), g.amps().end()}; }

MarkedSet to_marked(const std::vector<std::size_t> &items) { return MarkedSet(items); }

std::vector<std::size_t> from_marked(const MarkedSet &m) { return {m.begin(), m.end()}; }

} // namespace

PYBIND11_MODULE(_onequery, m) {
    m.doc() = "Single-query database search: factorized simulator and brute-force oracle";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
    py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);

    m.attr("DEFAULT_GLOBAL_CAP") = kDefaultGlobalCap;
    m.attr("DEFAULT_ETA_MULTIPLIER") = kDefaultEtaMultiplier;

    // state-core
    m.def("uniform_state", [](std::size_t n) { return to_vec(uniform_state(n)); }, py::arg("n"));
    m.def("norm", [](const AmpVec &a) { return SubsystemState(a).norm(); }, py::arg("amps"));
    m.def(
        "equal_up_to_global_phase",
        [](const AmpVec &a, const AmpVec &b, double tol) {
            return equal_up_to_global_phase(SubsystemState(a), SubsystemState(b), tol);
        },
        py::arg("a"), py::arg("b"), py::arg("tol") = kExactTolerance);
    m.def(
        "tensor_power",
        [](const AmpVec &a, std::size_t eta, std::size_t cap) {
            return to_vec(tensor_power(SubsystemState(a), eta, cap));
        },
        py::arg("amps"), py::arg("eta"), py::arg("cap") = kDefaultGlobalCap);

    // operators
    m.def(
        "phase_invert",
        [](const AmpVec &a, const std::vector<std::size_t> &marked) {
            return to_vec(phase_invert(SubsystemState(a), to_marked(marked)));
        },
        py::arg("amps"), py::arg("marked"));
    m.def(
        "inversion_about_average",
        [](const AmpVec &a) { return to_vec(inversion_about_average(SubsystemState(a))); },
        py::arg("amps"));
    m.def(
        "d_matrix",
        [](std::size_t n) {
            const auto d = d_matrix(n);
            std::vector<std::vector<double>> rows(n, std::vector<double>(n));
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    rows[i][j] = d(i, j);
                }
            }
            return rows;
        },
        py::arg("n"));

    py::class_<PostStepAmplitudes>(m, "PostStepAmplitudes")
        .def_readonly("marked", &PostStepAmplitudes::marked)
        .def_readonly("unmarked", &PostStepAmplitudes::unmarked)
        .def_property_readonly("marked_probability", &PostStepAmplitudes::marked_probability)
        .def_property_readonly("unmarked_probability", &PostStepAmplitudes::unmarked_probability);
    m.def("post_step_amplitudes", &post_step_amplitudes, py::arg("n"), py::arg("k"));

    py::class_<AncillaState>(m, "AncillaState")
        .def_static(
            "with_minus_ancilla",
            [](const AmpVec &a) { return AncillaState::with_minus_ancilla(SubsystemState(a)); },
            py::arg("amps"))
        .def_static("basis", &AncillaState::basis, py::arg("dim"), py::arg("x"), py::arg("b"))
        .def_property_readonly("dim", &AncillaState::dim)
        .def_property_readonly("amps",
                               [](const AncillaState &s) {
                                   return AmpVec(s.amps().begin(), s.amps().end());
                               })
        .def("at", &AncillaState::at, py::arg("x"), py::arg("b"));
    m.def(
        "xor_oracle_apply",
        [](const AncillaState &joint, const std::vector<std::size_t> &marked) {
            return xor_oracle_apply(joint, to_marked(marked));
        },
        py::arg("joint"), py::arg("marked"));

    // oracle
    py::class_<DatabaseSpec>(m, "DatabaseSpec")
        .def(py::init([](std::size_t n, const std::vector<std::size_t> &marked) {
                 return DatabaseSpec(n, to_marked(marked));
             }),
             py::arg("n"), py::arg("marked"))
        .def_property_readonly("n", &DatabaseSpec::size)
        .def_property_readonly("marked", [](const DatabaseSpec &d) { return from_marked(d.marked()); })
        .def_property_readonly("many_marked", &DatabaseSpec::many_marked);

    py::class_<QueryLedger>(m, "QueryLedger")
        .def(py::init<>())
        .def_readwrite("oracle_calls", &QueryLedger::oracle_calls)
        .def_readwrite("classical_calls", &QueryLedger::classical_calls);

    m.def(
        "counts_to_query",
        [](const std::vector<std::uint64_t> &counts) { return counts_to_query(counts).bits; },
        py::arg("counts"));
    m.def(
        "parity_answer",
        [](const DatabaseSpec &db, const std::vector<std::uint8_t> &bits, QueryLedger &ledger) {
            return parity_answer(db, ParityQuery{bits}, ledger);
        },
        py::arg("db"), py::arg("bits"), py::arg("ledger"));
    m.def(
        "quantum_phase_query",
        [](const AmpVec &a, const DatabaseSpec &db, QueryLedger &ledger) {
            return to_vec(quantum_phase_query(SubsystemState(a), db, ledger));
        },
        py::arg("amps"), py::arg("db"), py::arg("ledger"));
    m.def("classical_binary_search", &classical_binary_search, py::arg("db"), py::arg("ledger"));

    // ensemble-stats
    py::class_<ExperimentPlan>(m, "ExperimentPlan")
        .def(py::init([](std::size_t n, const std::vector<std::size_t> &marked, std::uint64_t eta,
                         std::uint64_t seed, std::uint64_t trials) {
                 return ExperimentPlan{n, to_marked(marked), eta, seed, trials};
             }),
             py::arg("n"), py::arg("marked"), py::arg("eta"), py::arg("seed") = 0,
             py::arg("trials") = 1)
        .def_readwrite("n", &ExperimentPlan::n)
        .def_property(
            "marked", [](const ExperimentPlan &p) { return from_marked(p.marked); },
            [](ExperimentPlan &p, const std::vector<std::size_t> &v) { p.marked = to_marked(v); })
        .def_readwrite("eta", &ExperimentPlan::eta)
        .def_readwrite("seed", &ExperimentPlan::seed)
        .def_readwrite("trials", &ExperimentPlan::trials);

    py::class_<MeasurementTally>(m, "MeasurementTally")
        .def_readonly("counts", &MeasurementTally::counts)
        .def_readonly("decoded", &MeasurementTally::decoded)
        .def_readonly("tie", &MeasurementTally::tie);

    py::class_<DeviationStats>(m, "DeviationStats")
        .def_readonly("k_ratio", &DeviationStats::k_ratio)
        .def_readonly("expected_marked", &DeviationStats::expected_marked)
        .def_readonly("expected_unmarked", &DeviationStats::expected_unmarked)
        .def_readonly("gamma", &DeviationStats::gamma);

    m.def(
        "measurement_distribution",
        [](const AmpVec &a) { return measurement_distribution(SubsystemState(a)); },
        py::arg("amps"));
    m.def(
        "sample_tally",
        [](const std::vector<double> &dist, std::uint64_t eta, std::uint64_t seed) {
            return sample_tally(dist, eta, seed);
        },
        py::arg("dist"), py::arg("eta"), py::arg("seed"));
    m.def(
        "decode",
        [](const std::vector<std::uint64_t> &counts) {
            const auto r = decode(counts);
            return std::make_tuple(r.item, r.tie);
        },
        py::arg("counts"));
    m.def("recommended_eta", &recommended_eta, py::arg("n"),
          py::arg("c") = kDefaultEtaMultiplier);
    m.def("deviation_stats", &deviation_stats, py::arg("tally"), py::arg("plan"));
    m.def("probability_gap", &probability_gap, py::arg("n"), py::arg("k"));

    // bruteforce-validation
    m.def(
        "global_parity_phase",
        [](std::size_t dim, std::size_t eta, const AmpVec &a,
           const std::vector<std::size_t> &marked) {
            return to_vec(global_parity_phase(GlobalState(dim, eta, a), to_marked(marked)));
        },
        py::arg("dim"), py::arg("eta"), py::arg("amps"), py::arg("marked"));
    m.def(
        "global_d_all",
        [](std::size_t dim, std::size_t eta, const AmpVec &a) {
            return to_vec(global_d_all(GlobalState(dim, eta, a)));
        },
        py::arg("dim"), py::arg("eta"), py::arg("amps"));
    m.def(
        "marginal",
        [](std::size_t dim, std::size_t eta, const AmpVec &a, std::size_t subsystem) {
            return marginal(GlobalState(dim, eta, a), subsystem);
        },
        py::arg("dim"), py::arg("eta"), py::arg("amps"), py::arg("subsystem"));

    py::class_<CrossValidationReport>(m, "CrossValidationReport")
        .def_readonly("max_probability_discrepancy",
                      &CrossValidationReport::max_probability_discrepancy)
        .def_readonly("max_amplitude_discrepancy",
                      &CrossValidationReport::max_amplitude_discrepancy)
        .def_readonly("oracle_calls", &CrossValidationReport::oracle_calls);
    m.def(
        "cross_validate",
        [](std::size_t n, std::size_t eta, const std::vector<std::size_t> &marked,
           std::size_t cap) { return cross_validate({n, eta, to_marked(marked)}, cap); },
        py::arg("n"), py::arg("eta"), py::arg("marked"), py::arg("cap") = kDefaultGlobalCap);

    // harness
    py::class_<TrialResult>(m, "TrialResult")
        .def_readonly("decoded", &TrialResult::decoded)
        .def_readonly("success", &TrialResult::success)
        .def_readonly("tally", &TrialResult::tally)
        .def_property_readonly("oracle_calls",
                               [](const TrialResult &t) { return t.ledger.oracle_calls; });

    py::class_<ExperimentReport>(m, "ExperimentReport")
        .def_readonly("n", &ExperimentReport::n)
        .def_readonly("k", &ExperimentReport::k)
        .def_readonly("eta", &ExperimentReport::eta)
        .def_readonly("trials", &ExperimentReport::trials)
        .def_readonly("seed", &ExperimentReport::seed)
        .def_readonly("marked", &ExperimentReport::marked)
        .def_readonly("success_rate", &ExperimentReport::success_rate)
        .def_readonly("tie_rate", &ExperimentReport::tie_rate)
        .def_readonly("mean_marked_count", &ExperimentReport::mean_marked_count)
        .def_readonly("exact_marked_probability", &ExperimentReport::exact_marked_probability)
        .def_readonly("approx_9_over_n", &ExperimentReport::approx_9_over_n)
        .def_readonly("probability_gap", &ExperimentReport::probability_gap)
        .def_readonly("quantum_oracle_calls_per_trial",
                      &ExperimentReport::quantum_oracle_calls_per_trial)
        .def_readonly("classical_calls", &ExperimentReport::classical_calls)
        .def_readonly("wall_time_ms", &ExperimentReport::wall_time_ms)
        .def_readonly("warnings", &ExperimentReport::warnings);

    m.def("run_trial", &run_trial, py::arg("plan"), py::arg("trial_index"));
    m.def(
        "run_experiment",
        [](const ExperimentPlan &plan, unsigned workers, bool timing) {
            py::gil_scoped_release release;
            return run_experiment(plan, {workers, timing});
        },
        py::arg("plan"), py::arg("workers") = 1, py::arg("timing") = false);
    m.def(
        "sweep",
        [](const std::vector<std::size_t> &ns, const std::vector<std::size_t> &ks,
           std::optional<std::uint64_t> eta, double eta_mult, std::uint64_t trials,
           std::uint64_t seed, unsigned workers) {
            py::gil_scoped_release release;
            return sweep(ns, ks, EtaRule{eta, eta_mult}, trials, seed, {workers, false});
        },
        py::arg("ns"), py::arg("ks"), py::arg("eta") = py::none(),
        py::arg("eta_mult") = kDefaultEtaMultiplier, py::arg("trials") = 100,
        py::arg("seed") = 0, py::arg("workers") = 1);
    m.def(
        "to_csv", [](const std::vector<ExperimentReport> &r) { return to_csv(r); },
        py::arg("reports"));
    m.def(
        "to_json", [](const std::vector<ExperimentReport> &r) { return to_json(r); },
        py::arg("reports"));
}
