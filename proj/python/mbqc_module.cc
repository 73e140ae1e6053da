// Copyright 2026 The mbqc-frame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mbqc/circuit.h"
#include "mbqc/engines.h"
#include "mbqc/pauli.h"
#include "mbqc/report.h"
#include "mbqc/table1.h"
#include "mbqc/verify.h"

namespace py = pybind11;
using namespace mbqc;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

py::object to_python(const nlohmann::json &j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

Matrix matrix_from_array(const ComplexArray &a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
        throw std::invalid_argument("Expected a square 2-d array.");
    }
    size_t d = static_cast<size_t>(a.shape(0));
    return Matrix(d, std::vector<Complex>(a.data(), a.data() + d * d));
}

ComplexArray array_from_matrix(const Matrix &m) {
    size_t d = m.dim();
    ComplexArray out({d, d});
    std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
    return out;
}

StateVector state_from_array(const ComplexArray &a) {
    if (a.ndim() != 1) {
        throw std::invalid_argument("Expected a 1-d array of amplitudes.");
    }
    return StateVector::from_amplitudes(std::vector<Complex>(a.data(), a.data() + a.size()));
}

ComplexArray array_from_state(const StateVector &s) {
    ComplexArray out(static_cast<py::ssize_t>(s.size()));
    std::copy(s.amplitudes().begin(), s.amplitudes().end(), out.mutable_data());
    return out;
}

Table1 table_by_name(const std::string &name) {
    if (name == "published") {
        return Table1::as_published();
    }
    if (name == "errata") {
        return Table1::with_errata();
    }
    return Table1::load(name);
}

}  // namespace

PYBIND11_MODULE(_mbqc, m) {
    m.doc() = "Measurement-based simulation of {H, T, CNOT} circuits with Pauli-frame tracking.";

    py::class_<PauliOperator>(m, "PauliOperator")
        .def(py::init(&PauliOperator::from_str), py::arg("text"))
        .def_static("identity", &PauliOperator::identity, py::arg("num_qubits"))
        .def_property_readonly("phase_exp", [](const PauliOperator &p) { return p.phase_exp; })
        .def_property_readonly("letters", [](const PauliOperator &p) {
            std::string s;
            for (auto l : p.letters) {
                s += letter_char(l);
            }
            return s;
        })
        .def_property_readonly("num_qubits", &PauliOperator::num_qubits)
        .def("conjugate_through_h", &conjugate_through_h, py::arg("q"))
        .def("conjugate_through_cnot", &conjugate_through_cnot, py::arg("control"), py::arg("target"))
        .def("to_matrix", [](const PauliOperator &p) { return array_from_matrix(to_matrix(p)); })
        .def("__mul__", &multiply)
        .def("__eq__", [](const PauliOperator &a, const PauliOperator &b) { return a == b; })
        .def("__str__", &PauliOperator::compact_str)
        .def("__repr__", [](const PauliOperator &p) { return "PauliOperator('" + p.compact_str() + "')"; });

    m.def(
        "as_pauli",
        [](const ComplexArray &u) { return as_pauli(matrix_from_array(u)); },
        py::arg("matrix"),
        "Reads a matrix as i^k times a Pauli string, or None.");

    py::class_<Circuit>(m, "Circuit")
        .def_readonly("num_qubits", &Circuit::num_qubits)
        .def_property_readonly("length", &Circuit::length)
        .def_property_readonly("gates", [](const Circuit &c) {
            std::vector<std::string> out;
            for (const auto &g : c.gates) {
                out.push_back(g.str());
            }
            return out;
        })
        .def("render", &Circuit::render)
        .def("unitary", [](const Circuit &c) { return array_from_matrix(circuit_unitary(c)); })
        .def("apply", [](const Circuit &c, const ComplexArray &s) { return array_from_state(oracle_apply(c, state_from_array(s))); },
             py::arg("amplitudes"))
        .def("__repr__", [](const Circuit &c) {
            return "<Circuit qubits=" + std::to_string(c.num_qubits) + " gates=" + std::to_string(c.length()) + ">";
        });

    m.def("parse_circuit", &parse_circuit, py::arg("text"));
    m.def("load_circuit", &load_circuit, py::arg("path"));

    m.def(
        "simulate",
        [](const Circuit &c, const std::string &engine, const std::string &input, uint64_t seed, size_t trials,
           const std::string &finalize, const std::string &table) {
            Table1 t = table_by_name(table);
            EngineOptions options;
            options.finalize = parse_finalize(finalize);
            options.table = &t;
            py::list out;
            for (const auto &r : simulate_trials(parse_engine(engine), c, InputSpec::parse(input), seed, trials, options)) {
                py::dict d = to_python(report_to_json(r));
                d["final_state"] = array_from_state(r.final_state);
                out.append(d);
            }
            return out;
        },
        py::arg("circuit"), py::arg("engine") = "frame", py::arg("input") = "random", py::arg("seed") = 0,
        py::arg("trials") = 1, py::arg("finalize") = "apply", py::arg("table") = "errata",
        "Runs an engine; returns one report dict per trial.");

    m.def(
        "verify_table1",
        [](const std::string &table, size_t states, uint64_t seed) {
            Table1 t = table_by_name(table);
            return to_python(verification_to_json(verify_table1(t, states, seed), t));
        },
        py::arg("table") = "published", py::arg("states") = 20, py::arg("seed") = 1);

    m.def(
        "table1_lookup",
        [](char sigma_p, int n, const std::string &table) {
            Table1Entry e = table_by_name(table).lookup(letter_from_char(sigma_p), n);
            return py::make_tuple(e.m1.str(), e.m2_pos.str(), e.m2_neg.str());
        },
        py::arg("sigma_p"), py::arg("n"), py::arg("table") = "published",
        "Returns (M1, M2 for r1=+1, M2 for r1=-1).");
    m.def(
        "theorem1_correction", [](int r1, int r2) { return letter_char(theorem1_correction(r1, r2)); },
        py::arg("r1"), py::arg("r2"));

    m.def("termination_tail", &termination_tail, py::arg("k"));
    m.def(
        "termination_stats",
        [](size_t gates, uint64_t seed, int max_k) {
            TerminationStats s = termination_stats(gates, seed, max_k);
            py::list rows;
            for (const auto &r : s.rows) {
                rows.append(py::make_tuple(r.k, r.empirical_tail, r.model_tail, r.stderr_));
            }
            py::dict d;
            d["success_rate"] = s.success_rate();
            d["mean_attempts"] = s.mean_attempts();
            d["rows"] = rows;
            return d;
        },
        py::arg("gates") = 10000, py::arg("seed") = 0, py::arg("max_k") = 10);

    m.def(
        "compare_costs",
        [](const Circuit &c, size_t trials, uint64_t seed, const std::string &input) {
            CostTable t = compare_costs(c, trials, seed, InputSpec::parse(input));
            py::dict out;
            for (const auto &s : t.summaries) {
                py::dict d;
                d["mean"] = s.mean;
                d["variance"] = s.variance;
                d["p50"] = s.p50;
                d["p90"] = s.p90;
                d["max"] = s.max;
                out[py::str(s.engine)] = d;
            }
            return out;
        },
        py::arg("circuit"), py::arg("trials") = 100, py::arg("seed") = 0, py::arg("input") = "random",
        "Per-engine gadget-count summaries.");

    m.def(
        "reinterpret_outcomes",
        [](const PauliOperator &frame, const std::vector<int> &bits) { return reinterpret_outcomes(frame, bits); },
        py::arg("frame"), py::arg("bits"));

    m.attr("__version__") = kArtifactVersion;
}
