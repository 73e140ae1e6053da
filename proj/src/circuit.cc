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

#include "mbqc/circuit.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mbqc/gates.h"

namespace mbqc {

namespace {

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

[[noreturn]] void fail_at(size_t line_no, const std::string &message) {
    std::stringstream ss;
    ss << message << " at line " << line_no;
    throw std::invalid_argument(ss.str());
}

size_t parse_index(const std::string &tok, size_t line_no) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
        fail_at(line_no, "invalid qubit index '" + tok + "'");
    }
    try {
        return std::stoull(tok);
    } catch (const std::exception &) {
        fail_at(line_no, "invalid qubit index '" + tok + "'");
    }
}

}  // namespace

std::string Gate::str() const {
    std::stringstream ss;
    switch (kind) {
        case GateKind::H:
            ss << "H " << q0;
            break;
        case GateKind::T:
            ss << "T " << q0;
            break;
        case GateKind::CNOT:
            ss << "CNOT " << q0 << ' ' << q1;
            break;
    }
    return ss.str();
}

size_t Circuit::single_qubit_gate_count() const {
    return static_cast<size_t>(std::count_if(gates.begin(), gates.end(), [](const Gate &g) {
        return g.is_single_qubit();
    }));
}

void Circuit::validate() const {
    for (size_t k = 0; k < gates.size(); k++) {
        const auto &g = gates[k];
        bool bad = g.q0 >= num_qubits || (g.kind == GateKind::CNOT && g.q1 >= num_qubits);
        if (bad) {
            std::stringstream ss;
            ss << "Gate " << k << " (" << g.str() << ") has a qubit index out of range for " << num_qubits
               << " qubit(s).";
            throw std::invalid_argument(ss.str());
        }
        if (g.kind == GateKind::CNOT && g.q0 == g.q1) {
            std::stringstream ss;
            ss << "Gate " << k << " (" << g.str() << ") has control equal to target.";
            throw std::invalid_argument(ss.str());
        }
    }
}

std::string Circuit::render() const {
    std::stringstream ss;
    ss << "qubits " << num_qubits << '\n';
    for (const auto &g : gates) {
        ss << g.str() << '\n';
    }
    return ss.str();
}

Circuit parse_circuit(const std::string &text) {
    Circuit c;
    bool have_header = false;
    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) {
            tok.push_back(t);
        }
        if (tok.empty()) {
            continue;
        }
        std::string head = upper(tok[0]);
        if (!have_header) {
            if (head != "QUBITS") {
                fail_at(line_no, "missing 'qubits <n>' header");
            }
            if (tok.size() != 2) {
                fail_at(line_no, "expected 'qubits <n>'");
            }
            c.num_qubits = parse_index(tok[1], line_no);
            have_header = true;
            continue;
        }
        if (head == "H" || head == "T") {
            if (tok.size() != 2) {
                fail_at(line_no, "expected '" + head + " <q>'");
            }
            size_t q = parse_index(tok[1], line_no);
            if (q >= c.num_qubits) {
                fail_at(line_no, "qubit index " + tok[1] + " out of range");
            }
            c.gates.push_back(head == "H" ? Gate::h(q) : Gate::t(q));
        } else if (head == "CNOT") {
            if (tok.size() != 3) {
                fail_at(line_no, "expected 'CNOT <control> <target>'");
            }
            size_t ctl = parse_index(tok[1], line_no);
            size_t tgt = parse_index(tok[2], line_no);
            if (ctl >= c.num_qubits || tgt >= c.num_qubits) {
                fail_at(line_no, "qubit index out of range");
            }
            if (ctl == tgt) {
                fail_at(line_no, "control equals target");
            }
            c.gates.push_back(Gate::cnot(ctl, tgt));
        } else if (head == "QUBITS") {
            fail_at(line_no, "duplicate 'qubits' header");
        } else {
            fail_at(line_no, "unknown gate '" + tok[0] + "'");
        }
    }
    if (!have_header) {
        fail_at(line_no + 1, "missing 'qubits <n>' header");
    }
    return c;
}

Circuit load_circuit(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw std::runtime_error("Cannot open circuit file '" + path + "'.");
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_circuit(ss.str());
}

Matrix gate_matrix(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return h_matrix();
        case GateKind::T:
            return t_matrix();
        case GateKind::CNOT:
            return cnot_matrix();
    }
    throw std::logic_error("unreachable");
}

StateVector oracle_apply(const Circuit &c, const StateVector &input) {
    if (input.num_qubits() != c.num_qubits) {
        throw std::invalid_argument("oracle_apply: input qubit count does not match the circuit.");
    }
    StateVector s = input;
    for (const auto &g : c.gates) {
        if (g.kind == GateKind::CNOT) {
            s = apply_unitary(cnot_matrix(), s, {g.q0, g.q1});
        } else {
            s = apply_unitary(gate_matrix(g.kind), s, {g.q0});
        }
    }
    return s;
}

Matrix embed_operator(const Matrix &op, size_t num_qubits, std::span<const size_t> targets) {
    size_t dim = size_t{1} << num_qubits;
    Matrix out(dim);
    std::vector<Complex> column(dim);
    for (size_t j = 0; j < dim; j++) {
        std::fill(column.begin(), column.end(), Complex{});
        column[j] = 1;
        auto image = apply_operator(op, column, num_qubits, targets);
        for (size_t i = 0; i < dim; i++) {
            out(i, j) = image[i];
        }
    }
    return out;
}

Matrix circuit_unitary(const Circuit &c) {
    if (c.num_qubits > kMaxDenseQubits) {
        std::stringstream ss;
        ss << "circuit_unitary: " << c.num_qubits << " qubits exceeds the dense limit of " << kMaxDenseQubits << ".";
        throw std::invalid_argument(ss.str());
    }
    Matrix u = Matrix::identity(size_t{1} << c.num_qubits);
    for (const auto &g : c.gates) {
        if (g.kind == GateKind::CNOT) {
            std::array<size_t, 2> t{g.q0, g.q1};
            u = embed_operator(cnot_matrix(), c.num_qubits, t) * u;
        } else {
            std::array<size_t, 1> t{g.q0};
            u = embed_operator(gate_matrix(g.kind), c.num_qubits, t) * u;
        }
    }
    return u;
}

Circuit random_circuit(size_t num_qubits, size_t length, RandomSource &rng) {
    if (num_qubits == 0 && length > 0) {
        throw std::invalid_argument("random_circuit: cannot place gates on zero qubits.");
    }
    Circuit c{num_qubits, {}};
    std::uniform_int_distribution<size_t> qubit(0, num_qubits ? num_qubits - 1 : 0);
    std::uniform_int_distribution<int> kind(0, num_qubits >= 2 ? 2 : 1);
    for (size_t k = 0; k < length; k++) {
        int which = kind(rng.engine());
        if (which == 2) {
            size_t a = qubit(rng.engine());
            size_t b = qubit(rng.engine());
            while (b == a) {
                b = qubit(rng.engine());
            }
            c.gates.push_back(Gate::cnot(a, b));
        } else {
            c.gates.push_back(which == 0 ? Gate::h(qubit(rng.engine())) : Gate::t(qubit(rng.engine())));
        }
    }
    return c;
}

}  // namespace mbqc
