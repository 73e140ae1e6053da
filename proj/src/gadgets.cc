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

#include "mbqc/gadgets.h"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mbqc/gates.h"

namespace mbqc {

namespace {

void check_qubit(const StateVector &s, size_t q, const char *what) {
    if (q >= s.num_qubits()) {
        std::stringstream ss;
        ss << what << ": qubit " << q << " out of range for a " << s.num_qubits() << "-qubit register.";
        throw std::out_of_range(ss.str());
    }
}

/// |0> (x) u|+>; its u_basis outcome distribution is uniform.
StateVector ancilla_pair(const Matrix &u) {
    const double h = 1 / std::sqrt(2.0);
    StateVector plus = StateVector::from_amplitudes({h, h});
    return tensor(StateVector::basis(1, 0), apply_unitary(u, plus, {0}));
}

/// Drops (q, first ancilla) and moves the output ancilla (the last qubit)
/// into slot q.
StateVector compact_single(const StateVector &s, size_t q, size_t first_ancilla) {
    std::array<size_t, 2> gone{q, first_ancilla};
    StateVector r = discard_qubits(s, gone);
    return move_qubit(r, r.num_qubits() - 1, q);
}

}  // namespace

GadgetOutcome one_qubit_gadget(const Matrix &u, const StateVector &s, size_t q, OutcomeSource &outcomes) {
    check_qubit(s, q, "one_qubit_gadget");
    size_t a1 = s.num_qubits();
    size_t a2 = a1 + 1;
    StateVector st = tensor(s, ancilla_pair(u));

    auto first = measure(st, u_basis(u, a1, a2), outcomes);
    auto second = measure(first.state, bell_basis(q, a1), outcomes);

    int n = first.label;
    int m = second.label;
    return GadgetOutcome{
        compact_single(second.state, q, a1),
        multiply(PauliOperator::single(1, 0, letter_from_index(n)), PauliOperator::single(1, 0, letter_from_index(m))),
        {n, m},
        first.probability * second.probability,
    };
}

GadgetOutcome cnot_gadget(const StateVector &s, size_t control, size_t target, OutcomeSource &outcomes) {
    check_qubit(s, control, "cnot_gadget");
    check_qubit(s, target, "cnot_gadget");
    if (control == target) {
        throw std::invalid_argument("cnot_gadget: control equals target.");
    }
    size_t n0 = s.num_qubits();
    size_t a1 = n0;
    size_t a4 = n0 + 3;

    StateVector resource = apply_unitary(cnot_matrix(), tensor(epr_state(), epr_state()), {1, 2});
    StateVector st = tensor(s, resource);

    auto mc = measure(st, bell_basis(control, a1), outcomes);
    auto mt = measure(mc.state, bell_basis(target, a4), outcomes);

    std::array<size_t, 4> gone{control, a1, target, a4};
    StateVector rest = discard_qubits(mt.state, gone);
    // rest holds the other data qubits in order, then ancillas 2 and 3.
    std::vector<size_t> order;
    size_t next_data = 0;
    for (size_t k = 0; k < n0; k++) {
        if (k == control) {
            order.push_back(n0 - 2);
        } else if (k == target) {
            order.push_back(n0 - 1);
        } else {
            order.push_back(next_data++);
        }
    }

    PauliOperator before(0, {letter_from_index(mc.label), letter_from_index(mt.label)});
    return GadgetOutcome{
        permute_qubits(rest, order),
        conjugate_through_cnot(before, 0, 1),
        {mc.label, mt.label},
        mc.probability * mt.probability,
    };
}

GadgetOutcome adapted_t_gadget(
    const StateVector &s, size_t q, PauliLetter sigma_p, OutcomeSource &outcomes, const Table1 &table) {
    check_qubit(s, q, "adapted_t_gadget");
    Matrix t = t_matrix();
    size_t a1 = s.num_qubits();
    size_t a2 = a1 + 1;
    StateVector st = tensor(s, ancilla_pair(t));

    auto first = measure(st, u_basis(t, a1, a2), outcomes);
    Table1Entry entry = table.lookup(sigma_p, first.label);
    auto m1 = measure(first.state, entry.m1.on(q, a1), outcomes);
    auto m2 = measure(m1.state, entry.m2(m1.label).on(q, a1), outcomes);

    return GadgetOutcome{
        compact_single(m2.state, q, a1),
        PauliOperator::single(1, 0, theorem1_correction(m1.label, m2.label)),
        {first.label, m1.label, m2.label},
        first.probability * m1.probability * m2.probability,
    };
}

}  // namespace mbqc
