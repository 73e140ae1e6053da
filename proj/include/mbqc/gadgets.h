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

#ifndef MBQC_GADGETS_H
#define MBQC_GADGETS_H

#include <vector>

#include "mbqc/measurement.h"
#include "mbqc/numerics.h"
#include "mbqc/pauli.h"
#include "mbqc/table1.h"

namespace mbqc {

struct GadgetOutcome {
    /// Same qubit count as the input; ancillas are consumed.
    StateVector post_state;
    /// Pauli on the gadget's output qubit(s): one letter for one-qubit
    /// gadgets, (control, target) letters for the CNOT gadget.
    PauliOperator byproduct;
    /// (n, m) for one_qubit_gadget, (m_control, m_target) for cnot_gadget,
    /// (n, r1, r2) for adapted_t_gadget.
    std::vector<int> transcript;
    double branch_probability = 1;
};

/// Teleports qubit q through u. Adjoins two ancillas prepared as |0> (x) u|+>,
/// measures them in u_basis(u) (outcome n, creating the resource pair),
/// then Bell-measures (q, first ancilla) (outcome m). The second ancilla
/// takes index q. post_state equals u sigma_n sigma_m s at q up to a global
/// phase and the byproduct is sigma_n sigma_m.
GadgetOutcome one_qubit_gadget(const Matrix &u, const StateVector &s, size_t q, OutcomeSource &outcomes);

/// CNOT by gate teleportation through the four-qubit resource
/// CNOT_{2,3}(|EPR>_{12} (x) |EPR>_{34}). Bell-measures (c, ancilla 1) and
/// (t, ancilla 4); ancillas 2 and 3 take indices c and t. post_state equals
/// byproduct * CNOT_{c,t} s up to a global phase.
GadgetOutcome cnot_gadget(const StateVector &s, size_t control, size_t target, OutcomeSource &outcomes);

/// T gadget with Pauli-only corrections. The caller guarantees the state at
/// q is sigma_p|phi>. Ancillas |0> (x) T|+> are measured in u_basis(T)
/// (outcome n); then M1 and M2 from `table` act on (q, first ancilla),
/// giving r1 and r2. The reported byproduct is theorem1_correction(r1, r2),
/// which is the realized correction C_T (post_state = C_T T|phi>) for every
/// branch when `table` is Table1::with_errata().
GadgetOutcome adapted_t_gadget(
    const StateVector &s,
    size_t q,
    PauliLetter sigma_p,
    OutcomeSource &outcomes,
    const Table1 &table = Table1::with_errata());

}  // namespace mbqc

#endif
