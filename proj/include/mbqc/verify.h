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

#ifndef MBQC_VERIFY_H
#define MBQC_VERIFY_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mbqc/numerics.h"
#include "mbqc/pauli.h"
#include "mbqc/table1.h"

namespace mbqc {

/// Maximally entangled state of `num_data` data qubits (indices
/// 0..num_data-1) with as many reference qubits (num_data..2*num_data-1).
StateVector choi_state(size_t num_data);

/// Reads back the operator K from a state of the form (K (x) I)|choi>, scaled
/// so that K is unitary if the branch map is proportional to a unitary.
Matrix operator_from_choi(const StateVector &s, size_t num_data);

/// Recognizes m as c * (Pauli string) for any complex c != 0; the returned
/// operator has phase 0.
std::optional<PauliOperator> pauli_up_to_scalar(const Matrix &m, double tol = 1e-9);

struct Table1BranchCheck {
    PauliLetter sigma_p;
    int n;
    int r1;
    int r2;
    /// P(r1, r2 | sigma_p, n), averaged over the sampled input states.
    double probability;
    double probability_spread;
    PauliLetter expected;
    /// Correction actually realized by the branch; nullopt if not Pauli.
    std::optional<PauliLetter> realized;
    /// max over sampled inputs of 1 - |<expected * T phi | output>|.
    double worst_fidelity_deficit;
    bool pass;
};

struct Table1Verification {
    std::vector<Table1BranchCheck> branches;
    size_t states_per_key = 0;
    uint64_t seed = 0;
    double tolerance = 1e-9;

    bool all_pass() const;
    /// True when every reachable branch realizes some Pauli correction, even
    /// if not the one predicted by theorem1_correction.
    bool all_pauli() const;
    std::vector<Table1BranchCheck> failures() const;
    /// Distinct (sigma_p, n) rows with at least one failing branch.
    std::vector<std::pair<PauliLetter, int>> failing_rows() const;
};

/// Exhaustively checks the adapted T gadget driven by `table`: every
/// (sigma_p, n) key, every reachable (r1, r2), `states_per_key` random
/// inputs per key plus an exact operator readout via a Choi state.
Table1Verification verify_table1(const Table1 &table, size_t states_per_key = 20, uint64_t seed = 1, double tol = 1e-9);

nlohmann::json verification_to_json(const Table1Verification &v, const Table1 &table);

}  // namespace mbqc

#endif
