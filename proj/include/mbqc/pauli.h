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

#ifndef MBQC_PAULI_H
#define MBQC_PAULI_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mbqc/numerics.h"

namespace mbqc {

/// sigma_0..sigma_3 with sigma_1 = X, sigma_2 = Y, sigma_3 = Z. The integer
/// value is the sigma index.
enum class PauliLetter : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

PauliLetter letter_from_index(int index);
inline int index_of(PauliLetter l) { return static_cast<int>(l); }
char letter_char(PauliLetter l);
PauliLetter letter_from_char(char c);

Matrix letter_matrix(PauliLetter l);

/// i^phase_exp times a tensor product of letters, one per qubit.
struct PauliOperator {
    uint8_t phase_exp = 0;
    std::vector<PauliLetter> letters;

    PauliOperator() = default;
    PauliOperator(uint8_t phase, std::vector<PauliLetter> ls);

    static PauliOperator identity(size_t num_qubits);
    /// Letter `l` on qubit `q` of an otherwise-identity operator.
    static PauliOperator single(size_t num_qubits, size_t q, PauliLetter l);
    /// Parses "XIZ", optionally prefixed by a sign/phase: "+", "-", "i", "-i".
    static PauliOperator from_str(const std::string &text);

    size_t num_qubits() const { return letters.size(); }
    bool operator==(const PauliOperator &other) const = default;

    /// The same letters with phase 0.
    PauliOperator without_phase() const;
    bool is_identity_up_to_phase() const;

    /// Renders as e.g. "i^1 · X⊗I⊗Z".
    std::string str() const;
    /// Compact form, e.g. "+XIZ", "-iY".
    std::string compact_str() const;
};

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);

Matrix to_matrix(const PauliOperator &p);

/// Returns H_q p H_q^dagger.
PauliOperator conjugate_through_h(const PauliOperator &p, size_t q);

/// Returns CNOT p CNOT^dagger for CNOT with the given control and target.
PauliOperator conjugate_through_cnot(const PauliOperator &p, size_t control, size_t target);

/// Recognizes u as i^k times a tensor product of Pauli letters.
std::optional<PauliOperator> as_pauli(const Matrix &u, double tol = kUnitaryTolerance);

/// +/- sigma_a (x) sigma_b on an ordered pair of qubits.
struct SignedPauliObservable {
    int sign = +1;
    PauliLetter first = PauliLetter::Z;
    PauliLetter second = PauliLetter::Z;
    size_t target_first = 0;
    size_t target_second = 1;

    bool operator==(const SignedPauliObservable &other) const = default;

    SignedPauliObservable on(size_t a, size_t b) const;
    /// e.g. "-Z⊗Z".
    std::string str() const;
};

SignedPauliObservable make_observable(int sign, PauliLetter a, PauliLetter b, size_t target_a = 0, size_t target_b = 1);

/// sign * (matrix(first) (x) matrix(second)).
Matrix observable_matrix(const SignedPauliObservable &o);

}  // namespace mbqc

#endif
