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

#ifndef MBQC_CIRCUIT_H
#define MBQC_CIRCUIT_H

#include <string>
#include <vector>

#include "mbqc/numerics.h"
#include "mbqc/random.h"

namespace mbqc {

enum class GateKind { H, T, CNOT };

struct Gate {
    GateKind kind;
    /// Target for H/T; control for CNOT.
    size_t q0 = 0;
    /// CNOT target; unused otherwise.
    size_t q1 = 0;

    static Gate h(size_t q) { return {GateKind::H, q, 0}; }
    static Gate t(size_t q) { return {GateKind::T, q, 0}; }
    static Gate cnot(size_t c, size_t t) { return {GateKind::CNOT, c, t}; }

    bool is_single_qubit() const { return kind != GateKind::CNOT; }
    /// e.g. "H 0", "CNOT 0 1".
    std::string str() const;
    bool operator==(const Gate &other) const = default;
};

/// Ordered gate list over {H, T, CNOT}.
struct Circuit {
    size_t num_qubits = 0;
    std::vector<Gate> gates;

    size_t length() const { return gates.size(); }
    size_t single_qubit_gate_count() const;
    /// Throws if any gate index is out of range or a CNOT has control ==
    /// target.
    void validate() const;
    /// Text in the .mbqc format; parse_circuit(render()) == *this.
    std::string render() const;
    bool operator==(const Circuit &other) const = default;
};

/// Parses the .mbqc format:
///
///     qubits <n>
///     H <q>
///     T <q>
///     CNOT <control> <target>
///
/// `#` starts a comment; blank lines are ignored; gate names are
/// case-insensitive. Errors are std::invalid_argument mentioning the line.
Circuit parse_circuit(const std::string &text);
Circuit load_circuit(const std::string &path);

Matrix gate_matrix(GateKind kind);

/// Applies the gates left to right as dense unitaries.
StateVector oracle_apply(const Circuit &c, const StateVector &input);

inline constexpr size_t kMaxDenseQubits = 6;

/// Dense product of the gate unitaries (later gates multiply on the left).
/// Limited to kMaxDenseQubits qubits.
Matrix circuit_unitary(const Circuit &c);

/// Embeds a k-qubit operator on the listed qubits into an n-qubit matrix.
Matrix embed_operator(const Matrix &op, size_t num_qubits, std::span<const size_t> targets);

/// Uniformly random gates: CNOT with probability 1/3 when num_qubits >= 2.
Circuit random_circuit(size_t num_qubits, size_t length, RandomSource &rng);

}  // namespace mbqc

#endif
