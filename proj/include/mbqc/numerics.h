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

#ifndef MBQC_NUMERICS_H
#define MBQC_NUMERICS_H

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace mbqc {

using Complex = std::complex<double>;

inline constexpr double kStateTolerance = 1e-9;
inline constexpr double kUnitaryTolerance = 1e-9;

/// Square complex matrix, row-major.
///
/// Doubles as the carrier for unitaries, projectors and observables. The
/// qubit ordering convention matches StateVector: qubit 0 is the most
/// significant bit of a row/column index.
class Matrix {
   public:
    Matrix() = default;
    explicit Matrix(size_t dim);
    Matrix(size_t dim, std::vector<Complex> entries);
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix identity(size_t dim);

    size_t dim() const { return dim_; }
    size_t num_qubits() const;

    Complex &operator()(size_t row, size_t col) { return data_[row * dim_ + col]; }
    const Complex &operator()(size_t row, size_t col) const { return data_[row * dim_ + col]; }
    std::span<const Complex> entries() const { return data_; }

    Matrix adjoint() const;
    Matrix operator*(const Matrix &other) const;
    Matrix operator*(Complex scalar) const;
    Matrix operator+(const Matrix &other) const;
    Matrix operator-(const Matrix &other) const;

    bool is_unitary(double tol = kUnitaryTolerance) const;
    bool is_hermitian(double tol = kUnitaryTolerance) const;

    /// Largest entrywise modulus of the difference.
    double max_abs_diff(const Matrix &other) const;

   private:
    size_t dim_ = 0;
    std::vector<Complex> data_;
};

Matrix kron(const Matrix &a, const Matrix &b);

/// Gram-Schmidt on the columns. Used to pull a nearly unitary product back
/// onto the unitary group. Throws if the columns are linearly dependent.
Matrix orthonormalize_columns(const Matrix &m);

/// Normalized amplitude vector over num_qubits qubits.
///
/// Basis index bit (num_qubits - 1 - q) holds the value of qubit q, so qubit
/// 0 is the most significant bit. A 0-qubit state is the scalar 1.
class StateVector {
   public:
    /// The 0-qubit state.
    StateVector();

    /// Validates length (a power of two) and norm (1 within kStateTolerance).
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);
    /// Rescales to unit norm. Throws if the vector is (numerically) zero.
    static StateVector normalized(std::vector<Complex> amplitudes);
    static StateVector basis(size_t num_qubits, size_t index);
    /// Parses a bitstring such as "0110"; character k is qubit k.
    static StateVector from_bitstring(const std::string &bits);

    size_t num_qubits() const { return num_qubits_; }
    size_t size() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex operator[](size_t index) const { return amplitudes_[index]; }

    double norm() const;

   private:
    StateVector(size_t num_qubits, std::vector<Complex> amplitudes);

    size_t num_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

StateVector tensor(const StateVector &a, const StateVector &b);

/// Applies `op` to the listed qubits. The first target is the most
/// significant qubit of `op`'s index space. Does not renormalize and does not
/// require `op` to be unitary; used for projections as well.
std::vector<Complex> apply_operator(
    const Matrix &op, std::span<const Complex> amplitudes, size_t num_qubits, std::span<const size_t> targets);

StateVector apply_unitary(const Matrix &u, const StateVector &s, std::span<const size_t> targets);
StateVector apply_unitary(const Matrix &u, const StateVector &s, std::initializer_list<size_t> targets);

/// <a|b>, conjugating a.
Complex inner_product(const StateVector &a, const StateVector &b);

/// |<a|b>|.
double fidelity(const StateVector &a, const StateVector &b);

/// True iff |<a|b>| >= 1 - tol.
bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol = kStateTolerance);

/// Reorders qubits: qubit k of the result is qubit order[k] of `s`.
StateVector permute_qubits(const StateVector &s, std::span<const size_t> order);

/// Moves qubit `from` to position `to`, shifting the qubits in between.
StateVector move_qubit(const StateVector &s, size_t from, size_t to);

/// Removes `targets` from the register. The targets must be in a product
/// state with the remaining qubits (as after a rank-1 projective
/// measurement); throws std::logic_error otherwise.
StateVector discard_qubits(const StateVector &s, std::span<const size_t> targets, double tol = kStateTolerance);

}  // namespace mbqc

#endif
