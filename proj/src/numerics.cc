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

#include "mbqc/numerics.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mbqc {

namespace {

size_t log2_exact(size_t n, const char *what) {
    if (n == 0 || (n & (n - 1)) != 0) {
        std::stringstream ss;
        ss << what << " has length " << n << ", which is not a power of two.";
        throw std::invalid_argument(ss.str());
    }
    size_t k = 0;
    while ((size_t{1} << k) < n) {
        k++;
    }
    return k;
}

inline size_t bit_of(size_t num_qubits, size_t qubit) {
    return size_t{1} << (num_qubits - 1 - qubit);
}

double vector_norm(std::span<const Complex> v) {
    double total = 0;
    for (const auto &c : v) {
        total += std::norm(c);
    }
    return std::sqrt(total);
}

}  // namespace

Matrix::Matrix(size_t dim) : dim_(dim), data_(dim * dim) {
}

Matrix::Matrix(size_t dim, std::vector<Complex> entries) : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim * dim) {
        throw std::invalid_argument("Matrix entries do not match dim*dim.");
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw std::invalid_argument("Matrix rows must all have length equal to the row count.");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(size_t dim) {
    Matrix m(dim);
    for (size_t k = 0; k < dim; k++) {
        m(k, k) = 1;
    }
    return m;
}

size_t Matrix::num_qubits() const {
    return log2_exact(dim_, "Matrix dimension");
}

Matrix Matrix::adjoint() const {
    Matrix r(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            r(j, i) = std::conj((*this)(i, j));
        }
    }
    return r;
}

Matrix Matrix::operator*(const Matrix &other) const {
    if (dim_ != other.dim_) {
        throw std::invalid_argument("Matrix product dimension mismatch.");
    }
    Matrix r(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t k = 0; k < dim_; k++) {
            Complex a = (*this)(i, k);
            if (a == Complex{}) {
                continue;
            }
            for (size_t j = 0; j < dim_; j++) {
                r(i, j) += a * other(k, j);
            }
        }
    }
    return r;
}

Matrix Matrix::operator*(Complex scalar) const {
    Matrix r = *this;
    for (auto &c : r.data_) {
        c *= scalar;
    }
    return r;
}

Matrix Matrix::operator+(const Matrix &other) const {
    if (dim_ != other.dim_) {
        throw std::invalid_argument("Matrix sum dimension mismatch.");
    }
    Matrix r = *this;
    for (size_t k = 0; k < data_.size(); k++) {
        r.data_[k] += other.data_[k];
    }
    return r;
}

Matrix Matrix::operator-(const Matrix &other) const {
    return *this + other * Complex{-1};
}

double Matrix::max_abs_diff(const Matrix &other) const {
    if (dim_ != other.dim_) {
        throw std::invalid_argument("Matrix comparison dimension mismatch.");
    }
    double worst = 0;
    for (size_t k = 0; k < data_.size(); k++) {
        worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
    }
    return worst;
}

bool Matrix::is_unitary(double tol) const {
    return (adjoint() * *this).max_abs_diff(identity(dim_)) <= tol;
}

bool Matrix::is_hermitian(double tol) const {
    return adjoint().max_abs_diff(*this) <= tol;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    size_t d = a.dim() * b.dim();
    Matrix r(d);
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = 0; j < a.dim(); j++) {
            for (size_t k = 0; k < b.dim(); k++) {
                for (size_t l = 0; l < b.dim(); l++) {
                    r(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return r;
}

Matrix orthonormalize_columns(const Matrix &m) {
    size_t d = m.dim();
    Matrix out = m;
    for (size_t c = 0; c < d; c++) {
        for (size_t prev = 0; prev < c; prev++) {
            Complex proj = 0;
            for (size_t r = 0; r < d; r++) {
                proj += std::conj(out(r, prev)) * out(r, c);
            }
            for (size_t r = 0; r < d; r++) {
                out(r, c) -= proj * out(r, prev);
            }
        }
        double norm = 0;
        for (size_t r = 0; r < d; r++) {
            norm += std::norm(out(r, c));
        }
        norm = std::sqrt(norm);
        if (norm < kStateTolerance) {
            throw std::invalid_argument("orthonormalize_columns: columns are linearly dependent.");
        }
        for (size_t r = 0; r < d; r++) {
            out(r, c) /= norm;
        }
    }
    return out;
}

StateVector::StateVector() : num_qubits_(0), amplitudes_{Complex{1}} {
}

StateVector::StateVector(size_t num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    size_t n = log2_exact(amplitudes.size(), "StateVector");
    double norm = vector_norm(amplitudes);
    if (std::abs(norm - 1) > kStateTolerance) {
        std::stringstream ss;
        ss << "StateVector amplitudes have norm " << norm << ", expected 1.";
        throw std::invalid_argument(ss.str());
    }
    return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes) {
    size_t n = log2_exact(amplitudes.size(), "StateVector");
    double norm = vector_norm(amplitudes);
    if (norm < 1e-12) {
        throw std::invalid_argument("Cannot normalize a zero vector.");
    }
    for (auto &c : amplitudes) {
        c /= norm;
    }
    return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::basis(size_t num_qubits, size_t index) {
    std::vector<Complex> amps(size_t{1} << num_qubits);
    if (index >= amps.size()) {
        throw std::out_of_range("Basis index out of range.");
    }
    amps[index] = 1;
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_bitstring(const std::string &bits) {
    size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("Bitstring may only contain '0' and '1': '" + bits + "'.");
        }
        index = (index << 1) | static_cast<size_t>(c - '0');
    }
    return basis(bits.size(), index);
}

double StateVector::norm() const {
    return vector_norm(amplitudes_);
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    std::vector<Complex> amps;
    amps.reserve(a.size() * b.size());
    for (const auto &x : a.amplitudes()) {
        for (const auto &y : b.amplitudes()) {
            amps.push_back(x * y);
        }
    }
    return StateVector::normalized(std::move(amps));
}

std::vector<Complex> apply_operator(
    const Matrix &op, std::span<const Complex> amplitudes, size_t num_qubits, std::span<const size_t> targets) {
    size_t k = targets.size();
    if (op.dim() != (size_t{1} << k)) {
        std::stringstream ss;
        ss << "Operator of dimension " << op.dim() << " cannot act on " << k << " target qubit(s).";
        throw std::invalid_argument(ss.str());
    }
    size_t mask = 0;
    for (size_t t : targets) {
        if (t >= num_qubits) {
            std::stringstream ss;
            ss << "Target qubit " << t << " out of range for a " << num_qubits << "-qubit register.";
            throw std::out_of_range(ss.str());
        }
        size_t b = bit_of(num_qubits, t);
        if (mask & b) {
            std::stringstream ss;
            ss << "Duplicate target qubit " << t << ".";
            throw std::invalid_argument(ss.str());
        }
        mask |= b;
    }

    std::vector<size_t> offsets(op.dim());
    for (size_t j = 0; j < op.dim(); j++) {
        size_t off = 0;
        for (size_t i = 0; i < k; i++) {
            if ((j >> (k - 1 - i)) & 1) {
                off |= bit_of(num_qubits, targets[i]);
            }
        }
        offsets[j] = off;
    }

    std::vector<Complex> out(amplitudes.begin(), amplitudes.end());
    std::vector<Complex> gathered(op.dim());
    for (size_t base = 0; base < amplitudes.size(); base++) {
        if (base & mask) {
            continue;
        }
        for (size_t j = 0; j < op.dim(); j++) {
            gathered[j] = amplitudes[base | offsets[j]];
        }
        for (size_t i = 0; i < op.dim(); i++) {
            Complex acc{};
            for (size_t j = 0; j < op.dim(); j++) {
                acc += op(i, j) * gathered[j];
            }
            out[base | offsets[i]] = acc;
        }
    }
    return out;
}

StateVector apply_unitary(const Matrix &u, const StateVector &s, std::span<const size_t> targets) {
    return StateVector::normalized(apply_operator(u, s.amplitudes(), s.num_qubits(), targets));
}

StateVector apply_unitary(const Matrix &u, const StateVector &s, std::initializer_list<size_t> targets) {
    return apply_unitary(u, s, std::span<const size_t>(targets.begin(), targets.size()));
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("inner_product: qubit count mismatch.");
    }
    Complex acc{};
    for (size_t k = 0; k < a.size(); k++) {
        acc += std::conj(a[k]) * b[k];
    }
    return acc;
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::abs(inner_product(a, b));
}

bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol) {
    return fidelity(a, b) >= 1 - tol;
}

StateVector permute_qubits(const StateVector &s, std::span<const size_t> order) {
    size_t n = s.num_qubits();
    if (order.size() != n) {
        throw std::invalid_argument("permute_qubits: order must list every qubit once.");
    }
    std::vector<bool> seen(n);
    for (size_t q : order) {
        if (q >= n || seen[q]) {
            throw std::invalid_argument("permute_qubits: order is not a permutation.");
        }
        seen[q] = true;
    }
    std::vector<Complex> amps(s.size());
    for (size_t r = 0; r < s.size(); r++) {
        size_t src = 0;
        for (size_t k = 0; k < n; k++) {
            if (r & bit_of(n, k)) {
                src |= bit_of(n, order[k]);
            }
        }
        amps[r] = s[src];
    }
    return StateVector::normalized(std::move(amps));
}

StateVector move_qubit(const StateVector &s, size_t from, size_t to) {
    size_t n = s.num_qubits();
    if (from >= n || to >= n) {
        throw std::out_of_range("move_qubit: index out of range.");
    }
    std::vector<size_t> order;
    order.reserve(n);
    for (size_t q = 0; q < n; q++) {
        if (q != from) {
            order.push_back(q);
        }
    }
    order.insert(order.begin() + static_cast<std::ptrdiff_t>(to), from);
    return permute_qubits(s, order);
}

StateVector discard_qubits(const StateVector &s, std::span<const size_t> targets, double tol) {
    size_t n = s.num_qubits();
    std::vector<size_t> sorted(targets.begin(), targets.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("discard_qubits: duplicate target.");
    }
    if (!sorted.empty() && sorted.back() >= n) {
        throw std::out_of_range("discard_qubits: target out of range.");
    }
    std::vector<size_t> kept;
    for (size_t q = 0; q < n; q++) {
        if (!std::binary_search(sorted.begin(), sorted.end(), q)) {
            kept.push_back(q);
        }
    }

    // Reshape into (discarded configuration) x (kept configuration).
    size_t rows = size_t{1} << sorted.size();
    size_t cols = size_t{1} << kept.size();
    std::vector<Complex> m(rows * cols);
    for (size_t idx = 0; idx < s.size(); idx++) {
        size_t r = 0;
        size_t c = 0;
        for (size_t q : sorted) {
            r = (r << 1) | ((idx & bit_of(n, q)) ? 1 : 0);
        }
        for (size_t q : kept) {
            c = (c << 1) | ((idx & bit_of(n, q)) ? 1 : 0);
        }
        m[r * cols + c] = s[idx];
    }

    size_t best = 0;
    double best_norm = -1;
    for (size_t r = 0; r < rows; r++) {
        double v = vector_norm(std::span<const Complex>(m).subspan(r * cols, cols));
        if (v > best_norm) {
            best_norm = v;
            best = r;
        }
    }
    std::vector<Complex> kept_state(m.begin() + static_cast<std::ptrdiff_t>(best * cols),
                                    m.begin() + static_cast<std::ptrdiff_t>((best + 1) * cols));
    for (auto &c : kept_state) {
        c /= best_norm;
    }

    double residual = 0;
    for (size_t r = 0; r < rows; r++) {
        Complex coeff{};
        for (size_t c = 0; c < cols; c++) {
            coeff += std::conj(kept_state[c]) * m[r * cols + c];
        }
        for (size_t c = 0; c < cols; c++) {
            residual += std::norm(m[r * cols + c] - coeff * kept_state[c]);
        }
    }
    if (std::sqrt(residual) > tol) {
        throw std::logic_error("discard_qubits: discarded qubits are entangled with the rest of the register.");
    }
    return StateVector::normalized(std::move(kept_state));
}

}  // namespace mbqc
