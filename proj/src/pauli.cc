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

#include "mbqc/pauli.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mbqc {

namespace {

const Complex kI{0, 1};

Complex i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

/// sigma_a sigma_b = i^phase sigma_(a xor b).
struct LetterProduct {
    PauliLetter letter;
    uint8_t phase;
};

LetterProduct letter_product(PauliLetter a, PauliLetter b) {
    int ia = index_of(a);
    int ib = index_of(b);
    PauliLetter c = letter_from_index(ia ^ ib);
    if (ia == 0 || ib == 0 || ia == ib) {
        return {c, 0};
    }
    bool cyclic = (ia == 1 && ib == 2) || (ia == 2 && ib == 3) || (ia == 3 && ib == 1);
    return {c, static_cast<uint8_t>(cyclic ? 1 : 3)};
}

/// Entry (row, row ^ x_mask) of the phase-free Pauli string.
Complex string_entry(const std::vector<PauliLetter> &letters, size_t row) {
    size_t n = letters.size();
    Complex v{1};
    for (size_t q = 0; q < n; q++) {
        bool bit = (row >> (n - 1 - q)) & 1;
        switch (letters[q]) {
            case PauliLetter::I:
            case PauliLetter::X:
                break;
            case PauliLetter::Y:
                v *= bit ? kI : -kI;
                break;
            case PauliLetter::Z:
                if (bit) {
                    v = -v;
                }
                break;
        }
    }
    return v;
}

size_t x_mask(const std::vector<PauliLetter> &letters) {
    size_t n = letters.size();
    size_t m = 0;
    for (size_t q = 0; q < n; q++) {
        if (letters[q] == PauliLetter::X || letters[q] == PauliLetter::Y) {
            m |= size_t{1} << (n - 1 - q);
        }
    }
    return m;
}

void check_qubit(const PauliOperator &p, size_t q) {
    if (q >= p.num_qubits()) {
        std::stringstream ss;
        ss << "Qubit " << q << " out of range for a " << p.num_qubits() << "-qubit Pauli operator.";
        throw std::out_of_range(ss.str());
    }
}

}  // namespace

PauliLetter letter_from_index(int index) {
    if (index < 0 || index > 3) {
        throw std::out_of_range("Pauli letter index must be in 0..3.");
    }
    return static_cast<PauliLetter>(index);
}

char letter_char(PauliLetter l) {
    return "IXYZ"[index_of(l)];
}

PauliLetter letter_from_char(char c) {
    switch (c) {
        case 'I':
        case '_':
        case '0':
            return PauliLetter::I;
        case 'X':
        case 'x':
        case '1':
            return PauliLetter::X;
        case 'Y':
        case 'y':
        case '2':
            return PauliLetter::Y;
        case 'Z':
        case 'z':
        case '3':
            return PauliLetter::Z;
        default:
            throw std::invalid_argument(std::string("Not a Pauli letter: '") + c + "'.");
    }
}

Matrix letter_matrix(PauliLetter l) {
    switch (l) {
        case PauliLetter::I:
            return Matrix{{1, 0}, {0, 1}};
        case PauliLetter::X:
            return Matrix{{0, 1}, {1, 0}};
        case PauliLetter::Y:
            return Matrix{{0, -kI}, {kI, 0}};
        case PauliLetter::Z:
            return Matrix{{1, 0}, {0, -1}};
    }
    throw std::logic_error("unreachable");
}

PauliOperator::PauliOperator(uint8_t phase, std::vector<PauliLetter> ls) : phase_exp(phase % 4), letters(std::move(ls)) {
}

PauliOperator PauliOperator::identity(size_t num_qubits) {
    return PauliOperator(0, std::vector<PauliLetter>(num_qubits, PauliLetter::I));
}

PauliOperator PauliOperator::single(size_t num_qubits, size_t q, PauliLetter l) {
    PauliOperator p = identity(num_qubits);
    check_qubit(p, q);
    p.letters[q] = l;
    return p;
}

PauliOperator PauliOperator::from_str(const std::string &text) {
    size_t k = 0;
    uint8_t phase = 0;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        phase = text[k] == '-' ? 2 : 0;
        k++;
    }
    if (k + 1 < text.size() && text[k] == 'i') {
        phase = static_cast<uint8_t>((phase + 1) % 4);
        k++;
    }
    std::vector<PauliLetter> letters;
    for (; k < text.size(); k++) {
        letters.push_back(letter_from_char(text[k]));
    }
    return PauliOperator(phase, std::move(letters));
}

PauliOperator PauliOperator::without_phase() const {
    return PauliOperator(0, letters);
}

bool PauliOperator::is_identity_up_to_phase() const {
    for (auto l : letters) {
        if (l != PauliLetter::I) {
            return false;
        }
    }
    return true;
}

std::string PauliOperator::str() const {
    std::stringstream ss;
    ss << "i^" << static_cast<int>(phase_exp) << " · ";
    for (size_t q = 0; q < letters.size(); q++) {
        if (q) {
            ss << "⊗";
        }
        ss << letter_char(letters[q]);
    }
    return ss.str();
}

std::string PauliOperator::compact_str() const {
    static const char *prefixes[] = {"+", "+i", "-", "-i"};
    std::string out = prefixes[phase_exp];
    for (auto l : letters) {
        out += letter_char(l);
    }
    return out;
}

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument("multiply: Pauli operators act on different qubit counts.");
    }
    PauliOperator r;
    int phase = p.phase_exp + q.phase_exp;
    r.letters.reserve(p.num_qubits());
    for (size_t k = 0; k < p.num_qubits(); k++) {
        auto lp = letter_product(p.letters[k], q.letters[k]);
        r.letters.push_back(lp.letter);
        phase += lp.phase;
    }
    r.phase_exp = static_cast<uint8_t>(phase % 4);
    return r;
}

Matrix to_matrix(const PauliOperator &p) {
    size_t dim = size_t{1} << p.num_qubits();
    size_t xm = x_mask(p.letters);
    Complex phase = i_pow(p.phase_exp);
    Matrix m(dim);
    for (size_t r = 0; r < dim; r++) {
        m(r, r ^ xm) = phase * string_entry(p.letters, r);
    }
    return m;
}

PauliOperator conjugate_through_h(const PauliOperator &p, size_t q) {
    check_qubit(p, q);
    PauliOperator r = p;
    switch (p.letters[q]) {
        case PauliLetter::X:
            r.letters[q] = PauliLetter::Z;
            break;
        case PauliLetter::Z:
            r.letters[q] = PauliLetter::X;
            break;
        case PauliLetter::Y:
            r.phase_exp = static_cast<uint8_t>((r.phase_exp + 2) % 4);
            break;
        case PauliLetter::I:
            break;
    }
    return r;
}

PauliOperator conjugate_through_cnot(const PauliOperator &p, size_t control, size_t target) {
    check_qubit(p, control);
    check_qubit(p, target);
    if (control == target) {
        throw std::invalid_argument("conjugate_through_cnot: control equals target.");
    }
    size_t n = p.num_qubits();

    // Images of the single letters:
    //   X_c -> X_c X_t, Y_c -> Y_c X_t, Z_c -> Z_c,
    //   X_t -> X_t,     Y_t -> Z_c Y_t, Z_t -> Z_c Z_t.
    PauliOperator on_control = PauliOperator::single(n, control, p.letters[control]);
    if (p.letters[control] == PauliLetter::X || p.letters[control] == PauliLetter::Y) {
        on_control.letters[target] = PauliLetter::X;
    }
    PauliOperator on_target = PauliOperator::single(n, target, p.letters[target]);
    if (p.letters[target] == PauliLetter::Y || p.letters[target] == PauliLetter::Z) {
        on_target.letters[control] = PauliLetter::Z;
    }

    PauliOperator r = multiply(on_control, on_target);
    for (size_t k = 0; k < n; k++) {
        if (k != control && k != target) {
            r.letters[k] = p.letters[k];
        }
    }
    r.phase_exp = static_cast<uint8_t>((r.phase_exp + p.phase_exp) % 4);
    return r;
}

std::optional<PauliOperator> as_pauli(const Matrix &u, double tol) {
    size_t n = u.num_qubits();
    size_t dim = u.dim();

    size_t xm = 0;
    double best = -1;
    for (size_t c = 0; c < dim; c++) {
        double v = std::abs(u(0, c));
        if (v > best) {
            best = v;
            xm = c;
        }
    }

    // Each qubit with an X component is X or Y; otherwise I or Z.
    std::vector<PauliLetter> letters(n);
    for (size_t choice = 0; choice < (size_t{1} << n); choice++) {
        for (size_t q = 0; q < n; q++) {
            bool has_x = (xm >> (n - 1 - q)) & 1;
            bool alt = (choice >> (n - 1 - q)) & 1;
            letters[q] = has_x ? (alt ? PauliLetter::Y : PauliLetter::X) : (alt ? PauliLetter::Z : PauliLetter::I);
        }
        Complex overlap{};
        for (size_t r = 0; r < dim; r++) {
            overlap += std::conj(string_entry(letters, r)) * u(r, r ^ xm);
        }
        overlap /= static_cast<double>(dim);
        if (std::abs(std::abs(overlap) - 1) > tol) {
            continue;
        }
        for (int k = 0; k < 4; k++) {
            if (std::abs(overlap - i_pow(k)) > tol) {
                continue;
            }
            PauliOperator candidate(static_cast<uint8_t>(k), letters);
            if (to_matrix(candidate).max_abs_diff(u) <= tol) {
                return candidate;
            }
        }
    }
    return std::nullopt;
}

SignedPauliObservable SignedPauliObservable::on(size_t a, size_t b) const {
    SignedPauliObservable r = *this;
    r.target_first = a;
    r.target_second = b;
    return r;
}

std::string SignedPauliObservable::str() const {
    std::string out = sign < 0 ? "-" : "+";
    out += letter_char(first);
    out += "⊗";
    out += letter_char(second);
    return out;
}

SignedPauliObservable make_observable(int sign, PauliLetter a, PauliLetter b, size_t target_a, size_t target_b) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("Observable sign must be +1 or -1.");
    }
    if (a == PauliLetter::I && b == PauliLetter::I) {
        throw std::invalid_argument("Observable letters must not both be the identity.");
    }
    if (target_a == target_b) {
        throw std::invalid_argument("Observable targets must be distinct.");
    }
    return SignedPauliObservable{sign, a, b, target_a, target_b};
}

Matrix observable_matrix(const SignedPauliObservable &o) {
    return kron(letter_matrix(o.first), letter_matrix(o.second)) * Complex{static_cast<double>(o.sign)};
}

}  // namespace mbqc
