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

#include "gtest/gtest.h"
#include "mbqc/gates.h"
#include "test_util.h"

using namespace mbqc;
using mbqc::testing::matrices_near;

namespace {

const PauliLetter kLetters[4] = {PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z};

PauliOperator two(uint8_t phase, PauliLetter a, PauliLetter b) {
    return PauliOperator(phase, {a, b});
}

}  // namespace

TEST(pauli, letter_conversions) {
    for (int k = 0; k < 4; k++) {
        ASSERT_EQ(index_of(letter_from_index(k)), k);
        ASSERT_EQ(letter_from_char(letter_char(letter_from_index(k))), letter_from_index(k));
    }
    ASSERT_EQ(letter_from_char('_'), PauliLetter::I);
    ASSERT_EQ(letter_from_char('2'), PauliLetter::Y);
    ASSERT_THROW(letter_from_index(4), std::out_of_range);
    ASSERT_THROW(letter_from_char('Q'), std::invalid_argument);
}

TEST(pauli, letter_matrices) {
    Complex i{0, 1};
    ASSERT_TRUE(matrices_near(letter_matrix(PauliLetter::X), Matrix{{0, 1}, {1, 0}}));
    ASSERT_TRUE(matrices_near(letter_matrix(PauliLetter::Y), Matrix{{0, -i}, {i, 0}}));
    ASSERT_TRUE(matrices_near(letter_matrix(PauliLetter::Z), Matrix{{1, 0}, {0, -1}}));
    // X Y = i Z
    ASSERT_TRUE(matrices_near(
        letter_matrix(PauliLetter::X) * letter_matrix(PauliLetter::Y), letter_matrix(PauliLetter::Z) * i));
}

TEST(pauli, from_str_and_str) {
    auto p = PauliOperator::from_str("-iXIZ");
    ASSERT_EQ(p.phase_exp, 3);
    ASSERT_EQ(p.letters, (std::vector<PauliLetter>{PauliLetter::X, PauliLetter::I, PauliLetter::Z}));
    ASSERT_EQ(p.compact_str(), "-iXIZ");
    ASSERT_EQ(PauliOperator::from_str("Y").compact_str(), "+Y");
    ASSERT_EQ(PauliOperator::from_str("-_Z").compact_str(), "-IZ");
    ASSERT_EQ(PauliOperator::from_str("iX").phase_exp, 1);
    ASSERT_THROW(PauliOperator::from_str("+XQ"), std::invalid_argument);
}

TEST(pauli, multiply_single_letters_matches_matrices) {
    for (auto a : kLetters) {
        for (auto b : kLetters) {
            auto pa = PauliOperator::single(1, 0, a);
            auto pb = PauliOperator::single(1, 0, b);
            auto prod = multiply(pa, pb);
            ASSERT_EQ(index_of(prod.letters[0]), index_of(a) ^ index_of(b));
            ASSERT_TRUE(matrices_near(to_matrix(prod), letter_matrix(a) * letter_matrix(b)));
        }
    }
}

TEST(pauli, multiply_is_associative_and_matches_matrices) {
    auto rng = mbqc::testing::test_rng(10);
    auto random_op = [&](size_t n) {
        PauliOperator p;
        p.phase_exp = static_cast<uint8_t>(rng.uniform() * 4);
        for (size_t k = 0; k < n; k++) {
            p.letters.push_back(letter_from_index(static_cast<int>(rng.uniform() * 4)));
        }
        return p;
    };
    for (int trial = 0; trial < 200; trial++) {
        auto a = random_op(3);
        auto b = random_op(3);
        auto c = random_op(3);
        ASSERT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
        ASSERT_TRUE(matrices_near(to_matrix(multiply(a, b)), to_matrix(a) * to_matrix(b), 1e-12));
    }
    ASSERT_THROW(multiply(PauliOperator::identity(1), PauliOperator::identity(2)), std::invalid_argument);
}

TEST(pauli, conjugate_through_h_examples) {
    auto x = PauliOperator::single(1, 0, PauliLetter::X);
    auto y = PauliOperator::single(1, 0, PauliLetter::Y);
    auto z = PauliOperator::single(1, 0, PauliLetter::Z);
    ASSERT_EQ(conjugate_through_h(x, 0), z);
    ASSERT_EQ(conjugate_through_h(z, 0), x);
    ASSERT_EQ(conjugate_through_h(y, 0), PauliOperator(2, {PauliLetter::Y}));
    ASSERT_EQ(conjugate_through_h(PauliOperator::identity(1), 0), PauliOperator::identity(1));
}

TEST(pauli, conjugate_through_cnot_examples) {
    using L = PauliLetter;
    ASSERT_EQ(conjugate_through_cnot(two(0, L::X, L::I), 0, 1), two(0, L::X, L::X));
    ASSERT_EQ(conjugate_through_cnot(two(0, L::I, L::Z), 0, 1), two(0, L::Z, L::Z));
    ASSERT_EQ(conjugate_through_cnot(two(0, L::Z, L::I), 0, 1), two(0, L::Z, L::I));
    ASSERT_EQ(conjugate_through_cnot(two(0, L::I, L::X), 0, 1), two(0, L::I, L::X));
    ASSERT_EQ(conjugate_through_cnot(two(0, L::Y, L::I), 0, 1), two(0, L::Y, L::X));
    ASSERT_EQ(conjugate_through_cnot(two(0, L::I, L::Y), 0, 1), two(0, L::Z, L::Y));
    ASSERT_THROW(conjugate_through_cnot(two(0, L::I, L::Y), 1, 1), std::invalid_argument);
}

TEST(pauli, conjugation_rules_match_matrix_conjugation_exhaustively) {
    Matrix h = h_matrix();
    for (int phase = 0; phase < 4; phase++) {
        for (auto a : kLetters) {
            PauliOperator p(static_cast<uint8_t>(phase), {a});
            ASSERT_TRUE(matrices_near(to_matrix(conjugate_through_h(p, 0)), h * to_matrix(p) * h.adjoint(), 1e-12))
                << p.compact_str();
        }
    }
    Matrix cx01 = cnot_matrix();
    Matrix swap{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
    Matrix cx10 = swap * cx01 * swap;
    for (int phase = 0; phase < 4; phase++) {
        for (auto a : kLetters) {
            for (auto b : kLetters) {
                auto p = two(static_cast<uint8_t>(phase), a, b);
                ASSERT_TRUE(
                    matrices_near(to_matrix(conjugate_through_cnot(p, 0, 1)), cx01 * to_matrix(p) * cx01.adjoint(), 1e-12))
                    << p.compact_str();
                ASSERT_TRUE(
                    matrices_near(to_matrix(conjugate_through_cnot(p, 1, 0)), cx10 * to_matrix(p) * cx10.adjoint(), 1e-12))
                    << p.compact_str();
            }
        }
    }
}

TEST(pauli, conjugation_on_wider_registers) {
    auto rng = mbqc::testing::test_rng(11);
    for (int trial = 0; trial < 50; trial++) {
        PauliOperator p;
        p.phase_exp = static_cast<uint8_t>(rng.uniform() * 4);
        for (int k = 0; k < 3; k++) {
            p.letters.push_back(letter_from_index(static_cast<int>(rng.uniform() * 4)));
        }
        size_t q = static_cast<size_t>(rng.uniform() * 3);
        Matrix h3 = Matrix::identity(1);
        for (size_t k = 0; k < 3; k++) {
            h3 = kron(h3, k == q ? h_matrix() : Matrix::identity(2));
        }
        ASSERT_TRUE(matrices_near(to_matrix(conjugate_through_h(p, q)), h3 * to_matrix(p) * h3.adjoint(), 1e-12));
    }
}

TEST(pauli, conjugation_is_an_involution) {
    for (int phase = 0; phase < 4; phase++) {
        for (auto a : kLetters) {
            for (auto b : kLetters) {
                auto p = two(static_cast<uint8_t>(phase), a, b);
                ASSERT_EQ(conjugate_through_cnot(conjugate_through_cnot(p, 0, 1), 0, 1), p);
                ASSERT_EQ(conjugate_through_h(conjugate_through_h(p, 1), 1), p);
            }
        }
    }
}

TEST(pauli, as_pauli_examples) {
    Matrix h = h_matrix();
    auto z = as_pauli(h * letter_matrix(PauliLetter::X) * h.adjoint());
    ASSERT_TRUE(z.has_value());
    ASSERT_EQ(*z, PauliOperator::single(1, 0, PauliLetter::Z));
    ASSERT_FALSE(as_pauli(h).has_value());
    ASSERT_FALSE(as_pauli(Matrix{{1, 0}, {0, 0}}).has_value());
}

TEST(pauli, as_pauli_round_trips_all_two_qubit_paulis) {
    size_t count = 0;
    for (int phase = 0; phase < 4; phase++) {
        for (auto a : kLetters) {
            for (auto b : kLetters) {
                auto p = two(static_cast<uint8_t>(phase), a, b);
                auto back = as_pauli(to_matrix(p));
                ASSERT_TRUE(back.has_value());
                ASSERT_EQ(*back, p);
                count++;
            }
        }
    }
    ASSERT_EQ(count, 64u);
}

TEST(pauli, t_conjugation_of_x_is_not_pauli) {
    // T X T^dag = (X + Y) / sqrt(2).
    Matrix t = t_matrix();
    Matrix txt = t * letter_matrix(PauliLetter::X) * t.adjoint();
    Matrix expected = (letter_matrix(PauliLetter::X) + letter_matrix(PauliLetter::Y)) * Complex{1 / std::sqrt(2.0)};
    ASSERT_TRUE(matrices_near(txt, expected, 1e-12));
    ASSERT_FALSE(as_pauli(txt).has_value());
}

TEST(pauli, observables) {
    auto o = make_observable(+1, PauliLetter::X, PauliLetter::X);
    Matrix m = observable_matrix(o);
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            ASSERT_NEAR(std::abs(m(r, c) - Complex{r + c == 3 ? 1.0 : 0.0}), 0, 1e-15);
        }
    }
    ASSERT_TRUE(m.is_hermitian());
    ASSERT_TRUE((m * m).max_abs_diff(Matrix::identity(4)) < 1e-12);
    auto neg = make_observable(-1, PauliLetter::Y, PauliLetter::X, 3, 1);
    ASSERT_EQ(neg.target_first, 3u);
    ASSERT_TRUE(observable_matrix(neg).max_abs_diff(
                    kron(letter_matrix(PauliLetter::Y), letter_matrix(PauliLetter::X)) * Complex{-1}) < 1e-15);
    ASSERT_THROW(make_observable(2, PauliLetter::X, PauliLetter::X), std::invalid_argument);
    ASSERT_THROW(make_observable(1, PauliLetter::X, PauliLetter::X, 1, 1), std::invalid_argument);
}
