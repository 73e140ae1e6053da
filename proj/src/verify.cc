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

#include "mbqc/verify.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "mbqc/gadgets.h"
#include "mbqc/gates.h"
#include "mbqc/measurement.h"

namespace mbqc {

StateVector choi_state(size_t num_data) {
    size_t d = size_t{1} << num_data;
    std::vector<Complex> amps(d * d);
    for (size_t i = 0; i < d; i++) {
        amps[(i << num_data) | i] = 1;
    }
    return StateVector::normalized(std::move(amps));
}

Matrix operator_from_choi(const StateVector &s, size_t num_data) {
    if (s.num_qubits() != 2 * num_data) {
        throw std::invalid_argument("operator_from_choi: register must hold data and reference qubits.");
    }
    size_t d = size_t{1} << num_data;
    double scale = std::sqrt(static_cast<double>(d));
    Matrix k(d);
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            k(i, j) = s[(i << num_data) | j] * scale;
        }
    }
    return k;
}

std::optional<PauliOperator> pauli_up_to_scalar(const Matrix &m, double tol) {
    size_t best_r = 0;
    size_t best_c = 0;
    double best = 0;
    for (size_t r = 0; r < m.dim(); r++) {
        for (size_t c = 0; c < m.dim(); c++) {
            if (std::abs(m(r, c)) > best) {
                best = std::abs(m(r, c));
                best_r = r;
                best_c = c;
            }
        }
    }
    if (best < 1e-12) {
        return std::nullopt;
    }
    Matrix scaled = m * (Complex{1} / m(best_r, best_c));
    auto p = as_pauli(scaled, tol);
    if (!p) {
        return std::nullopt;
    }
    return p->without_phase();
}

bool Table1Verification::all_pass() const {
    return std::all_of(branches.begin(), branches.end(), [](const auto &b) { return b.pass; });
}

bool Table1Verification::all_pauli() const {
    return std::all_of(branches.begin(), branches.end(), [](const auto &b) { return b.realized.has_value(); });
}

std::vector<Table1BranchCheck> Table1Verification::failures() const {
    std::vector<Table1BranchCheck> out;
    std::copy_if(branches.begin(), branches.end(), std::back_inserter(out), [](const auto &b) { return !b.pass; });
    return out;
}

std::vector<std::pair<PauliLetter, int>> Table1Verification::failing_rows() const {
    std::vector<std::pair<PauliLetter, int>> out;
    for (const auto &b : failures()) {
        std::pair<PauliLetter, int> key{b.sigma_p, b.n};
        if (std::find(out.begin(), out.end(), key) == out.end()) {
            out.push_back(key);
        }
    }
    return out;
}

Table1Verification verify_table1(const Table1 &table, size_t states_per_key, uint64_t seed, double tol) {
    Table1Verification v;
    v.states_per_key = states_per_key;
    v.seed = seed;
    v.tolerance = tol;
    Matrix t = t_matrix();
    Matrix t_dag = t.adjoint();

    struct Acc {
        std::optional<PauliLetter> realized;
        bool seen_in_choi = false;
        std::vector<double> probabilities;
        double worst = 0;
        size_t hits = 0;
    };

    for (int p = 0; p < 4; p++) {
        PauliLetter sigma_p = letter_from_index(p);
        Matrix twist = letter_matrix(sigma_p);
        // (r1, r2) keyed by n; r encoded as 0 for +1 and 1 for -1.
        std::map<std::tuple<int, int, int>, Acc> acc;

        // Exact readout of each branch map on a maximally entangled input.
        StateVector choi_in = apply_unitary(twist, choi_state(1), {0});
        for (const auto &b : explore_branches([&](OutcomeSource &src) {
                 return adapted_t_gadget(choi_in, 0, sigma_p, src, table);
             })) {
            const auto &tr = b.value.transcript;
            Matrix k = operator_from_choi(b.value.post_state, 1);
            auto c = pauli_up_to_scalar(k * t_dag, tol);
            auto &a = acc[{tr[0], tr[1], tr[2]}];
            a.seen_in_choi = true;
            if (c) {
                a.realized = c->letters[0];
            }
        }

        RandomSource rng(derive_substream_seed(seed, static_cast<uint64_t>(p)));
        for (size_t s = 0; s < states_per_key; s++) {
            StateVector phi = random_state(1, rng);
            StateVector input = apply_unitary(twist, phi, {0});
            StateVector t_phi = apply_unitary(t, phi, {0});
            std::map<int, double> n_probability;
            auto branches = explore_branches([&](OutcomeSource &src) {
                return adapted_t_gadget(input, 0, sigma_p, src, table);
            });
            for (const auto &b : branches) {
                n_probability[b.value.transcript[0]] += b.probability;
            }
            for (const auto &b : branches) {
                const auto &tr = b.value.transcript;
                PauliLetter expected = theorem1_correction(tr[1], tr[2]);
                StateVector target = apply_unitary(letter_matrix(expected), t_phi, {0});
                double deficit = 1 - fidelity(target, b.value.post_state);
                auto &a = acc[{tr[0], tr[1], tr[2]}];
                a.worst = std::max(a.worst, deficit);
                a.probabilities.push_back(b.probability / n_probability[tr[0]]);
                a.hits++;
            }
        }

        for (const auto &[key, a] : acc) {
            auto [n, r1, r2] = key;
            Table1BranchCheck check{};
            check.sigma_p = sigma_p;
            check.n = n;
            check.r1 = r1;
            check.r2 = r2;
            if (!a.probabilities.empty()) {
                double sum = 0;
                for (double x : a.probabilities) {
                    sum += x;
                }
                check.probability = sum / static_cast<double>(a.probabilities.size());
                auto [lo, hi] = std::minmax_element(a.probabilities.begin(), a.probabilities.end());
                check.probability_spread = *hi - *lo;
            }
            check.expected = theorem1_correction(r1, r2);
            check.realized = a.realized;
            check.worst_fidelity_deficit = a.worst;
            check.pass = a.seen_in_choi && a.realized == check.expected && a.worst < tol &&
                         a.hits == states_per_key;
            v.branches.push_back(check);
        }
    }
    return v;
}

nlohmann::json verification_to_json(const Table1Verification &v, const Table1 &table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &r : table.rows()) {
        Table1Entry e = table.lookup(r.sigma_p, r.n);
        nlohmann::json branches = nlohmann::json::array();
        for (const auto &b : v.branches) {
            if (b.sigma_p != r.sigma_p || b.n != r.n) {
                continue;
            }
            branches.push_back({
                {"r1", b.r1},
                {"r2", b.r2},
                {"probability", b.probability},
                {"expected_correction", std::string(1, letter_char(b.expected))},
                {"realized_correction",
                 b.realized ? nlohmann::json(std::string(1, letter_char(*b.realized))) : nlohmann::json("not Pauli")},
                {"worst_fidelity_deficit", b.worst_fidelity_deficit},
                {"status", b.pass ? "PASS" : "FAIL"},
            });
        }
        rows.push_back({
            {"sigma_p", "s" + std::to_string(index_of(r.sigma_p))},
            {"n", r.n},
            {"m1", e.m1.str()},
            {"m2_r1_pos", e.m2_pos.str()},
            {"m2_r1_neg", e.m2_neg.str()},
            {"branches", branches},
        });
    }
    nlohmann::json failures = nlohmann::json::array();
    for (const auto &f : v.failures()) {
        failures.push_back({
            {"sigma_p", "s" + std::to_string(index_of(f.sigma_p))},
            {"n", f.n},
            {"r1", f.r1},
            {"r2", f.r2},
        });
    }
    return nlohmann::json{
        {"states_per_key", v.states_per_key},
        {"seed", v.seed},
        {"tolerance", v.tolerance},
        {"branches_checked", v.branches.size()},
        {"all_pauli", v.all_pauli()},
        {"status", v.all_pass() ? "PASS" : "FAIL"},
        {"failures", failures},
        {"rows", rows},
    };
}

}  // namespace mbqc
