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

#include "mbqc/table1.h"

#include <fstream>
#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "mbqc/verify.h"
#include "test_util.h"

using namespace mbqc;

namespace {

std::string read_file(const std::string &path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST(table1, published_rows_spot_checks) {
    const Table1 &t = Table1::as_published();
    auto e = t.lookup(PauliLetter::I, 2);
    ASSERT_EQ(e.m1, make_observable(-1, PauliLetter::Z, PauliLetter::Z));
    ASSERT_EQ(e.m2_pos, make_observable(+1, PauliLetter::X, PauliLetter::X));
    ASSERT_EQ(e.m2_neg, make_observable(+1, PauliLetter::Y, PauliLetter::X));
    auto f = t.lookup(PauliLetter::Y, 0);
    ASSERT_EQ(f.m1.sign, -1);
    ASSERT_EQ(f.m2(+1).sign, -1);
    ASSERT_EQ(f.m2(-1).sign, -1);
    auto g = t.lookup(PauliLetter::Z, 3);
    ASSERT_EQ(g.m1.sign, +1);
    ASSERT_EQ(g.m2_pos.sign, +1);
    ASSERT_EQ(g.m2_neg.sign, -1);
    ASSERT_EQ(table1_lookup(PauliLetter::Z, 3).m2_neg, g.m2_neg);
}

TEST(table1, observables_have_fixed_letters) {
    for (const auto *t : {&Table1::as_published(), &Table1::with_errata()}) {
        for (const auto &r : t->rows()) {
            auto e = t->lookup(r.sigma_p, r.n);
            ASSERT_EQ(e.m1.first, PauliLetter::Z);
            ASSERT_EQ(e.m1.second, PauliLetter::Z);
            ASSERT_EQ(e.m2_pos.first, PauliLetter::X);
            ASSERT_EQ(e.m2_neg.first, PauliLetter::Y);
            ASSERT_EQ(e.m2_pos.second, PauliLetter::X);
            ASSERT_EQ(e.m2_neg.second, PauliLetter::X);
        }
    }
}

TEST(table1, errata_differs_in_three_cells) {
    const auto &pub = Table1::as_published().rows();
    const auto &fix = Table1::with_errata().rows();
    size_t cells = 0;
    std::set<std::pair<int, int>> rows;
    for (size_t k = 0; k < 16; k++) {
        int d = (pub[k].m1_sign != fix[k].m1_sign) + (pub[k].m2_pos_sign != fix[k].m2_pos_sign) +
                (pub[k].m2_neg_sign != fix[k].m2_neg_sign);
        cells += static_cast<size_t>(d);
        if (d) {
            rows.insert({index_of(pub[k].sigma_p), pub[k].n});
            ASSERT_EQ(pub[k].m1_sign, fix[k].m1_sign);
        }
    }
    ASSERT_EQ(cells, 3u);
    ASSERT_EQ(rows, (std::set<std::pair<int, int>>{{0, 0}, {0, 2}, {3, 2}}));
}

TEST(table1, theorem1_correction_mapping) {
    ASSERT_EQ(theorem1_correction(+1, +1), PauliLetter::I);
    ASSERT_EQ(theorem1_correction(-1, +1), PauliLetter::X);
    ASSERT_EQ(theorem1_correction(-1, -1), PauliLetter::Y);
    ASSERT_EQ(theorem1_correction(+1, -1), PauliLetter::Z);
    ASSERT_THROW(theorem1_correction(0, 1), std::invalid_argument);
}

TEST(table1, render_parse_round_trip) {
    for (const auto *t : {&Table1::as_published(), &Table1::with_errata()}) {
        ASSERT_EQ(Table1::parse(t->render()), *t);
    }
}

TEST(table1, data_files_match_builtin_tables) {
    ASSERT_EQ(read_file(mbqc::testing::data_path("table1.txt")), Table1::as_published().render());
    ASSERT_EQ(read_file(mbqc::testing::data_path("table1_errata.txt")), Table1::with_errata().render());
    ASSERT_EQ(Table1::load(mbqc::testing::data_path("table1.txt")), Table1::as_published());
}

TEST(table1, parse_accepts_alternate_tokens) {
    std::string text = Table1::with_errata().render();
    std::string alt;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (line.rfind("s1 ", 0) == 0) {
            line = "X" + line.substr(2);
        } else if (line.rfind("s2 ", 0) == 0) {
            line = "2" + line.substr(2);
        }
        for (size_t p = 0; (p = line.find(" +", p)) != std::string::npos; p += 3) {
            line.replace(p, 2, " +1");
        }
        alt += line + "  # trailing comment\n";
    }
    ASSERT_EQ(Table1::parse(alt), Table1::with_errata());
}

TEST(table1, parse_errors) {
    std::string good = Table1::with_errata().render();
    ASSERT_THROW(Table1::parse(""), std::invalid_argument);
    ASSERT_THROW(Table1::parse(good + "s0 0 + + +\n"), std::invalid_argument);
    std::string dup = good;
    dup.replace(dup.find("s1 1"), 4, "s1 0");
    ASSERT_THROW(Table1::parse(dup), std::invalid_argument);
    std::string bad_sign = good;
    bad_sign.replace(bad_sign.find("s2 2 + + +"), 10, "s2 2 + ? +");
    try {
        Table1::parse(bad_sign);
        FAIL() << "expected a parse error";
    } catch (const std::invalid_argument &e) {
        ASSERT_NE(std::string(e.what()).find("line 14"), std::string::npos) << e.what();
    }
    std::string bad_n = good;
    bad_n.replace(bad_n.find("s2 2"), 4, "s2 7");
    ASSERT_THROW(Table1::parse(bad_n), std::invalid_argument);
    ASSERT_THROW(Table1::load("/nonexistent/table.txt"), std::runtime_error);
}

TEST(table1, verify_published_table_fails_exactly_six_branches) {
    auto v = verify_table1(Table1::as_published(), 5, 3);
    ASSERT_EQ(v.branches.size(), 64u);
    ASSERT_TRUE(v.all_pauli());
    ASSERT_FALSE(v.all_pass());
    std::set<std::tuple<int, int, int, int>> got;
    for (const auto &f : v.failures()) {
        got.insert({index_of(f.sigma_p), f.n, f.r1, f.r2});
    }
    std::set<std::tuple<int, int, int, int>> expected{
        {0, 0, -1, -1}, {0, 0, -1, +1}, {0, 2, +1, -1}, {0, 2, +1, +1}, {3, 2, +1, -1}, {3, 2, +1, +1}};
    ASSERT_EQ(got, expected);
    ASSERT_EQ(v.failing_rows().size(), 3u);
}

TEST(table1, verify_errata_table_passes) {
    auto v = verify_table1(Table1::with_errata(), 5, 3);
    ASSERT_EQ(v.branches.size(), 64u);
    ASSERT_TRUE(v.all_pass());
    for (const auto &b : v.branches) {
        ASSERT_NEAR(b.probability, 0.25, 1e-9);
        ASSERT_LT(b.probability_spread, 1e-9);
        ASSERT_LT(b.worst_fidelity_deficit, 1e-9);
    }
}

TEST(table1, verify_detects_corrupted_row) {
    auto t = Table1::load(mbqc::testing::fixture_path("table1_corrupted.txt"));
    auto v = verify_table1(t, 3, 1);
    ASSERT_FALSE(v.all_pass());
    auto rows = v.failing_rows();
    ASSERT_EQ(rows.size(), 1u);
    ASSERT_EQ(rows[0], std::make_pair(PauliLetter::X, 1));
}

TEST(table1, verification_json_shape) {
    auto v = verify_table1(Table1::with_errata(), 2, 1);
    auto j = verification_to_json(v, Table1::with_errata());
    ASSERT_EQ(j["branches_checked"], 64);
    ASSERT_EQ(j["failures"].size(), 0u);
    ASSERT_EQ(j["rows"].size(), 16u);
}

TEST(table1, pauli_up_to_scalar) {
    auto p = pauli_up_to_scalar(letter_matrix(PauliLetter::Y) * Complex{0.3, -0.4});
    ASSERT_TRUE(p.has_value());
    ASSERT_EQ(p->letters[0], PauliLetter::Y);
    ASSERT_FALSE(pauli_up_to_scalar(Matrix{{1, 0}, {0, 0.5}}).has_value());
}
