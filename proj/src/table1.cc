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
#include <sstream>
#include <stdexcept>

namespace mbqc {

namespace {

constexpr PauliLetter I = PauliLetter::I;
constexpr PauliLetter X = PauliLetter::X;
constexpr PauliLetter Y = PauliLetter::Y;
constexpr PauliLetter Z = PauliLetter::Z;

size_t key_index(PauliLetter sigma_p, int n) {
    if (n < 0 || n > 3) {
        throw std::out_of_range("Measurement table key n must be in 0..3.");
    }
    return static_cast<size_t>(index_of(sigma_p) * 4 + n);
}

PauliLetter parse_letter_token(const std::string &tok) {
    if (tok.size() == 2 && (tok[0] == 's' || tok[0] == 'S') && tok[1] >= '0' && tok[1] <= '3') {
        return letter_from_index(tok[1] - '0');
    }
    if (tok.size() == 1) {
        return letter_from_char(tok[0]);
    }
    throw std::invalid_argument("bad sigma_p '" + tok + "'");
}

int parse_sign_token(const std::string &tok) {
    if (tok == "+" || tok == "+1" || tok == "1") {
        return +1;
    }
    if (tok == "-" || tok == "-1") {
        return -1;
    }
    throw std::invalid_argument("bad sign '" + tok + "'");
}

}  // namespace

Table1::Table1(std::array<Table1Row, 16> rows) {
    std::array<bool, 16> seen{};
    for (const auto &r : rows) {
        size_t k = key_index(r.sigma_p, r.n);
        if (seen[k]) {
            std::stringstream ss;
            ss << "Measurement table has two rows for sigma_p=s" << index_of(r.sigma_p) << ", n=" << r.n << ".";
            throw std::invalid_argument(ss.str());
        }
        for (int s : {r.m1_sign, r.m2_pos_sign, r.m2_neg_sign}) {
            if (s != 1 && s != -1) {
                throw std::invalid_argument("Measurement table signs must be +1 or -1.");
            }
        }
        seen[k] = true;
        rows_[k] = r;
    }
}

const Table1 &Table1::as_published() {
    static const Table1 table({{
        {I, 0, +1, +1, +1},
        {I, 1, -1, +1, -1},
        {I, 2, -1, +1, +1},
        {I, 3, +1, -1, +1},
        {X, 0, -1, +1, +1},
        {X, 1, +1, +1, +1},
        {X, 2, +1, -1, -1},
        {X, 3, -1, -1, -1},
        {Y, 0, -1, -1, -1},
        {Y, 1, +1, -1, -1},
        {Y, 2, +1, +1, +1},
        {Y, 3, -1, +1, +1},
        {Z, 0, +1, -1, +1},
        {Z, 1, -1, -1, +1},
        {Z, 2, -1, -1, -1},
        {Z, 3, +1, +1, -1},
    }});
    return table;
}

const Table1 &Table1::with_errata() {
    static const Table1 table({{
        {I, 0, +1, +1, -1},
        {I, 1, -1, +1, -1},
        {I, 2, -1, -1, +1},
        {I, 3, +1, -1, +1},
        {X, 0, -1, +1, +1},
        {X, 1, +1, +1, +1},
        {X, 2, +1, -1, -1},
        {X, 3, -1, -1, -1},
        {Y, 0, -1, -1, -1},
        {Y, 1, +1, -1, -1},
        {Y, 2, +1, +1, +1},
        {Y, 3, -1, +1, +1},
        {Z, 0, +1, -1, +1},
        {Z, 1, -1, -1, +1},
        {Z, 2, -1, +1, -1},
        {Z, 3, +1, +1, -1},
    }});
    return table;
}

Table1 Table1::parse(const std::string &text) {
    std::array<Table1Row, 16> rows{};
    size_t count = 0;
    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;) {
            tokens.push_back(tok);
        }
        if (tokens.empty()) {
            continue;
        }
        try {
            if (tokens.size() != 5) {
                throw std::invalid_argument("expected 5 fields: sigma_p n m1 m2(r1=+1) m2(r1=-1)");
            }
            if (count == 16) {
                throw std::invalid_argument("more than 16 rows");
            }
            int n = std::stoi(tokens[1]);
            if (n < 0 || n > 3) {
                throw std::invalid_argument("n must be in 0..3");
            }
            rows[count++] = Table1Row{
                parse_letter_token(tokens[0]),
                n,
                parse_sign_token(tokens[2]),
                parse_sign_token(tokens[3]),
                parse_sign_token(tokens[4]),
            };
        } catch (const std::exception &e) {
            std::stringstream ss;
            ss << "Measurement table parse error at line " << line_no << ": " << e.what();
            throw std::invalid_argument(ss.str());
        }
    }
    if (count != 16) {
        std::stringstream ss;
        ss << "Measurement table must have 16 rows, found " << count << ".";
        throw std::invalid_argument(ss.str());
    }
    return Table1(rows);
}

Table1 Table1::load(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw std::runtime_error("Cannot open measurement table file '" + path + "'.");
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

std::string Table1::render() const {
    std::stringstream ss;
    ss << "# Adapted T gadget measurement table.\n";
    ss << "# M1 = sign*Z(x)Z; M2 = sign*X(x)X when r1=+1, sign*Y(x)X when r1=-1.\n";
    ss << "# sigma_p n M1 M2(r1=+1) M2(r1=-1)\n";
    for (const auto &r : rows_) {
        ss << 's' << index_of(r.sigma_p) << ' ' << r.n << ' ' << (r.m1_sign > 0 ? '+' : '-') << ' '
           << (r.m2_pos_sign > 0 ? '+' : '-') << ' ' << (r.m2_neg_sign > 0 ? '+' : '-') << '\n';
    }
    return ss.str();
}

const Table1Row &Table1::row(PauliLetter sigma_p, int n) const {
    return rows_[key_index(sigma_p, n)];
}

Table1Entry Table1::lookup(PauliLetter sigma_p, int n) const {
    const auto &r = row(sigma_p, n);
    return Table1Entry{
        sigma_p,
        n,
        make_observable(r.m1_sign, Z, Z),
        make_observable(r.m2_pos_sign, X, X),
        make_observable(r.m2_neg_sign, Y, X),
    };
}

Table1Entry table1_lookup(PauliLetter sigma_p, int n) {
    return Table1::as_published().lookup(sigma_p, n);
}

PauliLetter theorem1_correction(int r1, int r2) {
    if ((r1 != 1 && r1 != -1) || (r2 != 1 && r2 != -1)) {
        throw std::invalid_argument("theorem1_correction: results must be +1 or -1.");
    }
    if (r1 > 0) {
        return r2 > 0 ? I : Z;
    }
    return r2 > 0 ? X : Y;
}

}  // namespace mbqc
