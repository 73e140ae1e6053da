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

#ifndef MBQC_TABLE1_H
#define MBQC_TABLE1_H

#include <array>
#include <string>

#include "mbqc/pauli.h"

namespace mbqc {

/// One line of the adapted-T measurement table: for an incoming frame letter
/// sigma_p and first-measurement outcome n, the signs of
///   M1       = +/- Z(x)Z,
///   M2(r1=+1) = +/- X(x)X,
///   M2(r1=-1) = +/- Y(x)X.
struct Table1Row {
    PauliLetter sigma_p;
    int n;
    int m1_sign;
    int m2_pos_sign;
    int m2_neg_sign;

    bool operator==(const Table1Row &other) const = default;
};

/// A table row expanded into observables. Targets are (0, 1) meaning (input
/// wire, first ancilla); the gadget rebinds them.
struct Table1Entry {
    PauliLetter sigma_p;
    int n;
    SignedPauliObservable m1;
    SignedPauliObservable m2_pos;
    SignedPauliObservable m2_neg;

    const SignedPauliObservable &m2(int r1) const { return r1 > 0 ? m2_pos : m2_neg; }
};

class Table1 {
   public:
    /// Rows may come in any order but every (sigma_p, n) key must appear once.
    explicit Table1(std::array<Table1Row, 16> rows);

    /// The sixteen rows exactly as printed in the original publication.
    static const Table1 &as_published();

    /// The published rows with three second-measurement signs flipped, in rows
    /// (I,0) for r1=-1, (I,2) for r1=+1 and (Z,2) for r1=+1. With these
    /// signs every branch realizes the correction given by
    /// theorem1_correction; with the published signs six branches realize a
    /// different (still Pauli) correction.
    static const Table1 &with_errata();

    /// Reads the text format written by render(). Errors carry line numbers.
    static Table1 parse(const std::string &text);
    static Table1 load(const std::string &path);

    std::string render() const;

    const Table1Row &row(PauliLetter sigma_p, int n) const;
    Table1Entry lookup(PauliLetter sigma_p, int n) const;

    /// Rows in canonical (sigma_p, n) order.
    const std::array<Table1Row, 16> &rows() const { return rows_; }

    bool operator==(const Table1 &other) const = default;

   private:
    std::array<Table1Row, 16> rows_;
};

/// Row lookup in the published table.
Table1Entry table1_lookup(PauliLetter sigma_p, int n);

/// The correction left on the output after an adapted-T gadget with
/// projective outcomes (r1, r2):
///   (+1,+1) -> I, (-1,+1) -> X, (-1,-1) -> Y, (+1,-1) -> Z.
PauliLetter theorem1_correction(int r1, int r2);

}  // namespace mbqc

#endif
