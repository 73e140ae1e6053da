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

#ifndef MBQC_GATES_H
#define MBQC_GATES_H

#include <cmath>
#include <numbers>

#include "mbqc/numerics.h"

namespace mbqc {

inline Matrix h_matrix() {
    const double h = 1 / std::sqrt(2.0);
    return Matrix{{h, h}, {h, -h}};
}

/// diag(1, e^{i pi/4}).
inline Matrix t_matrix() {
    return Matrix{{1, 0}, {0, std::polar(1.0, std::numbers::pi / 4)}};
}

/// Control is the first (most significant) qubit.
inline Matrix cnot_matrix() {
    return Matrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
}

}  // namespace mbqc

#endif
