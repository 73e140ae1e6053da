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

#include "mbqc/random.h"

#include <cmath>
#include <stdexcept>

#include "mbqc/measurement.h"

namespace mbqc {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

uint64_t derive_substream_seed(uint64_t seed, uint64_t trial) {
    return splitmix64(splitmix64(seed) ^ splitmix64(trial + 0x632BE59BD9B4E019ULL));
}

RandomSource::RandomSource(uint64_t seed) : seed_(seed), engine_(seed) {
}

RandomSource RandomSource::for_trial(uint64_t seed, uint64_t trial) {
    return RandomSource(derive_substream_seed(seed, trial));
}

double RandomSource::uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
}

double RandomSource::normal() {
    return std::normal_distribution<double>(0.0, 1.0)(engine_);
}

size_t RandomSource::choose(std::span<const double> probabilities) {
    double total = 0;
    for (double p : probabilities) {
        if (p >= kPruneThreshold) {
            total += p;
        }
    }
    if (total <= 0) {
        throw std::runtime_error("All outcome probabilities vanish; the state is numerically corrupted.");
    }
    double u = uniform() * total;
    size_t last = 0;
    for (size_t k = 0; k < probabilities.size(); k++) {
        if (probabilities[k] < kPruneThreshold) {
            continue;
        }
        last = k;
        if (u < probabilities[k]) {
            return k;
        }
        u -= probabilities[k];
    }
    return last;
}

StateVector random_state(size_t num_qubits, RandomSource &rng) {
    std::vector<Complex> amps(size_t{1} << num_qubits);
    for (auto &a : amps) {
        double re = rng.normal();
        double im = rng.normal();
        a = {re, im};
    }
    return StateVector::normalized(std::move(amps));
}

Matrix random_single_qubit_unitary(RandomSource &rng) {
    Matrix g(2);
    for (size_t r = 0; r < 2; r++) {
        for (size_t c = 0; c < 2; c++) {
            g(r, c) = Complex{rng.normal(), rng.normal()};
        }
    }
    return orthonormalize_columns(g);
}

}  // namespace mbqc
