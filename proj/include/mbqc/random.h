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

#ifndef MBQC_RANDOM_H
#define MBQC_RANDOM_H

#include <cstdint>
#include <random>
#include <span>

#include "mbqc/numerics.h"

namespace mbqc {

/// Decides the outcome of each measurement. Sampling and exhaustive branch
/// exploration are both implemented behind this interface.
class OutcomeSource {
   public:
    virtual ~OutcomeSource() = default;
    /// Picks an outcome index given per-outcome probabilities (which sum to 1
    /// up to rounding). Outcomes with probability below the pruning threshold
    /// must never be picked.
    virtual size_t choose(std::span<const double> probabilities) = 0;
};

/// Hash of (seed, trial) used to give every trial its own substream.
uint64_t derive_substream_seed(uint64_t seed, uint64_t trial);

class RandomSource : public OutcomeSource {
   public:
    explicit RandomSource(uint64_t seed);
    static RandomSource for_trial(uint64_t seed, uint64_t trial);

    uint64_t seed() const { return seed_; }
    std::mt19937_64 &engine() { return engine_; }

    double uniform();
    double normal();

    size_t choose(std::span<const double> probabilities) override;

   private:
    uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Normalized vector of independent complex Gaussian components.
StateVector random_state(size_t num_qubits, RandomSource &rng);

/// Haar-distributed 2x2 unitary (Gram-Schmidt on Gaussian columns).
Matrix random_single_qubit_unitary(RandomSource &rng);

}  // namespace mbqc

#endif
