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

#ifndef MBQC_MEASUREMENT_H
#define MBQC_MEASUREMENT_H

#include <algorithm>
#include <array>
#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "mbqc/numerics.h"
#include "mbqc/pauli.h"
#include "mbqc/random.h"

namespace mbqc {

/// Outcomes whose Born probability falls below this are never realized.
inline constexpr double kPruneThreshold = 1e-12;

/// Projective measurement onto four orthonormal two-qubit vectors. Outcome
/// label i leaves the measured pair in vectors[i].
struct BasisMeasurement {
    std::array<StateVector, 4> vectors;
    size_t target_first = 0;
    size_t target_second = 1;

    BasisMeasurement on(size_t a, size_t b) const;
    bool is_orthonormal(double tol = kStateTolerance) const;
};

/// Measures the listed qubits in the computational basis. The label is the
/// observed bitstring read with targets[0] as the most significant bit.
struct ComputationalMeasurement {
    std::vector<size_t> targets;
};

/// Outcome labels: BasisMeasurement 0..3; SignedPauliObservable +1 / -1 (the
/// eigenvalue of the signed operator); ComputationalMeasurement 0..2^k-1.
using Measurement = std::variant<BasisMeasurement, SignedPauliObservable, ComputationalMeasurement>;

/// (|00> + |11>) / sqrt(2).
StateVector epr_state();

/// vectors[n] = (I (x) sigma_n)|EPR>.
BasisMeasurement bell_basis(size_t a = 0, size_t b = 1);

/// vectors[i] = (I (x) u sigma_i)|EPR>. Throws if u is not a 2x2 unitary.
BasisMeasurement u_basis(const Matrix &u, size_t a = 0, size_t b = 1);

struct Projection {
    int label;
    double probability;
    std::vector<Complex> unnormalized;
};

/// Applies every projector of `m` to `s`, in label order.
std::vector<Projection> project_all(const StateVector &s, const Measurement &m);

struct MeasurementResult {
    int label;
    double probability;
    StateVector state;
};

MeasurementResult measure(const StateVector &s, const Measurement &m, OutcomeSource &outcomes);

std::pair<int, StateVector> measure_basis(const StateVector &s, const BasisMeasurement &m, OutcomeSource &outcomes);

std::pair<int, StateVector> measure_observable(
    const StateVector &s, const SignedPauliObservable &o, OutcomeSource &outcomes);

struct OutcomeBranch {
    std::vector<int> outcome_labels;
    double probability;
    StateVector post_state;
};

/// Full outcome tree of a fixed measurement sequence. Branches below
/// kPruneThreshold are dropped.
std::vector<OutcomeBranch> enumerate_branches(const StateVector &s, std::span<const Measurement> plan);

/// Replays a scripted prefix of outcome choices, then always picks the first
/// possible outcome, remembering the alternatives it skipped.
class ScriptedOutcomes : public OutcomeSource {
   public:
    explicit ScriptedOutcomes(std::vector<size_t> prefix);
    size_t choose(std::span<const double> probabilities) override;

    const std::vector<size_t> &choices() const { return choices_; }
    double probability() const { return probability_; }
    /// For each decision, the feasible outcome indices.
    const std::vector<std::vector<size_t>> &feasible() const { return feasible_; }

   private:
    std::vector<size_t> prefix_;
    std::vector<size_t> choices_;
    std::vector<std::vector<size_t>> feasible_;
    double probability_ = 1;
};

template <typename T>
struct ExploredBranch {
    std::vector<size_t> choices;
    double probability;
    T value;
};

/// Runs an adaptive protocol once per reachable sequence of measurement
/// outcomes. `protocol` takes an OutcomeSource& and returns a value; it must
/// be deterministic given the outcomes it is fed. Results are ordered
/// lexicographically by outcome choices.
template <typename Protocol>
auto explore_branches(Protocol &&protocol)
    -> std::vector<ExploredBranch<std::invoke_result_t<Protocol &, OutcomeSource &>>> {
    using Value = std::invoke_result_t<Protocol &, OutcomeSource &>;
    std::vector<ExploredBranch<Value>> out;
    std::vector<std::vector<size_t>> pending{{}};
    while (!pending.empty()) {
        std::vector<size_t> prefix = std::move(pending.back());
        pending.pop_back();
        ScriptedOutcomes src(prefix);
        Value value = protocol(src);
        const auto &choices = src.choices();
        for (size_t d = prefix.size(); d < choices.size(); d++) {
            for (size_t alt : src.feasible()[d]) {
                if (alt > choices[d]) {
                    std::vector<size_t> next(choices.begin(), choices.begin() + static_cast<std::ptrdiff_t>(d));
                    next.push_back(alt);
                    pending.push_back(std::move(next));
                }
            }
        }
        out.push_back(ExploredBranch<Value>{choices, src.probability(), std::move(value)});
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.choices < b.choices; });
    return out;
}

}  // namespace mbqc

#endif
