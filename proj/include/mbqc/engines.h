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

#ifndef MBQC_ENGINES_H
#define MBQC_ENGINES_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mbqc/circuit.h"
#include "mbqc/gadgets.h"
#include "mbqc/numerics.h"
#include "mbqc/pauli.h"
#include "mbqc/random.h"
#include "mbqc/table1.h"

namespace mbqc {

enum class EngineKind { Nielsen, Postponed, Frame };
enum class FinalizeMode { Apply, Report };

std::string engine_name(EngineKind kind);
EngineKind parse_engine(const std::string &name);
std::string finalize_name(FinalizeMode mode);
FinalizeMode parse_finalize(const std::string &name);

struct EngineOptions {
    /// After every gate, compare the (frame-adjusted) register with the
    /// oracle's intermediate state and throw std::logic_error on mismatch.
    bool verify_steps = false;
    FinalizeMode finalize = FinalizeMode::Apply;
    /// Measurement table for the frame engine's T gadgets.
    const Table1 *table = &Table1::with_errata();
};

/// Gadget transcripts produced while simulating one circuit gate, including
/// its corrections.
struct GateTranscript {
    std::string gate;
    std::vector<std::vector<int>> gadget_transcripts;
};

struct PostponementData {
    Matrix u_simul;
    /// U U_simul^dagger.
    Matrix c_u;
    Matrix u;
};

struct RunReport {
    std::string engine;
    size_t total_gadget_calls = 0;
    size_t corrective_gadget_calls = 0;
    std::vector<GateTranscript> per_gate_transcripts;
    std::optional<PauliOperator> final_frame;
    double fidelity_vs_oracle = 0;
    uint64_t seed = 0;
    uint64_t trial = 0;

    /// Register after the run. For the frame engine in report mode this is
    /// the raw state, i.e. final_frame times the ideal output.
    StateVector final_state;
    std::optional<PostponementData> postponement;
};

/// Result of running one gate through the correction loop.
struct CorrectionLoopResult {
    StateVector state;
    std::vector<std::vector<int>> transcripts;
};

/// Simulates u on qubit q with the interleaved correction loop: apply the
/// gadget for U_0 = u; while the last transcript has m != n, simulate
/// U_{k+1} = U_k sigma_m sigma_n U_k^dagger on the produced state.
CorrectionLoopResult nielsen_simulate_gate(const Matrix &u, const StateVector &s, size_t q, OutcomeSource &outcomes);

RunReport run_nielsen(const Circuit &c, const StateVector &input, OutcomeSource &outcomes, const EngineOptions &options = {});

/// Runs every gadget without correction, accumulates U_simul densely and
/// applies C_U = U U_simul^dagger at the end. Limited to kMaxDenseQubits.
RunReport run_postponed(const Circuit &c, const StateVector &input, OutcomeSource &outcomes, const EngineOptions &options = {});

/// Pauli-frame engine: exactly one gadget per gate, adapted T gadgets, and a
/// final frame that is applied (FinalizeMode::Apply) or returned for
/// classical reinterpretation (FinalizeMode::Report).
RunReport run_frame(const Circuit &c, const StateVector &input, OutcomeSource &outcomes, const EngineOptions &options = {});

RunReport run_engine(
    EngineKind kind, const Circuit &c, const StateVector &input, OutcomeSource &outcomes, const EngineOptions &options = {});

/// Applies each letter of `frame` to its qubit (phase ignored).
StateVector apply_frame(const PauliOperator &frame, const StateVector &s);

/// Flips bit k iff frame letter k is X or Y.
std::vector<int> reinterpret_outcomes(const PauliOperator &frame, std::span<const int> raw_bits);

/// Geometric termination of the correction loop: each attempt succeeds with
/// probability 1/4, so P(x > k) = (3/4)^k.
struct TerminationModel {
    double success_probability = 0.25;

    double tail(int k) const;
    double mean_attempts() const { return 1 / success_probability; }
};

/// (3/4)^k. Throws for negative k.
double termination_tail(int k);

/// How a run's input register is chosen.
struct InputSpec {
    /// Basis state; empty means a random state.
    std::string bits;

    static InputSpec parse(const std::string &text);
    bool is_random() const { return bits.empty(); }
    StateVector make(size_t num_qubits, RandomSource &rng) const;
    std::string str() const { return is_random() ? "random" : bits; }
};

/// Runs `trials` independent runs; trial t draws its input and outcomes from
/// RandomSource::for_trial(seed, t).
std::vector<RunReport> simulate_trials(
    EngineKind kind, const Circuit &c, const InputSpec &input, uint64_t seed, size_t trials, const EngineOptions &options = {});

struct TailRow {
    int k;
    double empirical_tail;
    double model_tail;
    /// Binomial standard deviation of the empirical tail under the model.
    double stderr_;
};

struct TerminationStats {
    size_t gates = 0;
    size_t attempts = 0;
    /// Gadget calls used for each simulated gate.
    std::vector<size_t> attempts_per_gate;
    std::vector<TailRow> rows;

    double success_rate() const { return gates ? static_cast<double>(gates) / static_cast<double>(attempts) : 0; }
    double mean_attempts() const { return gates ? static_cast<double>(attempts) / static_cast<double>(gates) : 0; }
};

/// Simulates `gates` independent one-qubit gates (random unitary, random
/// input) with the correction loop and tabulates P(x > k) for k = 0..max_k.
TerminationStats termination_stats(size_t gates, uint64_t seed, int max_k = 10);

struct CostRow {
    std::string engine;
    size_t circuit_len;
    size_t trial;
    size_t gadget_calls;
    size_t corrective_calls;
    double fidelity;
};

struct CostSummary {
    std::string engine;
    double mean = 0;
    double variance = 0;
    size_t p50 = 0;
    size_t p90 = 0;
    size_t max = 0;
};

struct CostTable {
    std::vector<CostRow> rows;
    std::vector<CostSummary> summaries;

    const CostSummary &summary(const std::string &engine) const;
};

/// Runs every engine `trials` times on `c`. The postponed engine is skipped
/// above kMaxDenseQubits.
CostTable compare_costs(const Circuit &c, size_t trials, uint64_t seed, const InputSpec &input = {});

}  // namespace mbqc

#endif
