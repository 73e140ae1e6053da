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

#include "mbqc/engines.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mbqc/gates.h"

namespace mbqc {

namespace {

/// One-qubit Pauli lifted to qubit q of an n-qubit operator, phase kept.
PauliOperator embed_single(const PauliOperator &p, size_t num_qubits, size_t q) {
    PauliOperator r = PauliOperator::single(num_qubits, q, p.letters.at(0));
    r.phase_exp = p.phase_exp;
    return r;
}

PauliOperator embed_pair(const PauliOperator &p, size_t num_qubits, size_t a, size_t b) {
    PauliOperator r = PauliOperator::identity(num_qubits);
    r.letters[a] = p.letters.at(0);
    r.letters[b] = p.letters.at(1);
    r.phase_exp = p.phase_exp;
    return r;
}

StateVector apply_gate(const Gate &g, const StateVector &s) {
    if (g.kind == GateKind::CNOT) {
        return apply_unitary(cnot_matrix(), s, {g.q0, g.q1});
    }
    return apply_unitary(gate_matrix(g.kind), s, {g.q0});
}

void check_step(bool ok, const std::string &engine, size_t gate_index) {
    if (!ok) {
        std::stringstream ss;
        ss << engine << " engine diverged from the oracle after gate " << gate_index << ".";
        throw std::logic_error(ss.str());
    }
}

void check_input(const Circuit &c, const StateVector &input) {
    c.validate();
    if (input.num_qubits() != c.num_qubits) {
        throw std::invalid_argument("Input register size does not match the circuit.");
    }
}

}  // namespace

std::string engine_name(EngineKind kind) {
    switch (kind) {
        case EngineKind::Nielsen:
            return "nielsen";
        case EngineKind::Postponed:
            return "postponed";
        case EngineKind::Frame:
            return "frame";
    }
    throw std::logic_error("unreachable");
}

EngineKind parse_engine(const std::string &name) {
    if (name == "nielsen") {
        return EngineKind::Nielsen;
    }
    if (name == "postponed") {
        return EngineKind::Postponed;
    }
    if (name == "frame") {
        return EngineKind::Frame;
    }
    throw std::invalid_argument("Unknown engine '" + name + "'; expected nielsen, postponed or frame.");
}

std::string finalize_name(FinalizeMode mode) {
    return mode == FinalizeMode::Apply ? "apply" : "report";
}

FinalizeMode parse_finalize(const std::string &name) {
    if (name == "apply") {
        return FinalizeMode::Apply;
    }
    if (name == "report") {
        return FinalizeMode::Report;
    }
    throw std::invalid_argument("Unknown finalize mode '" + name + "'; expected apply or report.");
}

CorrectionLoopResult nielsen_simulate_gate(const Matrix &u, const StateVector &s, size_t q, OutcomeSource &outcomes) {
    CorrectionLoopResult out{s, {}};
    Matrix current = u;
    while (true) {
        GadgetOutcome g = one_qubit_gadget(current, out.state, q, outcomes);
        out.state = std::move(g.post_state);
        int n = g.transcript[0];
        int m = g.transcript[1];
        out.transcripts.push_back(std::move(g.transcript));
        if (m == n) {
            return out;
        }
        Matrix sm = letter_matrix(letter_from_index(m));
        Matrix sn = letter_matrix(letter_from_index(n));
        // Rounding error roughly doubles per round; keep the product unitary.
        current = orthonormalize_columns(current * sm * sn * current.adjoint());
    }
}

RunReport run_nielsen(const Circuit &c, const StateVector &input, OutcomeSource &outcomes, const EngineOptions &options) {
    check_input(c, input);
    RunReport report;
    report.engine = "nielsen";
    StateVector state = input;
    StateVector desired = input;

    for (size_t k = 0; k < c.gates.size(); k++) {
        const Gate &g = c.gates[k];
        GateTranscript gt{g.str(), {}};
        if (g.is_single_qubit()) {
            auto loop = nielsen_simulate_gate(gate_matrix(g.kind), state, g.q0, outcomes);
            state = std::move(loop.state);
            report.total_gadget_calls += loop.transcripts.size();
            report.corrective_gadget_calls += loop.transcripts.size() - 1;
            gt.gadget_transcripts = std::move(loop.transcripts);
        } else {
            GadgetOutcome r = cnot_gadget(state, g.q0, g.q1, outcomes);
            state = std::move(r.post_state);
            report.total_gadget_calls++;
            gt.gadget_transcripts.push_back(r.transcript);
            // The byproduct sits after the CNOT; undo it qubit by qubit.
            std::array<size_t, 2> slots{g.q0, g.q1};
            for (size_t i = 0; i < 2; i++) {
                PauliLetter l = r.byproduct.letters[i];
                if (l == PauliLetter::I) {
                    continue;
                }
                auto loop = nielsen_simulate_gate(letter_matrix(l), state, slots[i], outcomes);
                state = std::move(loop.state);
                report.total_gadget_calls += loop.transcripts.size();
                report.corrective_gadget_calls += loop.transcripts.size();
                for (auto &t : loop.transcripts) {
                    gt.gadget_transcripts.push_back(std::move(t));
                }
            }
        }
        report.per_gate_transcripts.push_back(std::move(gt));
        if (options.verify_steps) {
            desired = apply_gate(g, desired);
            check_step(equal_up_to_global_phase(state, desired), "nielsen", k);
        }
    }

    report.fidelity_vs_oracle = fidelity(state, oracle_apply(c, input));
    report.final_state = std::move(state);
    return report;
}

RunReport run_postponed(const Circuit &c, const StateVector &input, OutcomeSource &outcomes, const EngineOptions &options) {
    check_input(c, input);
    if (c.num_qubits > kMaxDenseQubits) {
        std::stringstream ss;
        ss << "Postponed engine needs dense " << c.num_qubits << "-qubit matrices; limit is " << kMaxDenseQubits << ".";
        throw std::invalid_argument(ss.str());
    }
    RunReport report;
    report.engine = "postponed";
    size_t n = c.num_qubits;
    StateVector state = input;
    Matrix u_simul = Matrix::identity(size_t{1} << n);

    for (size_t k = 0; k < c.gates.size(); k++) {
        const Gate &g = c.gates[k];
        Matrix realized;
        GadgetOutcome r = g.is_single_qubit() ? one_qubit_gadget(gate_matrix(g.kind), state, g.q0, outcomes)
                                              : cnot_gadget(state, g.q0, g.q1, outcomes);
        if (g.is_single_qubit()) {
            std::array<size_t, 1> t{g.q0};
            realized = embed_operator(gate_matrix(g.kind) * to_matrix(r.byproduct), n, t);
        } else {
            std::array<size_t, 2> t{g.q0, g.q1};
            realized = embed_operator(to_matrix(r.byproduct) * cnot_matrix(), n, t);
        }
        state = std::move(r.post_state);
        u_simul = realized * u_simul;
        report.total_gadget_calls++;
        report.per_gate_transcripts.push_back({g.str(), {std::move(r.transcript)}});
        if (options.verify_steps) {
            std::vector<size_t> all(n);
            std::iota(all.begin(), all.end(), 0);
            check_step(equal_up_to_global_phase(state, apply_unitary(u_simul, input, all)), "postponed", k);
        }
    }

    Matrix u = circuit_unitary(c);
    Matrix c_u = u * u_simul.adjoint();
    if (n > 0) {
        std::vector<size_t> all(n);
        std::iota(all.begin(), all.end(), 0);
        state = apply_unitary(c_u, state, all);
    } else {
        state = StateVector::normalized(std::vector<Complex>{c_u(0, 0) * state[0]});
    }

    report.fidelity_vs_oracle = fidelity(state, oracle_apply(c, input));
    report.final_state = std::move(state);
    report.postponement = PostponementData{std::move(u_simul), std::move(c_u), std::move(u)};
    return report;
}

StateVector apply_frame(const PauliOperator &frame, const StateVector &s) {
    if (frame.num_qubits() != s.num_qubits()) {
        throw std::invalid_argument("apply_frame: frame and register sizes differ.");
    }
    StateVector out = s;
    for (size_t q = 0; q < frame.num_qubits(); q++) {
        if (frame.letters[q] != PauliLetter::I) {
            out = apply_unitary(letter_matrix(frame.letters[q]), out, {q});
        }
    }
    return out;
}

RunReport run_frame(const Circuit &c, const StateVector &input, OutcomeSource &outcomes, const EngineOptions &options) {
    check_input(c, input);
    RunReport report;
    report.engine = "frame";
    size_t n = c.num_qubits;
    StateVector state = input;
    StateVector desired = input;
    PauliOperator frame = PauliOperator::identity(n);

    for (size_t k = 0; k < c.gates.size(); k++) {
        const Gate &g = c.gates[k];
        GadgetOutcome r = [&] {
            switch (g.kind) {
                case GateKind::H: {
                    GadgetOutcome o = one_qubit_gadget(h_matrix(), state, g.q0, outcomes);
                    frame = conjugate_through_h(multiply(embed_single(o.byproduct, n, g.q0), frame), g.q0);
                    return o;
                }
                case GateKind::CNOT: {
                    GadgetOutcome o = cnot_gadget(state, g.q0, g.q1, outcomes);
                    frame = multiply(embed_pair(o.byproduct, n, g.q0, g.q1), conjugate_through_cnot(frame, g.q0, g.q1));
                    return o;
                }
                case GateKind::T: {
                    GadgetOutcome o = adapted_t_gadget(state, g.q0, frame.letters[g.q0], outcomes, *options.table);
                    frame.letters[g.q0] = o.byproduct.letters[0];
                    return o;
                }
            }
            throw std::logic_error("unreachable");
        }();
        state = std::move(r.post_state);
        report.total_gadget_calls++;
        report.per_gate_transcripts.push_back({g.str(), {std::move(r.transcript)}});
        if (options.verify_steps) {
            desired = apply_gate(g, desired);
            check_step(equal_up_to_global_phase(apply_frame(frame, state), desired), "frame", k);
        }
    }

    StateVector oracle = oracle_apply(c, input);
    StateVector corrected = apply_frame(frame, state);
    report.fidelity_vs_oracle = fidelity(corrected, oracle);
    report.final_state = options.finalize == FinalizeMode::Apply ? std::move(corrected) : std::move(state);
    report.final_frame = std::move(frame);
    return report;
}

RunReport run_engine(
    EngineKind kind, const Circuit &c, const StateVector &input, OutcomeSource &outcomes, const EngineOptions &options) {
    switch (kind) {
        case EngineKind::Nielsen:
            return run_nielsen(c, input, outcomes, options);
        case EngineKind::Postponed:
            return run_postponed(c, input, outcomes, options);
        case EngineKind::Frame:
            return run_frame(c, input, outcomes, options);
    }
    throw std::logic_error("unreachable");
}

std::vector<int> reinterpret_outcomes(const PauliOperator &frame, std::span<const int> raw_bits) {
    if (frame.num_qubits() != raw_bits.size()) {
        throw std::invalid_argument("reinterpret_outcomes: frame length does not match bit count.");
    }
    std::vector<int> out(raw_bits.begin(), raw_bits.end());
    for (size_t q = 0; q < out.size(); q++) {
        if (frame.letters[q] == PauliLetter::X || frame.letters[q] == PauliLetter::Y) {
            out[q] ^= 1;
        }
    }
    return out;
}

double TerminationModel::tail(int k) const {
    if (k < 0) {
        throw std::invalid_argument("Termination tail needs k >= 0.");
    }
    return std::pow(1 - success_probability, k);
}

double termination_tail(int k) {
    return TerminationModel{}.tail(k);
}

InputSpec InputSpec::parse(const std::string &text) {
    if (text == "random") {
        return InputSpec{};
    }
    if (text.empty() || text.find_first_not_of("01") != std::string::npos) {
        throw std::invalid_argument("Input must be a bitstring or 'random', got '" + text + "'.");
    }
    return InputSpec{text};
}

StateVector InputSpec::make(size_t num_qubits, RandomSource &rng) const {
    if (is_random()) {
        return random_state(num_qubits, rng);
    }
    if (bits.size() != num_qubits) {
        std::stringstream ss;
        ss << "Input bitstring '" << bits << "' has " << bits.size() << " bits; the circuit has " << num_qubits
           << " qubits.";
        throw std::invalid_argument(ss.str());
    }
    return StateVector::from_bitstring(bits);
}

std::vector<RunReport> simulate_trials(
    EngineKind kind, const Circuit &c, const InputSpec &input, uint64_t seed, size_t trials, const EngineOptions &options) {
    std::vector<RunReport> out;
    out.reserve(trials);
    for (size_t t = 0; t < trials; t++) {
        RandomSource rng = RandomSource::for_trial(seed, t);
        StateVector in = input.make(c.num_qubits, rng);
        RunReport r = run_engine(kind, c, in, rng, options);
        r.seed = seed;
        r.trial = t;
        out.push_back(std::move(r));
    }
    return out;
}

TerminationStats termination_stats(size_t gates, uint64_t seed, int max_k) {
    TerminationStats stats;
    stats.gates = gates;
    for (size_t t = 0; t < gates; t++) {
        RandomSource rng = RandomSource::for_trial(seed, t);
        Matrix u = random_single_qubit_unitary(rng);
        StateVector phi = random_state(1, rng);
        auto loop = nielsen_simulate_gate(u, phi, 0, rng);
        stats.attempts_per_gate.push_back(loop.transcripts.size());
        stats.attempts += loop.transcripts.size();
    }
    TerminationModel model;
    double total = static_cast<double>(gates);
    for (int k = 0; k <= max_k; k++) {
        size_t exceed = static_cast<size_t>(std::count_if(
            stats.attempts_per_gate.begin(), stats.attempts_per_gate.end(), [k](size_t x) {
                return x > static_cast<size_t>(k);
            }));
        double p = model.tail(k);
        stats.rows.push_back(TailRow{
            k,
            gates ? static_cast<double>(exceed) / total : 0,
            p,
            gates ? std::sqrt(p * (1 - p) / total) : 0,
        });
    }
    return stats;
}

const CostSummary &CostTable::summary(const std::string &engine) const {
    for (const auto &s : summaries) {
        if (s.engine == engine) {
            return s;
        }
    }
    throw std::out_of_range("No cost summary for engine '" + engine + "'.");
}

CostTable compare_costs(const Circuit &c, size_t trials, uint64_t seed, const InputSpec &input) {
    if (trials == 0) {
        throw std::invalid_argument("compare_costs needs at least one trial.");
    }
    std::vector<EngineKind> engines{EngineKind::Nielsen};
    if (c.num_qubits <= kMaxDenseQubits) {
        engines.push_back(EngineKind::Postponed);
    }
    engines.push_back(EngineKind::Frame);

    CostTable table;
    for (EngineKind kind : engines) {
        std::vector<size_t> counts;
        for (const auto &r : simulate_trials(kind, c, input, seed, trials)) {
            table.rows.push_back(CostRow{
                r.engine,
                c.length(),
                static_cast<size_t>(r.trial),
                r.total_gadget_calls,
                r.corrective_gadget_calls,
                r.fidelity_vs_oracle,
            });
            counts.push_back(r.total_gadget_calls);
        }
        CostSummary s;
        s.engine = engine_name(kind);
        double sum = std::accumulate(counts.begin(), counts.end(), 0.0);
        s.mean = sum / static_cast<double>(counts.size());
        double sq = 0;
        for (size_t x : counts) {
            sq += (static_cast<double>(x) - s.mean) * (static_cast<double>(x) - s.mean);
        }
        s.variance = sq / static_cast<double>(counts.size());
        std::sort(counts.begin(), counts.end());
        auto pct = [&](double q) {
            size_t idx = static_cast<size_t>(std::ceil(q * static_cast<double>(counts.size()))) ;
            return counts[std::min(counts.size() - 1, idx == 0 ? 0 : idx - 1)];
        };
        s.p50 = pct(0.5);
        s.p90 = pct(0.9);
        s.max = counts.back();
        table.summaries.push_back(s);
    }
    return table;
}

}  // namespace mbqc
