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

#include <cmath>

#include "gtest/gtest.h"
#include "mbqc/gates.h"
#include "mbqc/report.h"
#include "mbqc/verify.h"
#include "test_util.h"

using namespace mbqc;

namespace {

const EngineKind kEngines[3] = {EngineKind::Nielsen, EngineKind::Postponed, EngineKind::Frame};

EngineOptions checked() {
    EngineOptions o;
    o.verify_steps = true;
    return o;
}

Circuit clifford_circuit(size_t n, size_t len, RandomSource &rng) {
    Circuit c = random_circuit(n, len, rng);
    for (auto &g : c.gates) {
        if (g.kind == GateKind::T) {
            g.kind = GateKind::H;
        }
    }
    return c;
}

}  // namespace

TEST(engines, names_round_trip) {
    for (auto k : kEngines) {
        ASSERT_EQ(parse_engine(engine_name(k)), k);
    }
    ASSERT_EQ(parse_finalize("report"), FinalizeMode::Report);
    ASSERT_EQ(finalize_name(FinalizeMode::Apply), "apply");
    ASSERT_THROW(parse_engine("magic"), std::invalid_argument);
    ASSERT_THROW(parse_finalize("later"), std::invalid_argument);
}

TEST(engines, all_engines_match_the_oracle) {
    auto rng = mbqc::testing::test_rng(50);
    for (int trial = 0; trial < 30; trial++) {
        size_t n = 1 + static_cast<size_t>(trial % 4);
        auto c = random_circuit(n, 20, rng);
        auto input = random_state(n, rng);
        for (auto k : kEngines) {
            auto r = run_engine(k, c, input, rng, checked());
            ASSERT_GE(r.fidelity_vs_oracle, 1 - 1e-9) << engine_name(k) << "\n" << c.render();
            ASSERT_TRUE(mbqc::testing::same_up_to_phase(r.final_state, oracle_apply(c, input)));
            ASSERT_EQ(r.per_gate_transcripts.size(), c.length());
        }
    }
}

TEST(engines, frame_engine_with_published_table_can_diverge) {
    auto rng = mbqc::testing::test_rng(51);
    Circuit c{1, {Gate::t(0)}};
    EngineOptions o;
    o.table = &Table1::as_published();
    // T with a trivial frame hits row (I, n); rows n=0 and n=2 are wrong half the time.
    size_t bad = 0;
    for (int trial = 0; trial < 200; trial++) {
        auto r = run_frame(c, random_state(1, rng), rng, o);
        bad += r.fidelity_vs_oracle < 1 - 1e-9;
    }
    ASSERT_GT(bad, 10u);
    ASSERT_LT(bad, 100u);
}

TEST(engines, nielsen_lucky_first_attempt) {
    Circuit c{1, {Gate::h(0)}};
    ScriptedOutcomes src({2, 2});
    auto r = run_nielsen(c, StateVector::basis(1, 0), src);
    ASSERT_EQ(r.total_gadget_calls, 1u);
    ASSERT_EQ(r.corrective_gadget_calls, 0u);
    ASSERT_FALSE(r.final_frame.has_value());
    const double h = 1 / std::sqrt(2.0);
    ASSERT_TRUE(mbqc::testing::same_up_to_phase(r.final_state, StateVector::from_amplitudes({h, h})));
}

TEST(engines, frame_t_on_plus_trivial_branch) {
    // T on |+> with an identity frame; pick the branch with r1 = r2 = +1.
    const double h = 1 / std::sqrt(2.0);
    auto plus = StateVector::from_amplitudes({h, h});
    Circuit c{1, {Gate::t(0)}};
    bool found = false;
    for (size_t n = 0; n < 4 && !found; n++) {
        ScriptedOutcomes src({n, 0, 0});
        auto r = run_frame(c, plus, src, checked());
        const auto &t = r.per_gate_transcripts[0].gadget_transcripts[0];
        if (t[1] != 1 || t[2] != 1) {
            continue;
        }
        found = true;
        ASSERT_EQ(r.final_frame->letters[0], PauliLetter::I);
        ASSERT_TRUE(mbqc::testing::same_up_to_phase(r.final_state, apply_unitary(t_matrix(), plus, {0})));
    }
    ASSERT_TRUE(found);
}

TEST(engines, postponed_example_accumulates_the_realized_operator) {
    auto rng = mbqc::testing::test_rng(65);
    Circuit c{2, {Gate::cnot(0, 1), Gate::h(0)}};
    for (int trial = 0; trial < 10; trial++) {
        auto r = run_postponed(c, random_state(2, rng), rng);
        const auto &cnot_t = r.per_gate_transcripts[0].gadget_transcripts[0];
        const auto &h_t = r.per_gate_transcripts[1].gadget_transcripts[0];
        Matrix pre = kron(letter_matrix(letter_from_index(cnot_t[0])), letter_matrix(letter_from_index(cnot_t[1])));
        Matrix hk = h_matrix() * letter_matrix(letter_from_index(h_t[0] ^ h_t[1]));
        Matrix expected = kron(hk, Matrix::identity(2)) * cnot_matrix() * pre;
        auto ratio = pauli_up_to_scalar(r.postponement->u_simul * expected.adjoint());
        ASSERT_TRUE(ratio.has_value());
        ASSERT_TRUE(ratio->without_phase().is_identity_up_to_phase());
    }
}

TEST(engines, postponed_empty_circuit) {
    auto rng = mbqc::testing::test_rng(66);
    auto r = run_postponed(Circuit{2, {}}, random_state(2, rng), rng);
    ASSERT_EQ(r.total_gadget_calls, 0u);
    ASSERT_TRUE(mbqc::testing::matrices_near(r.postponement->c_u, Matrix::identity(4)));
}

TEST(engines, gadget_call_counts) {
    auto rng = mbqc::testing::test_rng(52);
    auto c = random_circuit(3, 25, rng);
    auto input = random_state(3, rng);
    auto frame = run_frame(c, input, rng);
    auto post = run_postponed(c, input, rng);
    auto niel = run_nielsen(c, input, rng);
    ASSERT_EQ(frame.total_gadget_calls, c.length());
    ASSERT_EQ(frame.corrective_gadget_calls, 0u);
    ASSERT_EQ(post.total_gadget_calls, c.length());
    ASSERT_EQ(post.corrective_gadget_calls, 0u);
    ASSERT_EQ(niel.total_gadget_calls, c.length() + niel.corrective_gadget_calls);
    size_t recorded = 0;
    for (const auto &g : niel.per_gate_transcripts) {
        recorded += g.gadget_transcripts.size();
    }
    ASSERT_EQ(recorded, niel.total_gadget_calls);
}

TEST(engines, nielsen_loop_stops_when_outcomes_agree) {
    auto rng = mbqc::testing::test_rng(53);
    for (int trial = 0; trial < 50; trial++) {
        auto u = random_single_qubit_unitary(rng);
        auto phi = random_state(1, rng);
        auto loop = nielsen_simulate_gate(u, phi, 0, rng);
        for (size_t k = 0; k + 1 < loop.transcripts.size(); k++) {
            ASSERT_NE(loop.transcripts[k][0], loop.transcripts[k][1]);
        }
        ASSERT_EQ(loop.transcripts.back()[0], loop.transcripts.back()[1]);
        ASSERT_TRUE(mbqc::testing::same_up_to_phase(loop.state, apply_unitary(u, phi, {0})));
    }
}

TEST(engines, nielsen_loop_survives_long_failure_runs) {
    // Force 80 failed attempts before agreeing outcomes.
    std::vector<size_t> script;
    for (int k = 0; k < 80; k++) {
        script.push_back(0);
        script.push_back(1);
    }
    script.push_back(2);
    script.push_back(2);
    auto rng = mbqc::testing::test_rng(64);
    Matrix u = random_single_qubit_unitary(rng);
    auto phi = random_state(1, rng);
    ScriptedOutcomes src(script);
    auto loop = nielsen_simulate_gate(u, phi, 0, src);
    ASSERT_EQ(loop.transcripts.size(), 81u);
    ASSERT_TRUE(mbqc::testing::same_up_to_phase(loop.state, apply_unitary(u, phi, {0})));
}

TEST(engines, nielsen_mean_attempts_per_gate) {
    auto stats = termination_stats(20000, 99);
    ASSERT_NEAR(stats.mean_attempts(), 4.0, 0.1);
    ASSERT_NEAR(stats.success_rate(), 0.25, 0.01);
    ASSERT_EQ(stats.rows.front().k, 0);
    ASSERT_DOUBLE_EQ(stats.rows.front().empirical_tail, 1.0);
    for (const auto &row : stats.rows) {
        ASSERT_LE(std::abs(row.empirical_tail - row.model_tail), 4 * row.stderr_ + 1e-12) << "k=" << row.k;
    }
}

TEST(engines, termination_tail_values) {
    ASSERT_DOUBLE_EQ(termination_tail(0), 1.0);
    ASSERT_DOUBLE_EQ(termination_tail(1), 0.75);
    ASSERT_DOUBLE_EQ(termination_tail(4), 0.31640625);
    ASSERT_THROW(termination_tail(-1), std::invalid_argument);
    ASSERT_DOUBLE_EQ(TerminationModel{}.mean_attempts(), 4.0);
}

TEST(engines, postponement_matrices) {
    auto rng = mbqc::testing::test_rng(54);
    for (int trial = 0; trial < 10; trial++) {
        auto c = random_circuit(2, 10, rng);
        auto r = run_postponed(c, random_state(2, rng), rng);
        ASSERT_TRUE(r.postponement.has_value());
        const auto &p = *r.postponement;
        ASSERT_TRUE(p.u_simul.is_unitary());
        ASSERT_TRUE(p.c_u.is_unitary());
        ASSERT_TRUE(mbqc::testing::matrices_near(p.c_u * p.u_simul, p.u, 1e-9));
    }
}

TEST(engines, postponement_correction_is_pauli_for_clifford_circuits) {
    auto rng = mbqc::testing::test_rng(55);
    for (int trial = 0; trial < 10; trial++) {
        auto c = clifford_circuit(3, 12, rng);
        auto r = run_postponed(c, random_state(3, rng), rng);
        ASSERT_TRUE(pauli_up_to_scalar(r.postponement->c_u).has_value());
    }
    // With a T gate somewhere the correction is generally not Pauli.
    Circuit t{1, {Gate::h(0), Gate::t(0), Gate::h(0)}};
    bool saw_non_pauli = false;
    for (int trial = 0; trial < 40 && !saw_non_pauli; trial++) {
        auto r = run_postponed(t, random_state(1, rng), rng);
        saw_non_pauli = !pauli_up_to_scalar(r.postponement->c_u).has_value();
    }
    ASSERT_TRUE(saw_non_pauli);
}

TEST(engines, postponed_rejects_wide_registers) {
    auto rng = mbqc::testing::test_rng(56);
    Circuit c{7, {Gate::h(0)}};
    ASSERT_THROW(run_postponed(c, StateVector::basis(7, 0), rng), std::invalid_argument);
    // The other engines still work.
    ASSERT_GE(run_frame(c, StateVector::basis(7, 0), rng).fidelity_vs_oracle, 1 - 1e-9);
}

TEST(engines, frame_report_mode_keeps_the_frame_unapplied) {
    auto rng = mbqc::testing::test_rng(57);
    for (int trial = 0; trial < 20; trial++) {
        auto c = random_circuit(3, 15, rng);
        auto input = random_state(3, rng);
        EngineOptions o;
        o.finalize = FinalizeMode::Report;
        auto r = run_frame(c, input, rng, o);
        ASSERT_TRUE(r.final_frame.has_value());
        ASSERT_GE(r.fidelity_vs_oracle, 1 - 1e-9);
        ASSERT_TRUE(mbqc::testing::same_up_to_phase(apply_frame(*r.final_frame, r.final_state), oracle_apply(c, input)));
    }
}

TEST(engines, frame_engine_is_deterministic_per_gate) {
    // One gadget per gate no matter which branches occur.
    auto rng = mbqc::testing::test_rng(58);
    auto c = random_circuit(2, 8, rng);
    auto input = random_state(2, rng);
    for (uint64_t seed = 0; seed < 20; seed++) {
        RandomSource src(seed);
        auto r = run_frame(c, input, src, checked());
        ASSERT_EQ(r.total_gadget_calls, c.length());
        for (const auto &g : r.per_gate_transcripts) {
            ASSERT_EQ(g.gadget_transcripts.size(), 1u);
        }
    }
}

TEST(engines, reinterpret_outcomes_examples) {
    std::vector<int> one{1};
    ASSERT_EQ(reinterpret_outcomes(PauliOperator::from_str("Z"), one), std::vector<int>{1});
    ASSERT_EQ(reinterpret_outcomes(PauliOperator::from_str("X"), one), std::vector<int>{0});
    std::vector<int> bits{0, 1, 1, 0};
    ASSERT_EQ(reinterpret_outcomes(PauliOperator::from_str("-iXYZI"), bits), (std::vector<int>{1, 0, 1, 0}));
    ASSERT_THROW(reinterpret_outcomes(PauliOperator::from_str("XX"), one), std::invalid_argument);
}

TEST(engines, reinterpreted_distribution_matches_oracle) {
    auto rng = mbqc::testing::test_rng(59);
    for (int trial = 0; trial < 20; trial++) {
        auto c = random_circuit(3, 15, rng);
        auto input = random_state(3, rng);
        EngineOptions o;
        o.finalize = FinalizeMode::Report;
        auto r = run_frame(c, input, rng, o);
        auto oracle = oracle_apply(c, input);
        for (size_t raw = 0; raw < 8; raw++) {
            std::vector<int> bits{int(raw >> 2 & 1), int(raw >> 1 & 1), int(raw & 1)};
            auto fixed = reinterpret_outcomes(*r.final_frame, bits);
            size_t idx = static_cast<size_t>(fixed[0] << 2 | fixed[1] << 1 | fixed[2]);
            ASSERT_NEAR(std::norm(r.final_state[raw]), std::norm(oracle[idx]), 1e-9);
        }
    }
}

TEST(engines, simulate_trials_is_reproducible) {
    auto rng = mbqc::testing::test_rng(60);
    auto c = random_circuit(2, 10, rng);
    for (auto k : kEngines) {
        auto a = simulate_trials(k, c, {}, 1234, 5);
        auto b = simulate_trials(k, c, {}, 1234, 4);
        for (size_t t = 0; t < 4; t++) {
            ASSERT_EQ(report_to_json(a[t]).dump(), report_to_json(b[t]).dump());
        }
        auto other = simulate_trials(k, c, {}, 1235, 1);
        if (k != EngineKind::Postponed) {
            // Different seeds should almost surely give different outcome records.
            ASSERT_NE(report_to_json(a[0])["per_gate_transcripts"], report_to_json(other[0])["per_gate_transcripts"]);
        }
    }
}

TEST(engines, input_spec) {
    auto rng = mbqc::testing::test_rng(61);
    ASSERT_TRUE(InputSpec::parse("random").is_random());
    auto bits = InputSpec::parse("101");
    ASSERT_EQ(bits.str(), "101");
    ASSERT_TRUE(mbqc::testing::states_near(bits.make(3, rng), {0, 0, 0, 0, 0, 1, 0, 0}));
    ASSERT_THROW(bits.make(2, rng), std::invalid_argument);
    ASSERT_THROW(InputSpec::parse("12"), std::invalid_argument);
    ASSERT_THROW(InputSpec::parse(""), std::invalid_argument);
}

TEST(engines, compare_costs_table) {
    auto rng = mbqc::testing::test_rng(62);
    auto c = random_circuit(2, 12, rng);
    auto t = compare_costs(c, 30, 5);
    ASSERT_EQ(t.rows.size(), 90u);
    ASSERT_DOUBLE_EQ(t.summary("frame").mean, 12.0);
    ASSERT_DOUBLE_EQ(t.summary("frame").variance, 0.0);
    ASSERT_DOUBLE_EQ(t.summary("postponed").mean, 12.0);
    ASSERT_GT(t.summary("nielsen").mean, 12.0);
    ASSERT_LE(t.summary("nielsen").p50, t.summary("nielsen").p90);
    ASSERT_LE(t.summary("nielsen").p90, t.summary("nielsen").max);
    for (const auto &row : t.rows) {
        ASSERT_GE(row.fidelity, 1 - 1e-9);
    }
    auto csv = cost_table_csv(t);
    ASSERT_EQ(csv.rfind("engine,circuit_len,trial,gadget_calls,corrective_calls,fidelity\n", 0), 0u);

    Circuit wide{7, {Gate::h(0), Gate::t(6)}};
    auto w = compare_costs(wide, 2, 5, InputSpec::parse("0000000"));
    ASSERT_THROW(w.summary("postponed"), std::out_of_range);
    ASSERT_THROW(compare_costs(c, 0, 5), std::invalid_argument);
}

TEST(engines, report_json_fields) {
    Circuit c{2, {Gate::h(0), Gate::cnot(0, 1), Gate::t(1)}};
    auto r = simulate_trials(EngineKind::Frame, c, InputSpec::parse("00"), 77, 1)[0];
    auto j = report_to_json(r);
    for (const char *key : {"schema_version", "artifact_version", "engine", "seed", "trial", "total_gadget_calls",
                            "corrective_gadget_calls", "per_gate_transcripts", "final_frame", "fidelity_vs_oracle"}) {
        ASSERT_TRUE(j.contains(key)) << key;
    }
    ASSERT_EQ(j["seed"], 77);
    ASSERT_EQ(j["per_gate_transcripts"][2]["gate"], "T 1");
    ASSERT_EQ(j["per_gate_transcripts"][2]["gadgets"][0].size(), 3u);
    auto n = report_to_json(simulate_trials(EngineKind::Nielsen, c, InputSpec::parse("00"), 77, 1)[0]);
    ASSERT_TRUE(n["final_frame"].is_null());
}

TEST(engines, stats_csv_shape) {
    auto s = termination_stats(100, 3, 5);
    auto csv = termination_stats_csv(s);
    ASSERT_EQ(csv.rfind("# success_rate=", 0), 0u);
    ASSERT_NE(csv.find("\nk,empirical_tail,model_tail,stderr\n"), std::string::npos);
    ASSERT_EQ(s.rows.size(), 6u);
}
