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

#include "mbqc/cli.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "mbqc/circuit.h"
#include "mbqc/engines.h"
#include "mbqc/report.h"
#include "mbqc/table1.h"
#include "mbqc/verify.h"

namespace mbqc {

namespace {

constexpr double kFidelityTolerance = 1e-9;

struct CliConfig {
    std::string circuit_path;
    std::string engine = "frame";
    std::string input = "random";
    std::optional<uint64_t> seed;
    size_t trials = 1;
    std::string finalize = "apply";
    std::string out_path;
    std::string table_path;
    size_t states = 20;
    int max_k = 10;
    bool verify_steps = false;
};

Table1 resolve_table(const std::string &name) {
    if (name == "builtin:published") {
        return Table1::as_published();
    }
    if (name == "builtin:errata") {
        return Table1::with_errata();
    }
    return Table1::load(name);
}

uint64_t resolve_seed(const std::optional<uint64_t> &flag) {
    if (flag) {
        return *flag;
    }
    if (const char *env = std::getenv("MBQC_SEED"); env && *env) {
        try {
            size_t used = 0;
            uint64_t v = std::stoull(env, &used);
            if (used == std::string(env).size()) {
                return v;
            }
        } catch (const std::exception &) {
        }
        throw std::invalid_argument(std::string("MBQC_SEED is not an unsigned integer: '") + env + "'.");
    }
    std::random_device rd;
    return (static_cast<uint64_t>(rd()) << 32) ^ rd();
}

/// Writes to --out when given, else to `out`.
class Sink {
   public:
    Sink(const std::string &path, std::ostream &fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw std::runtime_error("Cannot open output file '" + path + "'.");
            }
        }
        stream_ = path.empty() ? &fallback : &file_;
    }
    std::ostream &stream() { return *stream_; }

   private:
    std::ofstream file_;
    std::ostream *stream_;
};

int cmd_simulate(const CliConfig &cfg, std::ostream &out, std::ostream &err) {
    Circuit circuit = load_circuit(cfg.circuit_path);
    EngineKind kind = parse_engine(cfg.engine);
    InputSpec input = InputSpec::parse(cfg.input);
    if (!input.is_random() && input.bits.size() != circuit.num_qubits) {
        throw std::invalid_argument("--input has the wrong number of bits for this circuit.");
    }
    std::optional<Table1> table;
    EngineOptions options;
    options.finalize = parse_finalize(cfg.finalize);
    options.verify_steps = cfg.verify_steps;
    if (!cfg.table_path.empty()) {
        table = resolve_table(cfg.table_path);
        options.table = &*table;
    }
    uint64_t seed = resolve_seed(cfg.seed);

    Sink sink(cfg.out_path, out);
    bool ok = true;
    for (const auto &r : simulate_trials(kind, circuit, input, seed, cfg.trials, options)) {
        sink.stream() << report_to_json(r).dump() << '\n';
        ok = ok && r.fidelity_vs_oracle >= 1 - kFidelityTolerance;
    }
    if (!ok) {
        err << "error: at least one run fell below fidelity 1 - " << kFidelityTolerance << ".\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_verify_table1(const CliConfig &cfg, std::ostream &out, std::ostream &err) {
    Table1 table = resolve_table(cfg.table_path.empty() ? "builtin:published" : cfg.table_path);
    if (cfg.states < 1) {
        throw std::invalid_argument("--states must be at least 1.");
    }
    uint64_t seed = resolve_seed(cfg.seed);
    Table1Verification v = verify_table1(table, cfg.states, seed);
    auto doc = verification_to_json(v, table);
    doc["table"] = cfg.table_path.empty() ? "builtin:published" : cfg.table_path;

    Sink sink(cfg.out_path, out);
    sink.stream() << doc.dump(2) << '\n';
    if (!v.all_pass()) {
        for (const auto &f : v.failures()) {
            err << "FAIL sigma_p=s" << index_of(f.sigma_p) << " n=" << f.n << " r1=" << f.r1 << " r2=" << f.r2
                << ": expected " << letter_char(f.expected) << ", realized "
                << (f.realized ? std::string(1, letter_char(*f.realized)) : std::string("not Pauli")) << '\n';
        }
        for (const auto &[p, n] : v.failing_rows()) {
            err << "FAIL row sigma_p=s" << index_of(p) << " n=" << n << '\n';
        }
        return kExitCheckFailed;
    }
    err << "PASS " << v.branches.size() << " branches\n";
    return kExitOk;
}

int cmd_stats(const CliConfig &cfg, std::ostream &out, std::ostream &) {
    if (cfg.trials < 1) {
        throw std::invalid_argument("--trials must be at least 1.");
    }
    uint64_t seed = resolve_seed(cfg.seed);
    TerminationStats stats = termination_stats(cfg.trials, seed, cfg.max_k);
    Sink sink(cfg.out_path, out);
    sink.stream() << "# seed=" << seed << '\n' << termination_stats_csv(stats);
    return kExitOk;
}

int cmd_compare(const CliConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.trials < 1) {
        throw std::invalid_argument("--trials must be at least 1.");
    }
    Circuit circuit = load_circuit(cfg.circuit_path);
    InputSpec input = InputSpec::parse(cfg.input);
    uint64_t seed = resolve_seed(cfg.seed);
    CostTable table = compare_costs(circuit, cfg.trials, seed, input);

    Sink sink(cfg.out_path, out);
    sink.stream() << "# seed=" << seed << '\n' << cost_table_csv(table);
    for (const auto &s : table.summaries) {
        err << s.engine << ": mean=" << s.mean << " variance=" << s.variance << " p50=" << s.p50 << " p90=" << s.p90
            << " max=" << s.max << '\n';
    }
    bool ok = true;
    for (const auto &row : table.rows) {
        ok = ok && row.fidelity >= 1 - kFidelityTolerance;
    }
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Measurement-based simulation of {H, T, CNOT} circuits with Pauli-frame termination."};
    app.require_subcommand(1);
    CliConfig cfg;

    auto add_seed = [&](CLI::App *sub) {
        sub->add_option("--seed", cfg.seed, "64-bit seed (falls back to MBQC_SEED, then to a random seed)");
    };
    auto add_out = [&](CLI::App *sub) { sub->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout"); };

    auto *simulate = app.add_subcommand("simulate", "Run an engine on a circuit; one JSON report per line");
    simulate->add_option("--circuit", cfg.circuit_path, "Circuit file (.mbqc)")->required();
    simulate->add_option("--engine", cfg.engine, "nielsen | postponed | frame")
        ->check(CLI::IsMember({"nielsen", "postponed", "frame"}));
    simulate->add_option("--input", cfg.input, "Basis bitstring or 'random'");
    simulate->add_option("--trials", cfg.trials, "Independent runs");
    simulate->add_option("--finalize", cfg.finalize, "apply | report (frame engine)")
        ->check(CLI::IsMember({"apply", "report"}));
    simulate->add_option("--table", cfg.table_path, "Measurement table for adapted T gadgets: a file, builtin:errata (default) or builtin:published");
    simulate->add_flag("--verify-steps", cfg.verify_steps, "Check the register against the oracle after every gate");
    add_seed(simulate);
    add_out(simulate);

    auto *verify = app.add_subcommand("verify-table1", "Exhaustively verify the adapted T measurement table");
    verify->add_option("--table", cfg.table_path, "Table to check: a file, builtin:published (default) or builtin:errata");
    verify->add_option("--states", cfg.states, "Random input states per (sigma_p, n) key");
    add_seed(verify);
    add_out(verify);

    auto *stats = app.add_subcommand("stats", "Termination statistics of the correction loop (CSV)");
    stats->add_option("--trials", cfg.trials, "Number of simulated one-qubit gates");
    stats->add_option("--max-k", cfg.max_k, "Largest k in the tail table");
    add_seed(stats);
    add_out(stats);

    auto *compare = app.add_subcommand("compare", "Gadget-count comparison of the engines (CSV)");
    compare->add_option("--circuit", cfg.circuit_path, "Circuit file (.mbqc)")->required();
    compare->add_option("--trials", cfg.trials, "Runs per engine");
    compare->add_option("--input", cfg.input, "Basis bitstring or 'random'");
    add_seed(compare);
    add_out(compare);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (simulate->parsed()) {
            return cmd_simulate(cfg, out, err);
        }
        if (verify->parsed()) {
            return cmd_verify_table1(cfg, out, err);
        }
        if (stats->parsed()) {
            if (stats->count("--trials") == 0) {
                cfg.trials = 10000;
            }
            return cmd_stats(cfg, out, err);
        }
        if (compare->parsed()) {
            if (compare->count("--trials") == 0) {
                cfg.trials = 100;
            }
            return cmd_compare(cfg, out, err);
        }
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error &e) {
        // Step verification failures.
        err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace mbqc
