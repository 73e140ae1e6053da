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

#include "mbqc/report.h"

#include <iomanip>
#include <sstream>

namespace mbqc {

namespace {

std::string fmt_double(double x) {
    std::ostringstream ss;
    ss << std::setprecision(17) << x;
    return ss.str();
}

}  // namespace

nlohmann::json report_to_json(const RunReport &r) {
    nlohmann::json transcripts = nlohmann::json::array();
    for (const auto &g : r.per_gate_transcripts) {
        transcripts.push_back({{"gate", g.gate}, {"gadgets", g.gadget_transcripts}});
    }
    return nlohmann::json{
        {"schema_version", kReportSchemaVersion},
        {"artifact_version", kArtifactVersion},
        {"engine", r.engine},
        {"seed", r.seed},
        {"trial", r.trial},
        {"total_gadget_calls", r.total_gadget_calls},
        {"corrective_gadget_calls", r.corrective_gadget_calls},
        {"per_gate_transcripts", transcripts},
        {"final_frame", r.final_frame ? nlohmann::json(r.final_frame->compact_str()) : nlohmann::json(nullptr)},
        {"fidelity_vs_oracle", r.fidelity_vs_oracle},
    };
}

std::string cost_table_csv(const CostTable &t) {
    std::ostringstream ss;
    ss << "engine,circuit_len,trial,gadget_calls,corrective_calls,fidelity\n";
    for (const auto &row : t.rows) {
        ss << row.engine << ',' << row.circuit_len << ',' << row.trial << ',' << row.gadget_calls << ','
           << row.corrective_calls << ',' << fmt_double(row.fidelity) << '\n';
    }
    return ss.str();
}

std::string termination_stats_csv(const TerminationStats &s) {
    std::ostringstream ss;
    ss << "# success_rate=" << fmt_double(s.success_rate()) << " gates=" << s.gates << " attempts=" << s.attempts
       << '\n';
    ss << "k,empirical_tail,model_tail,stderr\n";
    for (const auto &row : s.rows) {
        ss << row.k << ',' << fmt_double(row.empirical_tail) << ',' << fmt_double(row.model_tail) << ','
           << fmt_double(row.stderr_) << '\n';
    }
    return ss.str();
}

}  // namespace mbqc
