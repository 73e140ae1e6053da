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

#ifndef MBQC_REPORT_H
#define MBQC_REPORT_H

#include <string>

#include "json.hpp"
#include "mbqc/engines.h"

namespace mbqc {

inline constexpr const char *kArtifactVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

/// Versioned JSON document for one run.
nlohmann::json report_to_json(const RunReport &r);

/// Header `engine,circuit_len,trial,gadget_calls,corrective_calls,fidelity`.
std::string cost_table_csv(const CostTable &t);

/// A `# success_rate=...` comment line, then `k,empirical_tail,model_tail,stderr`.
std::string termination_stats_csv(const TerminationStats &s);

}  // namespace mbqc

#endif
