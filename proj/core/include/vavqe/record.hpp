// Copyright 2026 The vavqe developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file record.hpp
 * Run records: everything needed to audit one optimization run, with a
 * JSON document form and a CSV trace for plotting.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vavqe/path.hpp"

namespace vavqe {

/// One point of the cost-versus-quantum-cost curve. quantum_cost is the
/// ledger total when the point was recorded; best_cost is the running
/// minimum, so the series is monotone in both senses.
struct TracePoint {
    long long quantum_cost = 0;
    double best_cost = 0.0;
    std::string stage;
};

struct RunRecord {
    std::string method;     // gsa, hea, rnd, meta-gsa, meta-hea
    std::string task_name;
    int n_qubits = 0;
    std::uint64_t seed = 0;

    std::string final_path;  // serialized, one layer per line
    ParameterVector final_params;
    double final_cost = 0.0;
    std::optional<double> exact_energy;
    std::optional<double> absolute_error;

    long long quantum_cost_total = 0;
    std::map<std::string, long long> stage_costs;
    std::map<std::string, std::string> termination_reasons;
    bool sampler_exact = true;
    /// Declared so any recount of reported numbers can use the same
    /// accounting.
    std::string ledger_convention =
        "cost evaluation = 1; parameter-shift gradient = 2 per parameter; "
        "every backtracking trial = 1";

    std::vector<TracePoint> trace;
};

/// Deterministic JSON document; numbers round-trip bit-exactly.
std::string record_to_json(const RunRecord &record);
RunRecord record_from_json(const std::string &text);

/// Columns: quantum_cost, best_cost_so_far, stage.
void write_trace_csv(const RunRecord &record, std::ostream &out);

} // namespace vavqe
