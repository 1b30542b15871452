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
#include "vavqe/record.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace vavqe {

namespace {

using nlohmann::json;

json optional_to_json(const std::optional<double> &value) {
    if (value.has_value()) {
        return json(*value);
    }
    return json(nullptr);
}

std::optional<double> optional_from_json(const json &value) {
    if (value.is_null()) {
        return std::nullopt;
    }
    return value.get<double>();
}

} // namespace

std::string record_to_json(const RunRecord &record) {
    json trace = json::array();
    for (const TracePoint &point : record.trace) {
        trace.push_back(json{{"quantum_cost", point.quantum_cost},
                             {"best_cost", point.best_cost},
                             {"stage", point.stage}});
    }
    json doc{
        {"method", record.method},
        {"task_name", record.task_name},
        {"n_qubits", record.n_qubits},
        {"seed", record.seed},
        {"final_path", record.final_path},
        {"final_params", record.final_params},
        {"final_cost", record.final_cost},
        {"exact_energy", optional_to_json(record.exact_energy)},
        {"absolute_error", optional_to_json(record.absolute_error)},
        {"quantum_cost_total", record.quantum_cost_total},
        {"stage_costs", record.stage_costs},
        {"termination_reasons", record.termination_reasons},
        {"sampler_exact", record.sampler_exact},
        {"ledger_convention", record.ledger_convention},
        {"trace", trace},
    };
    return doc.dump(2) + "\n";
}

RunRecord record_from_json(const std::string &text) {
    json doc = json::parse(text);
    RunRecord record;
    record.method = doc.at("method").get<std::string>();
    record.task_name = doc.at("task_name").get<std::string>();
    record.n_qubits = doc.at("n_qubits").get<int>();
    record.seed = doc.at("seed").get<std::uint64_t>();
    record.final_path = doc.at("final_path").get<std::string>();
    record.final_params = doc.at("final_params").get<ParameterVector>();
    record.final_cost = doc.at("final_cost").get<double>();
    record.exact_energy = optional_from_json(doc.at("exact_energy"));
    record.absolute_error = optional_from_json(doc.at("absolute_error"));
    record.quantum_cost_total = doc.at("quantum_cost_total").get<long long>();
    record.stage_costs =
        doc.at("stage_costs").get<std::map<std::string, long long>>();
    record.termination_reasons =
        doc.at("termination_reasons")
            .get<std::map<std::string, std::string>>();
    record.sampler_exact = doc.at("sampler_exact").get<bool>();
    record.ledger_convention = doc.at("ledger_convention").get<std::string>();
    for (const json &point : doc.at("trace")) {
        TracePoint parsed;
        parsed.quantum_cost = point.at("quantum_cost").get<long long>();
        parsed.best_cost = point.at("best_cost").get<double>();
        parsed.stage = point.at("stage").get<std::string>();
        record.trace.push_back(std::move(parsed));
    }
    return record;
}

void write_trace_csv(const RunRecord &record, std::ostream &out) {
    out << "quantum_cost,best_cost_so_far,stage\n";
    char buffer[64];
    for (const TracePoint &point : record.trace) {
        std::snprintf(buffer, sizeof(buffer), "%.17g", point.best_cost);
        out << point.quantum_cost << ',' << buffer << ',' << point.stage
            << '\n';
    }
}

} // namespace vavqe
