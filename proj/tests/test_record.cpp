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

#include <sstream>

#include "doctest.h"
#include "vavqe/record.hpp"

using namespace vavqe;

namespace {

RunRecord sample_record() {
    RunRecord r;
    r.method = "gsa";
    r.task_name = "tfim-4";
    r.n_qubits = 4;
    r.seed = 123456789012345ULL;
    r.final_path = "q0:Ry q2:Rz cx:1>2\nq1:Ry\n\n";
    r.final_params = {0.1, 1.0 / 3.0, -0.9986666666666666};
    r.final_cost = -4.758770483143634;
    r.exact_energy = -4.758770483143635;
    r.absolute_error = 1e-15;
    r.quantum_cost_total = 4242;
    r.stage_costs = {{"alternate", 4000}, {"pool", 200}, {"retrain", 42}};
    r.termination_reasons = {{"alternate", "best-stable"},
                             {"pool", "max-iterations"},
                             {"retrain", "converged"}};
    r.sampler_exact = true;
    r.trace = {{100, -3.5, "pool"}, {200, -4.0, "pool"},
               {4242, -4.758770483143634, "retrain"}};
    return r;
}

} // namespace

TEST_CASE("run record JSON round-trips bit-exactly") {
    RunRecord r = sample_record();
    std::string text = record_to_json(r);
    RunRecord back = record_from_json(text);

    CHECK(back.method == r.method);
    CHECK(back.task_name == r.task_name);
    CHECK(back.n_qubits == r.n_qubits);
    CHECK(back.seed == r.seed);
    CHECK(back.final_path == r.final_path);
    REQUIRE(back.final_params.size() == r.final_params.size());
    for (size_t i = 0; i < r.final_params.size(); ++i)
        CHECK(back.final_params[i] == r.final_params[i]);
    CHECK(back.final_cost == r.final_cost);
    REQUIRE(back.exact_energy.has_value());
    CHECK(*back.exact_energy == *r.exact_energy);
    REQUIRE(back.absolute_error.has_value());
    CHECK(*back.absolute_error == *r.absolute_error);
    CHECK(back.quantum_cost_total == r.quantum_cost_total);
    CHECK(back.stage_costs == r.stage_costs);
    CHECK(back.termination_reasons == r.termination_reasons);
    CHECK(back.sampler_exact == r.sampler_exact);
    CHECK(back.ledger_convention == r.ledger_convention);
    REQUIRE(back.trace.size() == r.trace.size());
    for (size_t i = 0; i < r.trace.size(); ++i) {
        CHECK(back.trace[i].quantum_cost == r.trace[i].quantum_cost);
        CHECK(back.trace[i].best_cost == r.trace[i].best_cost);
        CHECK(back.trace[i].stage == r.trace[i].stage);
    }

    // Dump is deterministic: a second pass is byte-identical.
    CHECK(record_to_json(back) == text);
}

TEST_CASE("absent exact energy serializes as null and round-trips") {
    RunRecord r = sample_record();
    r.exact_energy.reset();
    r.absolute_error.reset();
    RunRecord back = record_from_json(record_to_json(r));
    CHECK_FALSE(back.exact_energy.has_value());
    CHECK_FALSE(back.absolute_error.has_value());
}

TEST_CASE("trace CSV has the pinned header and one row per point") {
    RunRecord r = sample_record();
    std::ostringstream out;
    write_trace_csv(r, out);
    CHECK(out.str() ==
          "quantum_cost,best_cost_so_far,stage\n"
          "100,-3.5,pool\n"
          "200,-4,pool\n"
          "4242,-4.7587704831436337,retrain\n");
}

TEST_CASE("malformed record JSON throws") {
    CHECK_THROWS(record_from_json("{"));
    CHECK_THROWS(record_from_json("{}"));  // missing required keys
}
