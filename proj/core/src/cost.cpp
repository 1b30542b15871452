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

#include "vavqe/cost.hpp"

#include <stdexcept>
#include <utility>

namespace vavqe {

double apply_wrapper(Wrapper w, double value) {
    switch (w) {
    case Wrapper::kIdentity:
        return value;
    }
    throw std::logic_error("unknown wrapper");
}

TaskSpec TaskSpec::ground_state(PauliSum hamiltonian) {
    TaskSpec task;
    task.n_qubits = hamiltonian.n_qubits();
    task.tuples.push_back({std::move(hamiltonian), nullptr});
    return task;
}

long long event_charge(const LedgerEvent &e) {
    switch (e.kind) {
    case LedgerEvent::Kind::kCostEval:
    case LedgerEvent::Kind::kArmijoTrial:
        return 1;
    case LedgerEvent::Kind::kGradient:
        return 2LL * e.num_params;
    }
    return 0;
}

void QuantumCostLedger::charge(LedgerEvent e) {
    long long c = event_charge(e);
    evaluations_ += c;
    stage_totals_[stage_] += c;
    events_.push_back(e);
}

void QuantumCostLedger::record_cost_eval() {
    charge({LedgerEvent::Kind::kCostEval, 0});
}

void QuantumCostLedger::record_gradient(int num_params) {
    charge({LedgerEvent::Kind::kGradient, num_params});
}

void QuantumCostLedger::record_armijo_trial() {
    charge({LedgerEvent::Kind::kArmijoTrial, 0});
}

void QuantumCostLedger::set_stage(std::string stage) {
    stage_ = std::move(stage);
    stage_totals_.try_emplace(stage_, 0);
}

namespace {

double tuple_value(const TaskTuple &t, const AnsatzPath &path,
                   const ParameterVector &params, const NoiseModel &noise) {
    double raw;
    if (!noise.enabled() && !t.input) {
        Statevector psi(t.observable.n_qubits());
        apply_path(psi, path, params);
        raw = psi.expectation(t.observable);
    } else {
        DensityMatrix rho =
            t.input ? *t.input : DensityMatrix(t.observable.n_qubits());
        apply_path(rho, path, params, noise);
        raw = rho.expectation(t.observable);
    }
    return apply_wrapper(t.wrapper, raw);
}

} // namespace

double cost_uncounted(const TaskSpec &task, const AnsatzPath &path,
                      const ParameterVector &params, const NoiseModel &noise) {
    if (task.tuples.empty())
        throw std::invalid_argument("task has no tuples");
    if (static_cast<int>(params.size()) != path.param_count())
        throw std::invalid_argument("parameter count does not match path");
    double total = 0.0;
    for (const TaskTuple &t : task.tuples)
        total += tuple_value(t, path, params, noise);
    return total;
}

double cost(const TaskSpec &task, const AnsatzPath &path,
            const ParameterVector &params, const NoiseModel &noise,
            QuantumCostLedger &ledger) {
    double v = cost_uncounted(task, path, params, noise);
    ledger.record_cost_eval();
    return v;
}

} // namespace vavqe
