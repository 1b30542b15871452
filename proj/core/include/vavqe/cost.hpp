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
 * @file cost.hpp
 * Task definitions, the cost function, and the quantum-cost ledger.
 *
 * The ledger counts full cost-function evaluations, the hardware-budget
 * proxy for every run. Convention, declared in every run record:
 * a plain cost evaluation is 1, a parameter-shift gradient of an
 * m-parameter circuit is 2m, and every backtracking trial is 1.
 */
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "vavqe/circuit.hpp"
#include "vavqe/pauli.hpp"
#include "vavqe/path.hpp"

namespace vavqe {

/// Classical post-processing applied to one expectation value inside the
/// cost sum. Identity covers ground-state search.
enum class Wrapper { kIdentity };

double apply_wrapper(Wrapper w, double value);

/// One (observable, input state, wrapper) tuple of a task. A null input
/// means the computational zero state.
struct TaskTuple {
    PauliSum observable;
    std::shared_ptr<const DensityMatrix> input;
    Wrapper wrapper = Wrapper::kIdentity;
};

/// A training task: cost(path, theta) = sum_i f_i(Tr[O_i U rho_i U+]).
struct TaskSpec {
    int n_qubits = 0;
    std::vector<TaskTuple> tuples;

    /// Single-tuple ground-state task on |0...0>.
    static TaskSpec ground_state(PauliSum hamiltonian);
};

/// Ledger events, enough to recount the total offline.
struct LedgerEvent {
    enum class Kind : uint8_t { kCostEval, kGradient, kArmijoTrial };
    Kind kind;
    int32_t num_params;  // gradient events only, 0 otherwise
};

long long event_charge(const LedgerEvent &e);

/// Monotone counter of cost-function evaluations with an event log and
/// per-stage subtotals. Single writer; the driver serializes updates.
class QuantumCostLedger {
  public:
    long long evaluations() const { return evaluations_; }

    void record_cost_eval();
    void record_gradient(int num_params);
    void record_armijo_trial();

    /// Tags subsequent charges; stage totals feed the run record.
    void set_stage(std::string stage);
    const std::string &stage() const { return stage_; }

    const std::vector<LedgerEvent> &events() const { return events_; }
    const std::map<std::string, long long> &stage_totals() const {
        return stage_totals_;
    }

  private:
    void charge(LedgerEvent e);

    long long evaluations_ = 0;
    std::string stage_ = "unstaged";
    std::vector<LedgerEvent> events_;
    std::map<std::string, long long> stage_totals_;
};

/// Full cost evaluation; charges the ledger exactly 1. Noiseless
/// default-input tuples run on the statevector backend.
double cost(const TaskSpec &task, const AnsatzPath &path,
            const ParameterVector &params, const NoiseModel &noise,
            QuantumCostLedger &ledger);

/// Same evaluation without touching any ledger; building block for the
/// shifted evaluations of a gradient and for backtracking trials.
double cost_uncounted(const TaskSpec &task, const AnsatzPath &path,
                      const ParameterVector &params, const NoiseModel &noise);

} // namespace vavqe
