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
 * @file cost_model.hpp
 * Cost-model interface: what the optimizers need to know about a cost
 * function, independent of whether it is a single task or a parameterized
 * family with encoded circuit parameters.
 */
#pragma once

#include <vector>

#include "vavqe/cost.hpp"
#include "vavqe/optimize.hpp"

namespace vavqe {

/// Everything the training stages may ask of a cost function. Each model
/// owns its ledger policy: cost() and gradient() charge the ledger
/// according to the convention the run record declares.
class CostModel {
  public:
    virtual ~CostModel() = default;

    virtual int n_qubits() const = 0;

    /// Trainable parameter count of a path under this model.
    virtual int param_count(const AnsatzPath &path) const = 0;

    virtual double cost(const AnsatzPath &path, const ParameterVector &params,
                        QuantumCostLedger &ledger) const = 0;

    /// Same value, no ledger charge; building block for shifted
    /// evaluations and backtracking trials.
    virtual double cost_uncounted(const AnsatzPath &path,
                                  const ParameterVector &params) const = 0;

    virtual std::vector<double> gradient(const AnsatzPath &path,
                                         const ParameterVector &params,
                                         QuantumCostLedger &ledger) const = 0;
};

/// A single task under a fixed noise model.
class TaskCostModel final : public CostModel {
  public:
    TaskCostModel(TaskSpec task, NoiseModel noise);

    int n_qubits() const override { return task_.n_qubits; }
    int param_count(const AnsatzPath &path) const override;
    double cost(const AnsatzPath &path, const ParameterVector &params,
                QuantumCostLedger &ledger) const override;
    double cost_uncounted(const AnsatzPath &path,
                          const ParameterVector &params) const override;
    std::vector<double> gradient(const AnsatzPath &path,
                                 const ParameterVector &params,
                                 QuantumCostLedger &ledger) const override;

    const TaskSpec &task() const { return task_; }
    const NoiseModel &noise() const { return noise_; }

  private:
    TaskSpec task_;
    NoiseModel noise_;
};

/// One descent step against any cost model; identical schedule and ledger
/// charges as the task-specific overload.
LineSearchResult line_search_step(const CostModel &model,
                                  const AnsatzPath &path,
                                  const ParameterVector &params,
                                  const std::vector<double> &grad,
                                  double current_cost,
                                  const LineSearchConfig &cfg,
                                  QuantumCostLedger &ledger);

} // namespace vavqe
