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
//
// Closed-form cost model for driver tests: a smooth trigonometric bowl
// per parameter plus a path-dependent offset, with exact gradients and
// the standard ledger charges. No simulator involved, so tests stay
// fast and every value is hand-checkable.
#pragma once

#include <cmath>
#include <vector>

#include "vavqe/cost_model.hpp"
#include "vavqe/space.hpp"

namespace vavqe::testing {

/// cost(path, theta) = offset(path) + sum_i (1 - cos(theta_i - target));
/// offset(path) = 0.05 * sum_l |id_l - 1|. Global minimum: the all-ones
/// path with every parameter at `target`.
class StubModel : public CostModel {
  public:
    explicit StubModel(const AnsatzSpace &space, double target = 0.5)
        : space_(space), target_(target) {}

    int n_qubits() const override { return space_.n_qubits(); }
    int param_count(const AnsatzPath &path) const override {
        return space_.path_param_count(path);
    }
    double cost(const AnsatzPath &path, const ParameterVector &params,
                QuantumCostLedger &ledger) const override {
        ledger.record_cost_eval();
        ++cost_calls;
        return cost_uncounted(path, params);
    }
    double cost_uncounted(const AnsatzPath &path,
                          const ParameterVector &params) const override {
        double c = 0.0;
        for (StateId id : path.layers)
            c += 0.05 * std::abs(static_cast<double>(id) - 1.0);
        for (double t : params)
            c += 1.0 - std::cos(t - target_);
        return c;
    }
    std::vector<double> gradient(const AnsatzPath &path,
                                 const ParameterVector &params,
                                 QuantumCostLedger &ledger) const override {
        (void)path;
        ledger.record_gradient(static_cast<int>(params.size()));
        ++gradient_calls;
        std::vector<double> g(params.size());
        for (size_t i = 0; i < params.size(); ++i)
            g[i] = std::sin(params[i] - target_);
        return g;
    }

    mutable long long cost_calls = 0;
    mutable long long gradient_calls = 0;

  private:
    const AnsatzSpace &space_;
    double target_;
};

} // namespace vavqe::testing
