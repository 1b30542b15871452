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

#include "vavqe/cost_model.hpp"

#include <stdexcept>
#include <utility>

namespace vavqe {

TaskCostModel::TaskCostModel(TaskSpec task, NoiseModel noise)
    : task_(std::move(task)), noise_(noise) {}

int TaskCostModel::param_count(const AnsatzPath &path) const {
    return path.param_count();
}

double TaskCostModel::cost(const AnsatzPath &path,
                           const ParameterVector &params,
                           QuantumCostLedger &ledger) const {
    return vavqe::cost(task_, path, params, noise_, ledger);
}

double TaskCostModel::cost_uncounted(const AnsatzPath &path,
                                     const ParameterVector &params) const {
    return vavqe::cost_uncounted(task_, path, params, noise_);
}

std::vector<double> TaskCostModel::gradient(const AnsatzPath &path,
                                            const ParameterVector &params,
                                            QuantumCostLedger &ledger) const {
    return vavqe::gradient(task_, path, params, noise_, ledger);
}

LineSearchResult line_search_step(const CostModel &model,
                                  const AnsatzPath &path,
                                  const ParameterVector &params,
                                  const std::vector<double> &grad,
                                  double current_cost,
                                  const LineSearchConfig &cfg,
                                  QuantumCostLedger &ledger) {
    if (grad.size() != params.size())
        throw std::invalid_argument("gradient size does not match params");
    double g2 = 0.0;
    for (double g : grad)
        g2 += g * g;

    LineSearchResult r;
    r.params = params;
    r.cost = current_cost;

    double alpha = cfg.alpha0;
    ParameterVector trial(params.size());
    for (int k = 0; k < cfg.max_backtracks; ++k, alpha *= cfg.shrink) {
        for (size_t i = 0; i < params.size(); ++i)
            trial[i] = params[i] - alpha * grad[i];
        double c = model.cost_uncounted(path, trial);
        ledger.record_armijo_trial();
        ++r.trials;
        if (c <= current_cost - cfg.c1 * alpha * g2) {
            r.params = trial;
            r.alpha = alpha;
            r.cost = c;
            return r;
        }
    }
    return r;  // exhausted: alpha = 0, point unchanged
}

} // namespace vavqe
