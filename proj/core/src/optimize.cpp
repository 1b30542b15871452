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

#include "vavqe/optimize.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vavqe {

std::vector<double> gradient(const TaskSpec &task, const AnsatzPath &path,
                             const ParameterVector &params,
                             const NoiseModel &noise,
                             QuantumCostLedger &ledger) {
    const int m = static_cast<int>(params.size());
    std::vector<double> grad(m);
    ParameterVector shifted = params;
    constexpr double half_pi = std::numbers::pi / 2.0;
    for (int k = 0; k < m; ++k) {
        shifted[k] = params[k] + half_pi;
        double plus = cost_uncounted(task, path, shifted, noise);
        shifted[k] = params[k] - half_pi;
        double minus = cost_uncounted(task, path, shifted, noise);
        shifted[k] = params[k];
        grad[k] = 0.5 * (plus - minus);
    }
    ledger.record_gradient(m);
    return grad;
}

double normalized_gradient_magnitude(const std::vector<double> &grad,
                                     int num_params) {
    if (num_params == 0)
        return 0.0;
    double ss = 0.0;
    for (double g : grad)
        ss += g * g;
    return std::sqrt(ss) / num_params;
}

LineSearchResult line_search_step(const TaskSpec &task, const AnsatzPath &path,
                                  const ParameterVector &params,
                                  const std::vector<double> &grad,
                                  double current_cost,
                                  const LineSearchConfig &cfg,
                                  const NoiseModel &noise,
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
        double c = cost_uncounted(task, path, trial, noise);
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
