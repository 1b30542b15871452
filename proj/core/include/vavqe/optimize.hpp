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
 * @file optimize.hpp
 * Parameter-shift gradients and backtracking line-search descent.
 */
#pragma once

#include <vector>

#include "vavqe/cost.hpp"

namespace vavqe {

/// Backtracking schedule: alpha walks alpha0 * shrink^k until the
/// sufficient-decrease test C(theta - alpha g) <= C(theta) - c1 alpha |g|^2
/// passes or max_backtracks trials are spent.
struct LineSearchConfig {
    double alpha0 = 5.0;
    double c1 = 1e-4;
    double shrink = 0.618;
    int max_backtracks = 40;
};

/// Parameter-shift gradient: d_k C = [C(theta + pi/2 e_k) -
/// C(theta - pi/2 e_k)] / 2. Exact for the Ry/Rz gate set. Charges the
/// ledger one gradient event (2 |theta| evaluations).
std::vector<double> gradient(const TaskSpec &task, const AnsatzPath &path,
                             const ParameterVector &params,
                             const NoiseModel &noise,
                             QuantumCostLedger &ledger);

/// |grad|_2 / num_params; zero-parameter circuits score 0 and therefore
/// always count as fully trained.
double normalized_gradient_magnitude(const std::vector<double> &grad,
                                     int num_params);

struct LineSearchResult {
    ParameterVector params;  // theta - alpha * grad, or theta when alpha = 0
    double alpha = 0.0;
    double cost;             // cost at the returned params
    int trials = 0;          // backtracking evaluations charged
};

/// One descent step from a known (cost, gradient) pair. current_cost must
/// be C(params); passing it in keeps the step free of redundant
/// evaluations. Each trial charges the ledger 1. Exhaustion returns the
/// input point with alpha = 0.
LineSearchResult line_search_step(const TaskSpec &task, const AnsatzPath &path,
                                  const ParameterVector &params,
                                  const std::vector<double> &grad,
                                  double current_cost,
                                  const LineSearchConfig &cfg,
                                  const NoiseModel &noise,
                                  QuantumCostLedger &ledger);

} // namespace vavqe
