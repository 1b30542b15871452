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
 * @file gramo.hpp
 * Non-dominated ranking of ansatzes by (cost, normalized gradient
 * magnitude): minimize the first, maximize the second.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "vavqe/path.hpp"

namespace vavqe {

/// A scored individual. Only (cost, grad_mag) enter dominance.
struct ScoredAnsatz {
    AnsatzPath path;
    ParameterVector params;
    double cost = 0.0;
    double grad_mag = 0.0;
};

/// Strict on cost, non-strict on gradient; equal-cost individuals never
/// dominate each other.
bool dominates(const ScoredAnsatz &a, const ScoredAnsatz &b);

/// Fronts hold indices into the ranked population; rank of an individual
/// is its front index + 1. Individuals beyond max_rank stay unranked.
struct RankedFronts {
    std::vector<std::vector<size_t>> fronts;

    /// Union of fronts 1..k, front order then population order. The
    /// k-rank solution set.
    std::vector<size_t> first_k(size_t k) const;
};

RankedFronts rank_fronts(const std::vector<ScoredAnsatz> &population,
                         size_t max_rank);

} // namespace vavqe
