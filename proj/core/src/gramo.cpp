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

#include "vavqe/gramo.hpp"

#include <algorithm>
#include <stdexcept>

namespace vavqe {

bool dominates(const ScoredAnsatz &a, const ScoredAnsatz &b) {
    return a.cost < b.cost && a.grad_mag >= b.grad_mag;
}

std::vector<size_t> RankedFronts::first_k(size_t k) const {
    std::vector<size_t> out;
    for (size_t f = 0; f < k && f < fronts.size(); ++f)
        out.insert(out.end(), fronts[f].begin(), fronts[f].end());
    return out;
}

// Fast non-dominated sort: dominator counts plus dominated-index lists,
// peeled front by front.
RankedFronts rank_fronts(const std::vector<ScoredAnsatz> &population,
                         size_t max_rank) {
    const size_t n = population.size();
    if (n == 0)
        throw std::invalid_argument("rank_fronts: empty population");

    std::vector<int> dominator_count(n, 0);
    std::vector<std::vector<size_t>> dominated(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (dominates(population[i], population[j])) {
                dominated[i].push_back(j);
                ++dominator_count[j];
            }
        }

    RankedFronts rf;
    std::vector<size_t> current;
    for (size_t i = 0; i < n; ++i)
        if (dominator_count[i] == 0)
            current.push_back(i);
    while (!current.empty() && rf.fronts.size() < max_rank) {
        std::vector<size_t> next;
        for (size_t i : current)
            for (size_t j : dominated[i])
                if (--dominator_count[j] == 0)
                    next.push_back(j);
        rf.fronts.push_back(std::move(current));
        std::sort(rf.fronts.back().begin(), rf.fronts.back().end());
        current = std::move(next);
    }
    return rf;
}

} // namespace vavqe
