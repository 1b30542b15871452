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
 * @file baselines.hpp
 * Fixed-structure (hea) and random-search (rnd) comparison methods run
 * under the same simulator, optimizer, and ledger conventions as the
 * main driver.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "vavqe/config.hpp"
#include "vavqe/cost_model.hpp"
#include "vavqe/gsa.hpp"
#include "vavqe/record.hpp"
#include "vavqe/space.hpp"

namespace vavqe {

/// Fixed repeated-pattern comparator. One pattern repeat is a Ry on
/// every qubit, a Rz on every qubit, and the full directed ring of
/// CNOTs, split across as few layers as qubit-disjointness allows.
struct HeaConfig {
    int layers = 2;
    int max_iters = 100;
    double alpha0 = 5.0;
    double xi = 0.003;
    int max_backtracks = 40;
    NoiseModel noise;
    std::uint64_t seed = 1;

    /// Throws std::invalid_argument on out-of-range fields.
    void validate() const;

    /// Reads [hea] plus the shared [gsa] optimizer, [noise], and [run]
    /// sections; absent keys keep the defaults above.
    static HeaConfig from_config(const ConfigMap &map);
};

/// The repeated-pattern path. The pattern is exempt from the search
/// space constraints (its leading Rz gates would otherwise be deleted);
/// it is a fixed ansatz, not a search-space member. Parameter count is
/// 2 * n_qubits * layers.
AnsatzPath build_hea(int n_qubits, int layers);

/// Uniform (-pi, pi] initialization, then descent steps until
/// alpha * |grad| / |theta| < xi or max_iters iterations.
RunRecord run_hea(const TaskSpec &task, const HeaConfig &cfg,
                  const std::string &task_name,
                  std::optional<double> exact_energy);

/// Random-search comparator: sample constraint-valid paths uniformly
/// with independent uniform (-pi, pi] parameters, evaluate each once,
/// and retrain the minimum-cost candidate. With retrain_all, every
/// candidate is retrained instead and the best final cost wins.
struct RndConfig {
    int samples = 6000;
    int retrain_iters = 10;
    bool retrain_all = false;
    double alpha0 = 5.0;
    double xi = 0.003;
    int max_backtracks = 40;
    std::uint64_t seed = 1;

    void validate() const;
    static RndConfig from_config(const ConfigMap &map);
};

RunRecord run_rnd(const CostModel &model, const AnsatzSpace &space,
                  const RndConfig &cfg, const std::string &task_name,
                  std::optional<double> exact_energy);

} // namespace vavqe
