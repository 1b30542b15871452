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
 * @file gsa.hpp
 * The three-stage gradient-sensitive alternate driver: pool training
 * (warmup plus main process), alternate training (multi-objective
 * genetic search with explicit elimination), and final retraining.
 */
#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vavqe/config.hpp"
#include "vavqe/cost_model.hpp"
#include "vavqe/gramo.hpp"
#include "vavqe/pool.hpp"
#include "vavqe/record.hpp"
#include "vavqe/space.hpp"

namespace vavqe {

struct GsaConfig {
    int max_layers = 3;

    // Descent step: initial step length, sufficient-decrease slope, and
    // the convergence threshold on alpha * |grad|_2 / |theta|.
    double alpha0 = 5.0;
    double xi = 0.003;
    int max_backtracks = 40;

    // Double epsilon-greedy sampling: tree-walk probability and
    // count-greedy eta probability.
    double epsilon1 = 0.8;
    double epsilon2 = 0.8;

    // Pool training: paths per iteration, fronts trained per iteration,
    // iterations of warmup (epsilon1 ramped up from zero) and of the
    // main process, and the leaf-count stability window.
    int pool_samples = 16;
    int pool_train_fronts = 1;
    int warmup_iters = 2;
    int pool_iters = 2;
    int pool_stable_iters = 1;

    // Alternate training: population size (even; survival keeps half),
    // fronts trained per generation, descent steps per trained member,
    // generation cap, and the best-ansatz stability window.
    int population = 16;
    int ga_train_fronts = 2;
    int ga_train_steps = 5;
    int ga_generations = 100;
    int ga_stable_gens = 4;

    // Final retraining iteration cap.
    int retrain_iters = 10;

    NoiseModel noise;
    std::uint64_t seed = 1;
    bool constrained = true;

    /// Throws std::invalid_argument on out-of-range values.
    void validate() const;

    LineSearchConfig line_search() const {
        return {alpha0, 1e-4, 0.618, max_backtracks};
    }
    GreedyConfig greedy() const { return {epsilon1, epsilon2}; }

    /// Reads sections [gsa], [noise], [run]; absent keys keep defaults.
    static GsaConfig from_config(const ConfigMap &map);
};

/// Shared [noise] section reader: enabled=off zeroes both strengths;
/// enabled=on with both strengths absent selects the device default.
NoiseModel noise_from_config(const ConfigMap &map);

/// Collects the cost-versus-quantum-cost curve. best never increases and
/// quantum_cost never decreases along the recorded points.
class TraceRecorder {
  public:
    void observe(const QuantumCostLedger &ledger, double cost);
    const std::vector<TracePoint> &points() const { return points_; }
    double best() const { return best_; }

  private:
    std::vector<TracePoint> points_;
    double best_ = std::numeric_limits<double>::infinity();
};

struct PoolTrainingResult {
    ParameterPool pool;
    CandidateTree tree;
    int iterations = 0;  // main-process iterations run (warmup excluded)
    std::string termination;  // "max-iterations" | "pool-stable"
};

struct TrainedAnsatz {
    AnsatzPath path;
    ParameterVector params;
    double cost = 0.0;
};

struct AlternateResult {
    TrainedAnsatz best;
    int generations = 0;
    std::string termination;  // "max-generations" | "best-stable"
};

struct RetrainResult {
    ParameterVector params;
    std::optional<double> cost;  // absent when no evaluation happened
    int iterations = 0;
    std::string termination;  // "converged" | "max-iterations"
};

/// Stage 1. Warmup iterations ramp the tree-walk probability as
/// (i-1) * epsilon1 / warmup_iters; the main process then samples
/// pool_samples paths per iteration, scores each at pooled parameters,
/// ranks, applies one descent step to fronts 1..pool_train_fronts,
/// writes results back to the pool, and records trained paths in the
/// tree. Stops after pool_iters iterations or once the tree's distinct
/// leaf count is unchanged for pool_stable_iters consecutive iterations.
PoolTrainingResult pool_training(const CostModel &model,
                                 const AnsatzSpace &space,
                                 const GsaConfig &cfg, std::mt19937_64 &rng,
                                 QuantumCostLedger &ledger,
                                 TraceRecorder *trace = nullptr);

/// Stage 2. Per generation: score the population (duplicates share one
/// owned parameter vector), rank, train fronts 1..ga_train_fronts for
/// ga_train_steps descent steps, keep the better half (whole fronts,
/// then the next front in ascending cost), clear the recorded best if a
/// survivor beats it, spawn one offspring per survivor with a uniformly
/// chosen genetic operator, eliminate survivors whose probe step
/// satisfies alpha * |grad| / |theta| < xi (recording the eliminated
/// ansatz as best when its cost is lower), and refill by sampling.
/// Returns the argmin over the final population and the recorded best.
AlternateResult alternate_training(const CostModel &model,
                                   const AnsatzSpace &space,
                                   const ParameterPool &pool,
                                   const CandidateTree &tree,
                                   const GsaConfig &cfg, std::mt19937_64 &rng,
                                   QuantumCostLedger &ledger,
                                   TraceRecorder *trace = nullptr);

/// Stage 3. Descent steps until alpha * |grad| / |theta| < xi or
/// retrain_iters iterations. Parameter-free paths return immediately.
RetrainResult vqe_retraining(const CostModel &model, const AnsatzPath &path,
                             const ParameterVector &params,
                             const GsaConfig &cfg, QuantumCostLedger &ledger,
                             TraceRecorder *trace = nullptr);

/// One offspring: raw edit, parameter inheritance (parent slices for
/// layers the edit keeps, pool entries for new or shifted layers),
/// canonicalization. Edits that canonicalize back to the parent are
/// retried a bounded number of times, then the parent is returned
/// (a shared-identity duplicate).
TrainedAnsatz make_offspring(const AnsatzSpace &space,
                             const ParameterPool &pool,
                             const AnsatzPath &parent,
                             const ParameterVector &parent_params,
                             GeneticOp op, std::mt19937_64 &rng);

/// Chains the three stages under one seeded generator and assembles the
/// run record.
RunRecord run_gsa(const CostModel &model, const AnsatzSpace &space,
                  const GsaConfig &cfg, const std::string &task_name,
                  std::optional<double> exact_energy,
                  const std::string &method = "gsa");

/// (1/M) sum over runs of (final cost - exact)^2. Throws on empty input.
double mse(const std::vector<double> &final_costs, double exact);

} // namespace vavqe
