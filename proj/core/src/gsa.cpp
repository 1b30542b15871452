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

#include "vavqe/gsa.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "vavqe/rng.hpp"

namespace vavqe {

namespace {

void require(bool ok, const char *what) {
    if (!ok)
        throw std::invalid_argument(what);
}

/// One (state, layer) slice; zeros when the pool has no entry yet.
ParameterVector pool_slice(const ParameterPool &pool, const AnsatzSpace &space,
                           StateId id, int layer) {
    auto it = pool.entries().find({id, layer});
    if (it != pool.entries().end())
        return it->second;
    return ParameterVector(space.state_param_count(id), 0.0);
}

/// Per-layer offsets of a path's parameter vector.
std::vector<int> layer_offsets(const AnsatzSpace &space,
                               const AnsatzPath &path) {
    std::vector<int> off(path.layers.size() + 1, 0);
    for (size_t l = 0; l < path.layers.size(); ++l)
        off[l + 1] = off[l] + space.state_param_count(path.layers[l]);
    return off;
}

} // namespace

void GsaConfig::validate() const {
    require(max_layers >= 1, "max_layers must be at least 1");
    require(alpha0 > 0.0, "alpha0 must be positive");
    require(xi > 0.0, "xi must be positive");
    require(max_backtracks >= 1, "max_backtracks must be positive");
    require(epsilon1 >= 0.0 && epsilon1 <= 1.0, "epsilon1 must lie in [0,1]");
    require(epsilon2 >= 0.0 && epsilon2 <= 1.0, "epsilon2 must lie in [0,1]");
    require(pool_samples >= 1, "pool_samples must be positive");
    require(pool_train_fronts >= 1, "pool_train_fronts must be positive");
    require(pool_stable_iters >= 1, "pool_stable_iters must be positive");
    require(warmup_iters >= 0, "warmup_iters must be non-negative");
    require(pool_iters >= 0, "pool_iters must be non-negative");
    require(population >= 2 && population % 2 == 0,
            "population must be even and at least 2");
    require(ga_train_fronts >= 1, "ga_train_fronts must be positive");
    require(ga_train_steps >= 1, "ga_train_steps must be positive");
    require(ga_generations >= 0, "ga_generations must be non-negative");
    require(ga_stable_gens >= 1, "ga_stable_gens must be positive");
    require(retrain_iters >= 0, "retrain_iters must be non-negative");
}

NoiseModel noise_from_config(const ConfigMap &map) {
    NoiseModel noise;
    noise.p1 = map.get_double("noise.p1", noise.p1);
    noise.p2 = map.get_double("noise.p2", noise.p2);
    if (!map.get_bool("noise.enabled", noise.enabled())) {
        noise.p1 = 0.0;
        noise.p2 = 0.0;
    } else if (!noise.enabled()) {
        noise = NoiseModel::device_default();
    }
    return noise;
}

GsaConfig GsaConfig::from_config(const ConfigMap &map) {
    GsaConfig c;
    c.max_layers = map.get_int("gsa.max_layers", c.max_layers);
    c.alpha0 = map.get_double("gsa.alpha0", c.alpha0);
    c.xi = map.get_double("gsa.xi", c.xi);
    c.max_backtracks = map.get_int("gsa.max_backtracks", c.max_backtracks);
    c.epsilon1 = map.get_double("gsa.epsilon1", c.epsilon1);
    c.epsilon2 = map.get_double("gsa.epsilon2", c.epsilon2);
    c.pool_samples = map.get_int("gsa.pool_samples", c.pool_samples);
    c.pool_train_fronts =
        map.get_int("gsa.pool_train_fronts", c.pool_train_fronts);
    c.warmup_iters = map.get_int("gsa.warmup_iters", c.warmup_iters);
    c.pool_iters = map.get_int("gsa.pool_iters", c.pool_iters);
    c.pool_stable_iters =
        map.get_int("gsa.pool_stable_iters", c.pool_stable_iters);
    c.population = map.get_int("gsa.population", c.population);
    c.ga_train_fronts = map.get_int("gsa.ga_train_fronts", c.ga_train_fronts);
    c.ga_train_steps = map.get_int("gsa.ga_train_steps", c.ga_train_steps);
    c.ga_generations = map.get_int("gsa.ga_generations", c.ga_generations);
    c.ga_stable_gens = map.get_int("gsa.ga_stable_gens", c.ga_stable_gens);
    c.retrain_iters = map.get_int("gsa.retrain_iters", c.retrain_iters);
    c.noise = noise_from_config(map);
    c.seed = static_cast<std::uint64_t>(
        map.get_int64("run.seed", static_cast<long long>(c.seed)));
    c.constrained = map.get_bool("run.constrained", c.constrained);
    c.validate();
    return c;
}

void TraceRecorder::observe(const QuantumCostLedger &ledger, double cost) {
    best_ = std::min(best_, cost);
    points_.push_back({ledger.evaluations(), best_, ledger.stage()});
}

PoolTrainingResult pool_training(const CostModel &model,
                                 const AnsatzSpace &space,
                                 const GsaConfig &cfg, std::mt19937_64 &rng,
                                 QuantumCostLedger &ledger,
                                 TraceRecorder *trace) {
    ledger.set_stage("pool");
    PoolTrainingResult out{ParameterPool(space), CandidateTree(), 0,
                           "max-iterations"};
    const LineSearchConfig ls = cfg.line_search();

    auto iteration = [&](double epsilon1) {
        GreedyConfig greedy{epsilon1, cfg.epsilon2};
        std::vector<ScoredAnsatz> scored;
        std::vector<std::vector<double>> grads;
        scored.reserve(cfg.pool_samples);
        for (int i = 0; i < cfg.pool_samples; ++i) {
            ScoredAnsatz s;
            s.path = sample_path(out.tree, space, greedy, rng);
            s.params = out.pool.lookup(s.path);
            s.cost = model.cost(s.path, s.params, ledger);
            grads.push_back(model.gradient(s.path, s.params, ledger));
            s.grad_mag = normalized_gradient_magnitude(
                grads.back(), static_cast<int>(s.params.size()));
            if (trace)
                trace->observe(ledger, s.cost);
            scored.push_back(std::move(s));
        }
        RankedFronts fronts =
            rank_fronts(scored, static_cast<size_t>(cfg.pool_train_fronts));
        for (size_t idx : fronts.first_k(cfg.pool_train_fronts)) {
            const ScoredAnsatz &s = scored[idx];
            LineSearchResult step = line_search_step(
                model, s.path, s.params, grads[idx], s.cost, ls, ledger);
            out.pool.update(s.path, step.params);
            out.tree.insert_trained(s.path);
            if (trace)
                trace->observe(ledger, step.cost);
        }
    };

    for (int i = 1; i <= cfg.warmup_iters; ++i)
        iteration((i - 1) * cfg.epsilon1 / cfg.warmup_iters);

    int stable = 0;
    for (int it = 1; it <= cfg.pool_iters; ++it) {
        const long long leaves_before = out.tree.leaf_count();
        iteration(cfg.epsilon1);
        out.iterations = it;
        if (out.tree.leaf_count() == leaves_before) {
            if (++stable >= cfg.pool_stable_iters) {
                out.termination = "pool-stable";
                break;
            }
        } else {
            stable = 0;
        }
    }
    return out;
}

TrainedAnsatz make_offspring(const AnsatzSpace &space,
                             const ParameterPool &pool,
                             const AnsatzPath &parent,
                             const ParameterVector &parent_params,
                             GeneticOp op, std::mt19937_64 &rng) {
    constexpr int kRetries = 8;
    const std::vector<int> parent_off = layer_offsets(space, parent);
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        OffspringEdit e = space.propose_edit(parent, op, rng);
        ParameterVector provisional;
        for (size_t l = 0; l < e.raw.layers.size(); ++l) {
            if (e.parent_layer[l] >= 0) {
                const int p = e.parent_layer[l];
                provisional.insert(provisional.end(),
                                   parent_params.begin() + parent_off[p],
                                   parent_params.begin() + parent_off[p + 1]);
            } else {
                ParameterVector fresh = pool_slice(
                    pool, space, e.raw.layers[l], static_cast<int>(l) + 1);
                provisional.insert(provisional.end(), fresh.begin(),
                                   fresh.end());
            }
        }
        AnsatzPath canonical = space.canonicalize(e.raw, provisional);
        if (!(canonical == parent))
            return {std::move(canonical), std::move(provisional), 0.0};
    }
    return {parent, parent_params, 0.0};
}

AlternateResult alternate_training(const CostModel &model,
                                   const AnsatzSpace &space,
                                   const ParameterPool &pool,
                                   const CandidateTree &tree,
                                   const GsaConfig &cfg, std::mt19937_64 &rng,
                                   QuantumCostLedger &ledger,
                                   TraceRecorder *trace) {
    ledger.set_stage("alternate");
    const LineSearchConfig ls = cfg.line_search();
    const GreedyConfig greedy = cfg.greedy();
    const size_t half = static_cast<size_t>(cfg.population) / 2;

    // Population entries may repeat; one owned parameter vector per
    // identity persists across generations.
    std::vector<AnsatzPath> population;
    std::map<AnsatzPath, ParameterVector> owned;
    auto admit = [&](const AnsatzPath &p) {
        owned.try_emplace(p, pool.lookup(p));
        population.push_back(p);
    };
    while (population.size() < static_cast<size_t>(cfg.population))
        admit(sample_path(tree, space, greedy, rng));

    std::optional<TrainedAnsatz> u_best;
    AlternateResult out;
    out.termination = "max-generations";

    // Stability tracking: generations since the recorded best changed
    // identity or value (absence counts as a value).
    auto best_repr = [&]() -> std::optional<std::pair<AnsatzPath, double>> {
        if (!u_best)
            return std::nullopt;
        return std::make_pair(u_best->path, u_best->cost);
    };
    std::optional<std::pair<AnsatzPath, double>> last_best = best_repr();
    int stable = 0;

    // Scores of the current generation, one per identity.
    struct Score {
        double cost = 0.0;
        std::vector<double> grad;
        double grad_mag = 0.0;
    };
    std::map<AnsatzPath, Score> scores;

    for (int gen = 1; gen <= cfg.ga_generations; ++gen) {
        // (a) Score every distinct identity at its owned parameters.
        scores.clear();
        for (const AnsatzPath &p : population) {
            if (scores.count(p))
                continue;
            const ParameterVector &theta = owned.at(p);
            Score s;
            s.cost = model.cost(p, theta, ledger);
            s.grad = model.gradient(p, theta, ledger);
            s.grad_mag = normalized_gradient_magnitude(
                s.grad, static_cast<int>(theta.size()));
            if (trace)
                trace->observe(ledger, s.cost);
            scores.emplace(p, std::move(s));
        }

        // (b) Rank population entries and train the leading fronts.
        std::vector<ScoredAnsatz> entries;
        entries.reserve(population.size());
        for (const AnsatzPath &p : population) {
            const Score &s = scores.at(p);
            entries.push_back({p, {}, s.cost, s.grad_mag});
        }
        RankedFronts fronts = rank_fronts(entries, entries.size());

        std::set<AnsatzPath> trained;
        const size_t train_fronts = std::min(
            fronts.fronts.size(), static_cast<size_t>(cfg.ga_train_fronts));
        for (size_t f = 0; f < train_fronts; ++f) {
            for (size_t idx : fronts.fronts[f]) {
                const AnsatzPath &p = population[idx];
                if (!trained.insert(p).second)
                    continue;  // shared identity: already trained this gen
                Score &s = scores.at(p);
                ParameterVector theta = owned.at(p);
                double cost = s.cost;
                std::vector<double> grad = s.grad;
                for (int step = 0; step < cfg.ga_train_steps; ++step) {
                    LineSearchResult r = line_search_step(model, p, theta,
                                                          grad, cost, ls,
                                                          ledger);
                    theta = std::move(r.params);
                    cost = r.cost;
                    if (trace)
                        trace->observe(ledger, cost);
                    if (step + 1 < cfg.ga_train_steps)
                        grad = model.gradient(p, theta, ledger);
                }
                owned.at(p) = std::move(theta);
                s.cost = cost;
                s.grad.clear();  // stale after training
            }
        }

        // (c) Survival: whole fronts while they fit, then the next front
        // in ascending current cost, ties by population order.
        std::vector<size_t> survivors;
        for (const std::vector<size_t> &front : fronts.fronts) {
            if (survivors.size() >= half)
                break;
            if (survivors.size() + front.size() < half) {
                survivors.insert(survivors.end(), front.begin(), front.end());
                continue;
            }
            std::vector<size_t> fill = front;
            std::stable_sort(fill.begin(), fill.end(),
                             [&](size_t a, size_t b) {
                                 return scores.at(population[a]).cost <
                                        scores.at(population[b]).cost;
                             });
            for (size_t idx : fill) {
                if (survivors.size() >= half)
                    break;
                survivors.push_back(idx);
            }
            break;
        }

        // (d) Clear the recorded best if a survivor beats it.
        if (u_best) {
            for (size_t idx : survivors) {
                if (scores.at(population[idx]).cost < u_best->cost) {
                    u_best.reset();
                    break;
                }
            }
        }

        // (e) One offspring per survivor, then explicit elimination of
        // survivors whose probe step says they are nearly fully trained.
        std::vector<AnsatzPath> offspring;
        offspring.reserve(survivors.size());
        for (size_t idx : survivors) {
            const AnsatzPath &p = population[idx];
            const GeneticOp op =
                static_cast<GeneticOp>(bounded_u64(rng, 3));
            TrainedAnsatz child =
                make_offspring(space, pool, p, owned.at(p), op, rng);
            owned.try_emplace(child.path, std::move(child.params));
            offspring.push_back(std::move(child.path));
        }

        std::set<AnsatzPath> eliminated;
        std::set<AnsatzPath> probed;
        for (size_t idx : survivors) {
            const AnsatzPath &p = population[idx];
            if (!probed.insert(p).second)
                continue;
            const ParameterVector &theta = owned.at(p);
            const double cost = scores.at(p).cost;
            std::vector<double> grad = model.gradient(p, theta, ledger);
            const double mag = normalized_gradient_magnitude(
                grad, static_cast<int>(theta.size()));
            LineSearchResult probe =
                line_search_step(model, p, theta, grad, cost, ls, ledger);
            if (probe.alpha * mag < cfg.xi) {
                eliminated.insert(p);
                if (!u_best || cost < u_best->cost)
                    u_best = TrainedAnsatz{p, theta, cost};
            }
        }

        // (f) Next population: surviving entries plus offspring, refilled
        // by sampling up to the fixed size.
        std::vector<AnsatzPath> next;
        for (size_t idx : survivors)
            if (!eliminated.count(population[idx]))
                next.push_back(population[idx]);
        next.insert(next.end(), offspring.begin(), offspring.end());
        population = std::move(next);
        while (population.size() < static_cast<size_t>(cfg.population))
            admit(sample_path(tree, space, greedy, rng));

        out.generations = gen;
        auto repr = best_repr();
        if (repr == last_best) {
            if (++stable >= cfg.ga_stable_gens) {
                out.termination = "best-stable";
                break;
            }
        } else {
            stable = 0;
            last_best = std::move(repr);
        }
    }

    // Final selection: argmin over the final population and the recorded
    // best; entries unscored in the last generation are evaluated now.
    bool have = false;
    TrainedAnsatz best;
    std::set<AnsatzPath> seen;
    for (const AnsatzPath &p : population) {
        if (!seen.insert(p).second)
            continue;
        double cost;
        auto it = scores.find(p);
        if (it != scores.end()) {
            cost = it->second.cost;
        } else {
            cost = model.cost(p, owned.at(p), ledger);
            if (trace)
                trace->observe(ledger, cost);
        }
        if (!have || cost < best.cost) {
            best = {p, owned.at(p), cost};
            have = true;
        }
    }
    if (u_best && (!have || u_best->cost < best.cost))
        best = *u_best;
    out.best = std::move(best);
    return out;
}

RetrainResult vqe_retraining(const CostModel &model, const AnsatzPath &path,
                             const ParameterVector &params,
                             const GsaConfig &cfg, QuantumCostLedger &ledger,
                             TraceRecorder *trace) {
    ledger.set_stage("retrain");
    RetrainResult out;
    out.params = params;
    out.termination = "max-iterations";
    const int m = model.param_count(path);
    if (m == 0) {
        out.termination = "converged";  // magnitude 0 is below any xi
        return out;
    }
    if (cfg.retrain_iters == 0)
        return out;

    const LineSearchConfig ls = cfg.line_search();
    double cost = model.cost(path, out.params, ledger);
    if (trace)
        trace->observe(ledger, cost);
    for (int it = 1; it <= cfg.retrain_iters; ++it) {
        std::vector<double> grad = model.gradient(path, out.params, ledger);
        const double mag = normalized_gradient_magnitude(grad, m);
        LineSearchResult step =
            line_search_step(model, path, out.params, grad, cost, ls, ledger);
        out.params = std::move(step.params);
        cost = step.cost;
        out.iterations = it;
        if (trace)
            trace->observe(ledger, cost);
        if (step.alpha * mag < cfg.xi) {
            out.termination = "converged";
            break;
        }
    }
    out.cost = cost;
    return out;
}

RunRecord run_gsa(const CostModel &model, const AnsatzSpace &space,
                  const GsaConfig &cfg, const std::string &task_name,
                  std::optional<double> exact_energy,
                  const std::string &method) {
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    QuantumCostLedger ledger;
    TraceRecorder trace;

    PoolTrainingResult stage1 =
        pool_training(model, space, cfg, rng, ledger, &trace);
    AlternateResult stage2 = alternate_training(
        model, space, stage1.pool, stage1.tree, cfg, rng, ledger, &trace);
    RetrainResult stage3 = vqe_retraining(model, stage2.best.path,
                                          stage2.best.params, cfg, ledger,
                                          &trace);

    RunRecord record;
    record.method = method;
    record.task_name = task_name;
    record.n_qubits = model.n_qubits();
    record.seed = cfg.seed;
    record.final_path = space.serialize(stage2.best.path);
    record.final_params = stage3.params;
    record.final_cost = stage3.cost.value_or(stage2.best.cost);
    record.exact_energy = exact_energy;
    if (exact_energy)
        record.absolute_error = std::abs(record.final_cost - *exact_energy);
    record.quantum_cost_total = ledger.evaluations();
    record.stage_costs = ledger.stage_totals();
    record.termination_reasons = {{"pool", stage1.termination},
                                  {"alternate", stage2.termination},
                                  {"retrain", stage3.termination}};
    record.sampler_exact = space.sampling_exact();
    record.trace = trace.points();
    return record;
}

double mse(const std::vector<double> &final_costs, double exact) {
    if (final_costs.empty())
        throw std::invalid_argument("mse: empty cost list");
    double sum = 0.0;
    for (double c : final_costs) {
        const double d = c - exact;
        sum += d * d;
    }
    return sum / static_cast<double>(final_costs.size());
}

} // namespace vavqe
