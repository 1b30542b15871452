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

#include "vavqe/baselines.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vavqe/layer_state.hpp"
#include "vavqe/rng.hpp"

namespace vavqe {

void HeaConfig::validate() const {
    if (layers < 1)
        throw std::invalid_argument("hea: layers must be >= 1");
    if (max_iters < 0)
        throw std::invalid_argument("hea: max_iters must be >= 0");
    if (alpha0 <= 0.0)
        throw std::invalid_argument("hea: alpha0 must be positive");
    if (xi <= 0.0)
        throw std::invalid_argument("hea: xi must be positive");
    if (max_backtracks < 0)
        throw std::invalid_argument("hea: max_backtracks must be >= 0");
}

HeaConfig HeaConfig::from_config(const ConfigMap &map) {
    HeaConfig c;
    c.layers = map.get_int("hea.layers", c.layers);
    c.max_iters = map.get_int("hea.max_iters", c.max_iters);
    c.alpha0 = map.get_double("gsa.alpha0", c.alpha0);
    c.xi = map.get_double("gsa.xi", c.xi);
    c.max_backtracks = map.get_int("gsa.max_backtracks", c.max_backtracks);
    c.noise = noise_from_config(map);
    c.seed = static_cast<std::uint64_t>(
        map.get_int64("run.seed", static_cast<long long>(c.seed)));
    c.validate();
    return c;
}

void RndConfig::validate() const {
    if (samples < 1)
        throw std::invalid_argument("rnd: samples must be >= 1");
    if (retrain_iters < 0)
        throw std::invalid_argument("rnd: retrain_iters must be >= 0");
    if (alpha0 <= 0.0)
        throw std::invalid_argument("rnd: alpha0 must be positive");
    if (xi <= 0.0)
        throw std::invalid_argument("rnd: xi must be positive");
    if (max_backtracks < 0)
        throw std::invalid_argument("rnd: max_backtracks must be >= 0");
}

RndConfig RndConfig::from_config(const ConfigMap &map) {
    RndConfig c;
    c.samples = map.get_int("rnd.samples", c.samples);
    c.retrain_iters = map.get_int("rnd.retrain_iters", c.retrain_iters);
    c.retrain_all = map.get_bool("rnd.retrain_all", c.retrain_all);
    c.alpha0 = map.get_double("gsa.alpha0", c.alpha0);
    c.xi = map.get_double("gsa.xi", c.xi);
    c.max_backtracks = map.get_int("gsa.max_backtracks", c.max_backtracks);
    c.seed = static_cast<std::uint64_t>(
        map.get_int64("run.seed", static_cast<long long>(c.seed)));
    c.validate();
    return c;
}

// Greedy partition of the directed ring into qubit-disjoint groups,
// edges ascending by control. Group order is deterministic.
static std::vector<std::uint32_t> ring_groups(int n_qubits) {
    std::vector<std::uint32_t> groups;
    std::vector<std::uint32_t> used;
    const int n_edges = n_qubits >= 2 ? n_qubits : 0;
    for (int c = 0; c < n_edges; ++c) {
        const std::uint32_t qubits =
            (1u << c) | (1u << ((c + 1) % n_qubits));
        bool placed = false;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            if (!(used[g] & qubits)) {
                groups[g] |= 1u << c;
                used[g] |= qubits;
                placed = true;
                break;
            }
        }
        if (!placed) {
            groups.push_back(1u << c);
            used.push_back(qubits);
        }
    }
    return groups;
}

AnsatzPath build_hea(int n_qubits, int layers) {
    if (n_qubits < 1)
        throw std::invalid_argument("build_hea: n_qubits must be >= 1");
    if (layers < 1)
        throw std::invalid_argument("build_hea: layers must be >= 1");
    const LayerCatalog &catalog = layer_catalog(n_qubits);
    const std::vector<std::uint32_t> groups = ring_groups(n_qubits);

    std::vector<StateId> pattern;
    LayerState all_ry{std::vector<Rot>(n_qubits, Rot::kRy), 0};
    pattern.push_back(catalog.id_of(all_ry));
    LayerState rz_front{std::vector<Rot>(n_qubits, Rot::kRz),
                        groups.empty() ? 0 : groups.front()};
    pattern.push_back(catalog.id_of(rz_front));
    for (std::size_t g = 1; g < groups.size(); ++g) {
        LayerState rest{std::vector<Rot>(n_qubits, Rot::kNone), groups[g]};
        pattern.push_back(catalog.id_of(rest));
    }

    AnsatzPath path(n_qubits,
                    static_cast<int>(pattern.size()) * layers);
    for (int l = 0; l < layers; ++l)
        for (std::size_t k = 0; k < pattern.size(); ++k)
            path.layers[l * pattern.size() + k] = pattern[k];
    return path;
}

RunRecord run_hea(const TaskSpec &task, const HeaConfig &cfg,
                  const std::string &task_name,
                  std::optional<double> exact_energy) {
    cfg.validate();
    const AnsatzPath path = build_hea(task.n_qubits, cfg.layers);
    TaskCostModel model(task, cfg.noise);
    const int m = model.param_count(path);

    std::mt19937_64 rng(cfg.seed);
    ParameterVector params(m);
    for (double &p : params)
        p = uniform_angle(rng);

    QuantumCostLedger ledger;
    TraceRecorder trace;
    GsaConfig opt;
    opt.alpha0 = cfg.alpha0;
    opt.xi = cfg.xi;
    opt.max_backtracks = cfg.max_backtracks;
    opt.retrain_iters = cfg.max_iters;
    RetrainResult result =
        vqe_retraining(model, path, params, opt, ledger, &trace);

    RunRecord record;
    record.method = "hea";
    record.task_name = task_name;
    record.n_qubits = task.n_qubits;
    record.seed = cfg.seed;
    record.final_path = serialize_path(path);
    record.final_params = result.params;
    record.final_cost = result.cost.value();
    record.exact_energy = exact_energy;
    if (exact_energy)
        record.absolute_error = std::abs(record.final_cost - *exact_energy);
    record.quantum_cost_total = ledger.evaluations();
    record.stage_costs = ledger.stage_totals();
    record.termination_reasons = {{"retrain", result.termination}};
    record.sampler_exact = true;
    record.trace = trace.points();
    return record;
}

RunRecord run_rnd(const CostModel &model, const AnsatzSpace &space,
                  const RndConfig &cfg, const std::string &task_name,
                  std::optional<double> exact_energy) {
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    QuantumCostLedger ledger;
    TraceRecorder trace;
    GsaConfig opt;
    opt.alpha0 = cfg.alpha0;
    opt.xi = cfg.xi;
    opt.max_backtracks = cfg.max_backtracks;
    opt.retrain_iters = cfg.retrain_iters;

    struct Candidate {
        AnsatzPath path;
        ParameterVector params;
        double cost;
    };
    std::vector<Candidate> drawn;
    drawn.reserve(static_cast<std::size_t>(cfg.samples));
    for (int i = 0; i < cfg.samples; ++i) {
        AnsatzPath path = space.sample_uniform(rng);
        ParameterVector params(space.path_param_count(path));
        for (double &p : params)
            p = uniform_angle(rng);
        drawn.push_back({std::move(path), std::move(params), 0.0});
    }

    RetrainResult final_retrain;
    std::size_t winner = 0;
    if (cfg.retrain_all) {
        ledger.set_stage("retrain");
        std::vector<RetrainResult> retrained;
        retrained.reserve(drawn.size());
        for (const Candidate &c : drawn) {
            retrained.push_back(
                vqe_retraining(model, c.path, c.params, opt, ledger, &trace));
            // Parameter-free candidates never evaluate; score them once
            // so the argmin below compares full costs.
            if (!retrained.back().cost)
                retrained.back().cost =
                    model.cost(c.path, c.params, ledger);
        }
        for (std::size_t i = 1; i < retrained.size(); ++i)
            if (*retrained[i].cost < *retrained[winner].cost)
                winner = i;
        final_retrain = retrained[winner];
    } else {
        ledger.set_stage("sample");
        for (Candidate &c : drawn) {
            c.cost = model.cost(c.path, c.params, ledger);
            trace.observe(ledger, c.cost);
        }
        for (std::size_t i = 1; i < drawn.size(); ++i)
            if (drawn[i].cost < drawn[winner].cost)
                winner = i;
        ledger.set_stage("retrain");
        final_retrain = vqe_retraining(model, drawn[winner].path,
                                       drawn[winner].params, opt, ledger,
                                       &trace);
        if (!final_retrain.cost)
            final_retrain.cost = drawn[winner].cost;
    }

    RunRecord record;
    record.method = "rnd";
    record.task_name = task_name;
    record.n_qubits = model.n_qubits();
    record.seed = cfg.seed;
    record.final_path = space.serialize(drawn[winner].path);
    record.final_params = final_retrain.params;
    record.final_cost = final_retrain.cost.value();
    record.exact_energy = exact_energy;
    if (exact_energy)
        record.absolute_error = std::abs(record.final_cost - *exact_energy);
    record.quantum_cost_total = ledger.evaluations();
    record.stage_costs = ledger.stage_totals();
    record.termination_reasons = {{"retrain", final_retrain.termination}};
    record.sampler_exact = space.sampling_exact();
    record.trace = trace.points();
    return record;
}

} // namespace vavqe
