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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>

#include "doctest.h"
#include "vavqe/config.hpp"
#include "vavqe/optimize.hpp"

using namespace vavqe;

namespace {

constexpr double kPi = std::numbers::pi;

// Single Ry on qubit 0; with H = Z (or Z padded with identities) the
// cost is exactly cos(theta).
AnsatzPath ry_path(int n) {
    AnsatzPath p(n, 1);
    p.layers[0] = layer_catalog(n).id_of(parse_layer("q0:Ry", n));
    return p;
}

TaskSpec z_task(int n) {
    std::string word(n, 'I');
    word[0] = 'Z';
    return TaskSpec::ground_state(PauliSum(n, {{1.0, word}}));
}

AnsatzPath path_of(int n, int max_layers, const std::string &text) {
    AnsatzPath p = parse_path(text, n, max_layers);
    return p;
}

} // namespace

TEST_CASE("cost evaluates the task sum and charges the ledger once") {
    QuantumCostLedger ledger;
    TaskSpec task = z_task(1);

    AnsatzPath empty(1, 1);
    CHECK(cost(task, empty, {}, {}, ledger) == 1.0);
    CHECK(ledger.evaluations() == 1);

    AnsatzPath p = ry_path(1);
    CHECK(cost(task, p, {kPi}, {}, ledger) == doctest::Approx(-1.0));
    CHECK(cost(task, p, {kPi / 3}, {}, ledger) == doctest::Approx(0.5));
    CHECK(ledger.evaluations() == 3);

    CHECK_THROWS(cost(task, p, {}, {}, ledger));  // wrong parameter count

    // Two-tuple task: values add.
    TaskSpec two = task;
    two.tuples.push_back(two.tuples[0]);
    CHECK(cost(two, p, {kPi / 3}, {}, ledger) == doctest::Approx(1.0));
}

TEST_CASE("noisy cost runs on the density backend") {
    QuantumCostLedger ledger;
    TaskSpec task = z_task(1);
    AnsatzPath p = ry_path(1);
    NoiseModel noise{1e-3, 1e-2};
    // Depolarizing after one Ry(pi): <Z> = -1 + 4 p1 / 3.
    CHECK(cost(task, p, {kPi}, noise, ledger) ==
          doctest::Approx(-0.9986666666666666).epsilon(1e-12));
}

TEST_CASE("parameter-shift gradient matches the closed form") {
    QuantumCostLedger ledger;
    TaskSpec task = z_task(1);
    AnsatzPath p = ry_path(1);

    auto g = gradient(task, p, {kPi / 2}, {}, ledger);
    REQUIRE(g.size() == 1);
    CHECK(g[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(ledger.evaluations() == 2);  // 2 * |theta|

    g = gradient(task, p, {0.0}, {}, ledger);
    CHECK(g[0] == doctest::Approx(0.0));
    CHECK(ledger.evaluations() == 4);
}

TEST_CASE("gradient matches central finite differences on 4-qubit paths") {
    TaskSpec task = TaskSpec::ground_state(
        builtin_hamiltonian("tfim", 4, {1.0}));
    const char *texts[] = {
        "q0:Ry q1:Ry q2:Ry q3:Ry\ncx:0>1 cx:2>3\nq1:Rz q3:Rz",
        "q0:Ry q2:Ry cx:0>1\nq1:Rz cx:2>3\nq0:Ry q1:Ry q2:Ry q3:Ry",
        "q0:Ry q1:Ry q2:Ry q3:Ry cx:1>2\n\n",
    };
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (const char *text : texts) {
        AnsatzPath p = path_of(4, 3, text);
        const int m = p.param_count();
        REQUIRE(m > 0);
        for (int rep = 0; rep < 5; ++rep) {
            ParameterVector theta(m);
            for (double &t : theta)
                t = angle(rng);
            QuantumCostLedger ledger;
            auto g = gradient(task, p, theta, {}, ledger);
            CHECK(ledger.evaluations() == 2 * m);
            const double h = 1e-5;
            for (int k = 0; k < m; ++k) {
                ParameterVector tp = theta, tm = theta;
                tp[k] += h;
                tm[k] -= h;
                double fd = (cost_uncounted(task, p, tp, {}) -
                             cost_uncounted(task, p, tm, {})) /
                            (2 * h);
                CHECK(std::abs(g[k] - fd) < 1e-6);
            }
        }
    }
}

TEST_CASE("normalized gradient magnitude") {
    CHECK(normalized_gradient_magnitude({3.0, 4.0}, 2) == 2.5);
    CHECK(normalized_gradient_magnitude({}, 0) == 0.0);
    CHECK(normalized_gradient_magnitude({0.0, 0.0, 0.0}, 3) == 0.0);
}

TEST_CASE("backtracking accepts the first sufficient-decrease step") {
    TaskSpec task = z_task(1);
    AnsatzPath p = ry_path(1);
    LineSearchConfig cfg;

    // cos(theta) closed form, hand-iterated backtracking sequence:
    // theta = 0.1 accepts alpha0 immediately.
    {
        QuantumCostLedger ledger;
        ParameterVector theta{0.1};
        double c0 = std::cos(0.1);
        std::vector<double> g{-std::sin(0.1)};
        auto r = line_search_step(task, p, theta, g, c0, cfg, {}, ledger);
        CHECK(r.trials == 1);
        CHECK(r.alpha == 5.0);
        CHECK(r.params[0] == doctest::Approx(0.5991670832341408).epsilon(1e-15));
        CHECK(r.cost == doctest::Approx(0.825805628749692).epsilon(1e-12));
        CHECK(ledger.evaluations() == 1);
        CHECK(r.cost <= c0 - cfg.c1 * r.alpha * (g[0] * g[0]));
    }
    // theta = 3.0 needs two shrinks.
    {
        QuantumCostLedger ledger;
        ParameterVector theta{3.0};
        double c0 = std::cos(3.0);
        std::vector<double> g{-std::sin(3.0)};
        auto r = line_search_step(task, p, theta, g, c0, cfg, {}, ledger);
        CHECK(r.trials == 3);
        CHECK(r.alpha == doctest::Approx(1.90962).epsilon(1e-12));
        CHECK(r.params[0] == doctest::Approx(3.269485589791284).epsilon(1e-15));
        CHECK(r.cost == doctest::Approx(-0.9918328397949311).epsilon(1e-12));
        CHECK(ledger.evaluations() == 3);
    }
    // Zero gradient: Armijo holds at alpha0, point unchanged in value.
    {
        QuantumCostLedger ledger;
        ParameterVector theta{0.7};
        auto r = line_search_step(task, p, theta, {0.0}, std::cos(0.7), cfg,
                                  {}, ledger);
        CHECK(r.alpha == 5.0);
        CHECK(r.params[0] == 0.7);
        CHECK(r.trials == 1);
    }
    // Exhaustion returns the input with alpha = 0.
    {
        QuantumCostLedger ledger;
        LineSearchConfig tight = cfg;
        tight.max_backtracks = 2;
        tight.c1 = 0.9999;  // nearly demands the full linear decrease
        ParameterVector theta{3.0};
        auto r = line_search_step(task, p, theta, {-std::sin(3.0)},
                                  std::cos(3.0), tight, {}, ledger);
        CHECK(r.alpha == 0.0);
        CHECK(r.params[0] == 3.0);
        CHECK(r.trials == 2);
        CHECK(ledger.evaluations() == 2);
    }
}

TEST_CASE("line-search steps never increase the cost when alpha > 0") {
    TaskSpec task = TaskSpec::ground_state(
        builtin_hamiltonian("tfim", 4, {1.0}));
    AnsatzPath p =
        path_of(4, 2, "q0:Ry q1:Ry q2:Ry q3:Ry\nq0:Rz cx:1>2");
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    LineSearchConfig cfg;
    for (int rep = 0; rep < 10; ++rep) {
        ParameterVector theta(p.param_count());
        for (double &t : theta)
            t = angle(rng);
        QuantumCostLedger ledger;
        double c0 = cost(task, p, theta, {}, ledger);
        auto g = gradient(task, p, theta, {}, ledger);
        auto r = line_search_step(task, p, theta, g, c0, cfg, {}, ledger);
        if (r.alpha > 0.0)
            CHECK(r.cost <= c0);
        else
            CHECK(r.params == theta);
        // One full iteration: 1 (cost) + 2m (gradient) + trials.
        CHECK(ledger.evaluations() ==
              1 + 2 * p.param_count() + r.trials);
    }
}

TEST_CASE("ledger events recount to the counter total") {
    QuantumCostLedger ledger;
    ledger.set_stage("alpha");
    ledger.record_cost_eval();
    ledger.record_gradient(7);
    ledger.set_stage("beta");
    ledger.record_armijo_trial();
    ledger.record_gradient(2);

    long long recount = 0;
    for (const auto &e : ledger.events())
        recount += event_charge(e);
    CHECK(recount == ledger.evaluations());
    CHECK(ledger.evaluations() == 1 + 14 + 1 + 4);
    CHECK(ledger.stage_totals().at("alpha") == 15);
    CHECK(ledger.stage_totals().at("beta") == 5);
}

TEST_CASE("config parses sections, types, and rejects bad input") {
    ConfigMap cm = ConfigMap::parse("top = 1\n"
                                    "[gsa]\n"
                                    "n_l = 3  # layers\n"
                                    "xi = 0.003\n"
                                    "[noise]\n"
                                    "enabled = on\n"
                                    "p1 = 1e-3\n");
    CHECK(cm.get_int("top", 0) == 1);
    CHECK(cm.get_int("gsa.n_l", 0) == 3);
    CHECK(cm.get_double("gsa.xi", 0.0) == 0.003);
    CHECK(cm.get_bool("noise.enabled", false));
    CHECK(cm.get_double("noise.p1", 0.0) == 1e-3);
    CHECK(cm.get_int("gsa.missing", 42) == 42);
    cm.ensure_fully_consumed();

    ConfigMap extra = ConfigMap::parse("[gsa]\nn_l = 3\ntypo_key = 1\n");
    extra.get_int("gsa.n_l", 0);
    CHECK_THROWS_WITH_AS(extra.ensure_fully_consumed(),
                         "unknown config keys: gsa.typo_key",
                         std::runtime_error);

    CHECK_THROWS(ConfigMap::parse("just a line\n"));
    CHECK_THROWS(ConfigMap::parse("a = 1\na = 2\n"));
    CHECK_THROWS(ConfigMap::parse("[unclosed\n"));
    ConfigMap bad = ConfigMap::parse("x = abc\n");
    CHECK_THROWS(bad.get_double("x", 0.0));
    CHECK_THROWS(bad.get_bool("x", false));
}

TEST_CASE("round-trips through a config file on disk") {
    const char *path = "vavqe_test_config.tmp";
    {
        std::ofstream out(path);
        out << "[gsa]\nseed = 99\n";
    }
    ConfigMap cm = ConfigMap::load(path);
    CHECK(cm.get_int64("gsa.seed", 0) == 99);
    std::remove(path);
    CHECK_THROWS(ConfigMap::load("definitely_missing_config_file.cfg"));
}
