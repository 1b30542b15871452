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
//
// Minimal unconstrained space for unit tests: a handful of abstract
// states per layer, per-state parameter count id mod 3, identity
// canonicalization. Enough structure to exercise pool, tree, and driver
// bookkeeping without the full connectivity rules.
#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "vavqe/rng.hpp"
#include "vavqe/space.hpp"

namespace vavqe::testing {

class StubSpace : public AnsatzSpace {
  public:
    StubSpace(int n, int layers, int states)
        : n_(n), layers_(layers), states_(states) {}

    int n_qubits() const override { return n_; }
    int max_layers() const override { return layers_; }
    int n_states() const override { return states_; }
    int state_param_count(StateId id) const override { return id % 3; }
    bool check(const AnsatzPath &, ConstraintReport *r) const override {
        if (r)
            *r = {};
        return true;
    }
    long long count_paths() const override {
        long long c = 1;
        for (int l = 0; l < layers_; ++l)
            c *= states_;
        return c;
    }
    std::vector<AnsatzPath> enumerate() const override {
        std::vector<AnsatzPath> all;
        AnsatzPath p(n_, layers_);
        std::function<void(int)> rec = [&](int l) {
            if (l == layers_) {
                all.push_back(p);
                return;
            }
            for (StateId s = 0; s < states_; ++s) {
                p.layers[l] = s;
                rec(l + 1);
            }
        };
        rec(0);
        return all;
    }
    AnsatzPath sample_uniform(std::mt19937_64 &rng) const override {
        AnsatzPath p(n_, layers_);
        for (int l = 0; l < layers_; ++l)
            p.layers[l] = static_cast<StateId>(bounded_u64(rng, states_));
        return p;
    }
    bool sampling_exact() const override { return true; }
    AnsatzPath canonicalize(const AnsatzPath &raw,
                            ParameterVector &) const override {
        return raw;
    }
    std::string serialize(const AnsatzPath &p) const override {
        std::string s;
        for (StateId id : p.layers)
            s += std::to_string(id) + "\n";
        return s;
    }
    AnsatzPath parse(const std::string &text) const override {
        AnsatzPath p(n_, layers_);
        std::istringstream in(text);
        for (int l = 0; l < layers_; ++l)
            in >> p.layers[l];
        return p;
    }

  private:
    int n_, layers_, states_;
};

} // namespace vavqe::testing
