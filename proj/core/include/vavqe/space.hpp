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
 * @file space.hpp
 * Abstract ansatz search space: a fixed number of layers, a per-layer
 * state alphabet, validity checking, counting, sampling, and the asexual
 * genetic operators. Implementations: the ring-connectivity space and
 * the encoded spaces built on top of it.
 */
#pragma once

#include <random>
#include <string>
#include <vector>

#include "vavqe/path.hpp"

namespace vavqe {

/// Outcome of a validity check. `violated` collects every broken rule as
/// a bit (bit k-1 for rule k); the remaining fields describe the first
/// violation in circuit order.
struct ConstraintReport {
    unsigned violated = 0;
    int first_rule = 0;  // 0 when valid
    int layer = -1;      // 0-based layer of the first violation
    std::string detail;

    bool ok() const { return violated == 0; }
    bool has(int rule) const { return (violated >> (rule - 1)) & 1u; }
};

/// Asexual genetic operators on paths.
enum class GeneticOp { kMutate, kRemoveLayer, kAmplify };

/// Raw layer surgery before canonicalization, plus the parameter
/// inheritance map: per raw layer, the parent layer whose slice carries
/// over (-1 for fresh entries). Removal shifts later parent slices down
/// with the layer; mutation and amplification give edited and shifted
/// layers fresh entries.
struct OffspringEdit {
    AnsatzPath raw;
    std::vector<int> parent_layer;
};

class AnsatzSpace {
  public:
    virtual ~AnsatzSpace() = default;

    virtual int n_qubits() const = 0;
    /// Every path in the space has exactly this many layers.
    virtual int max_layers() const = 0;
    /// Size of the per-layer state alphabet.
    virtual int n_states() const = 0;
    virtual int state_param_count(StateId id) const = 0;
    /// Identity of the all-empty layer state.
    virtual StateId empty_state() const { return 0; }

    /// Sum of per-layer parameter counts under this space's alphabet.
    int path_param_count(const AnsatzPath &path) const {
        int total = 0;
        for (StateId id : path.layers)
            total += state_param_count(id);
        return total;
    }

    virtual bool check(const AnsatzPath &path,
                       ConstraintReport *report = nullptr) const = 0;

    /// Exact number of valid paths.
    virtual long long count_paths() const = 0;
    /// All valid paths; throws when the space exceeds the budget.
    virtual std::vector<AnsatzPath> enumerate() const = 0;

    virtual AnsatzPath sample_uniform(std::mt19937_64 &rng) const = 0;
    /// False when sample_uniform falls back to approximate layer-wise
    /// sampling; surfaced in run records.
    virtual bool sampling_exact() const = 0;

    /// Rewrites a raw sequence to its valid representative, dropping or
    /// merging parameters along with their gates. Identity on valid
    /// paths.
    virtual AnsatzPath canonicalize(const AnsatzPath &raw,
                                    ParameterVector &params) const = 0;

    /// One raw operator application: mutation replaces a uniformly
    /// chosen layer's state with a uniformly chosen different state;
    /// removal drops a uniformly chosen non-empty layer and shifts later
    /// layers down (no-op on the all-empty path); amplification inserts
    /// a uniformly chosen state at a uniformly chosen slot, dropping the
    /// trailing layer. The result is not yet canonicalized.
    OffspringEdit propose_edit(const AnsatzPath &path, GeneticOp op,
                               std::mt19937_64 &rng) const;

    /// Genetic operators: propose_edit followed by canonicalization.
    /// An edit that canonicalizes back to the input is retried a bounded
    /// number of times, then returned as-is.
    AnsatzPath mutate(const AnsatzPath &path, std::mt19937_64 &rng) const;
    AnsatzPath remove_layer(const AnsatzPath &path,
                            std::mt19937_64 &rng) const;
    AnsatzPath amplify(const AnsatzPath &path, std::mt19937_64 &rng) const;

    /// Path text round-trip, one layer per line.
    virtual std::string serialize(const AnsatzPath &path) const = 0;
    virtual AnsatzPath parse(const std::string &text) const = 0;
};

} // namespace vavqe
