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
 * @file pool.hpp
 * Weight sharing across ansatzes: the (state, layer) parameter pool, the
 * candidate prefix tree with leaf/training counts, and double
 * epsilon-greedy path sampling.
 */
#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <utility>

#include "vavqe/space.hpp"

namespace vavqe {

/// Parameters keyed by (state id, layer index in [1, N_l]). Entries are
/// materialized lazily: reads of unwritten entries yield zeros without
/// mutating the pool. Every path containing (s, l) shares that slice.
class ParameterPool {
  public:
    explicit ParameterPool(const AnsatzSpace &space) : space_(&space) {}

    /// Direct sum of the per-layer slices, layer order.
    ParameterVector lookup(const AnsatzPath &path) const;

    /// Writes each layer slice back. Throws on length mismatch.
    void update(const AnsatzPath &path, const ParameterVector &params);

    /// Writes one (state, layer) slice; checkpoint restore and tests.
    void set_entry(StateId id, int layer, ParameterVector values);

    const std::map<std::pair<StateId, int>, ParameterVector> &
    entries() const {
        return entries_;
    }

    const AnsatzSpace &space() const { return *space_; }

  private:
    const AnsatzSpace *space_;
    std::map<std::pair<StateId, int>, ParameterVector> entries_;
};

/// Prefix tree over trained paths. Internal consistency: c_l of a node
/// equals the sum over children; every depth-N_l leaf has c_l = 1.
class CandidateTree {
  public:
    struct Node {
        long long c_l = 0;
        long long c_t = 0;
        std::map<StateId, std::unique_ptr<Node>> children;
    };

    /// Records one training event: creates missing prefix nodes, bumps
    /// c_l along the root path when the leaf is new, and increments c_t
    /// on every node including the root.
    void insert_trained(const AnsatzPath &path);

    long long leaf_count() const { return root_.c_l; }
    const Node &root() const { return root_; }

    /// Root-to-leaf walk: child probability (c_l + eta c_t) / sum.
    /// eta is drawn once per walk (1 with probability epsilon2).
    AnsatzPath sample(const AnsatzSpace &space, double epsilon2,
                      std::mt19937_64 &rng) const;

  private:
    Node root_;
};

struct GreedyConfig {
    double epsilon1 = 0.8;  // tree walk vs uniform space draw
    double epsilon2 = 0.8;  // count-greedy vs uniform eta
};

/// Double epsilon-greedy draw: the tree branch with probability epsilon1
/// (forced to uniform while the tree is empty), else sample_uniform.
AnsatzPath sample_path(const CandidateTree &tree, const AnsatzSpace &space,
                       const GreedyConfig &cfg, std::mt19937_64 &rng);

/// Checkpoint text: pool entries sorted by key, then tree nodes in
/// depth-first order. Round-trips exactly.
void save_checkpoint(const ParameterPool &pool, const CandidateTree &tree,
                     std::ostream &out);
std::pair<ParameterPool, CandidateTree>
load_checkpoint(std::istream &in, const AnsatzSpace &space);

} // namespace vavqe
