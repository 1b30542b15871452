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

#include "vavqe/space.hpp"

#include <stdexcept>

#include "vavqe/rng.hpp"

namespace vavqe {

namespace {

// Edits that canonicalize back to the input are retried this many times.
constexpr int kOperatorRetries = 8;

} // namespace

OffspringEdit AnsatzSpace::propose_edit(const AnsatzPath &path, GeneticOp op,
                                        std::mt19937_64 &rng) const {
    const int nl = max_layers();
    if (static_cast<int>(path.layers.size()) != nl)
        throw std::invalid_argument("path layer count does not match space");

    OffspringEdit e;
    e.raw = path;
    e.parent_layer.resize(nl);
    for (int l = 0; l < nl; ++l)
        e.parent_layer[l] = l;

    switch (op) {
    case GeneticOp::kMutate: {
        const int j = static_cast<int>(bounded_u64(rng, nl));
        const StateId cur = path.layers[j];
        StateId next = static_cast<StateId>(bounded_u64(rng, n_states() - 1));
        if (next >= cur)
            ++next;
        e.raw.layers[j] = next;
        e.parent_layer[j] = -1;
        break;
    }
    case GeneticOp::kRemoveLayer: {
        std::vector<int> candidates;
        for (int l = 0; l < nl; ++l)
            if (path.layers[l] != empty_state())
                candidates.push_back(l);
        if (candidates.empty())
            break;  // all-empty path: nothing to remove
        const int j =
            candidates[bounded_u64(rng, candidates.size())];
        e.raw.layers.erase(e.raw.layers.begin() + j);
        e.raw.layers.push_back(empty_state());
        for (int l = j; l < nl - 1; ++l)
            e.parent_layer[l] = l + 1;  // shifted slices follow the layer
        e.parent_layer[nl - 1] = -1;
        break;
    }
    case GeneticOp::kAmplify: {
        const int j = static_cast<int>(bounded_u64(rng, nl));
        const StateId inserted =
            static_cast<StateId>(bounded_u64(rng, n_states()));
        e.raw.layers.insert(e.raw.layers.begin() + j, inserted);
        e.raw.layers.pop_back();
        e.parent_layer[j] = -1;
        for (int l = j + 1; l < nl; ++l)
            e.parent_layer[l] = -1;  // shifted up: index changed, fresh entry
        break;
    }
    }
    return e;
}

namespace {

AnsatzPath canonical_edit(const AnsatzSpace &space, const AnsatzPath &path,
                          GeneticOp op, std::mt19937_64 &rng) {
    for (int attempt = 0; attempt < kOperatorRetries; ++attempt) {
        OffspringEdit e = space.propose_edit(path, op, rng);
        ParameterVector params(space.path_param_count(e.raw), 0.0);
        AnsatzPath canonical = space.canonicalize(e.raw, params);
        if (!(canonical == path))
            return canonical;
    }
    return path;
}

} // namespace

AnsatzPath AnsatzSpace::mutate(const AnsatzPath &path,
                               std::mt19937_64 &rng) const {
    return canonical_edit(*this, path, GeneticOp::kMutate, rng);
}

AnsatzPath AnsatzSpace::remove_layer(const AnsatzPath &path,
                                     std::mt19937_64 &rng) const {
    return canonical_edit(*this, path, GeneticOp::kRemoveLayer, rng);
}

AnsatzPath AnsatzSpace::amplify(const AnsatzPath &path,
                                std::mt19937_64 &rng) const {
    return canonical_edit(*this, path, GeneticOp::kAmplify, rng);
}

} // namespace vavqe
