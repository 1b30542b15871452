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
 * @file path.hpp
 * Ansatz paths: fixed-length sequences of layer-state ids, trailing
 * layers empty. The structural half of a variable ansatz; parameters
 * live in ParameterVector.
 */
#pragma once

#include <string>
#include <vector>

#include "vavqe/layer_state.hpp"

namespace vavqe {

/// Ordered rotation angles in radians, one per parameterized gate of a
/// path, layer-major and qubit-ascending within a layer. Angles are
/// stored unwrapped.
using ParameterVector = std::vector<double>;

/// A sequence of exactly `max_layers` layer states; id 0 is the empty
/// state, so trailing zeros represent unused layers.
struct AnsatzPath {
    int n_qubits = 0;
    std::vector<StateId> layers;

    AnsatzPath() = default;
    AnsatzPath(int n, int max_layers)
        : n_qubits(n), layers(max_layers, 0) {}

    int max_layers() const { return static_cast<int>(layers.size()); }

    /// Number of non-empty leading layers.
    int depth() const;

    /// Total parameterized-gate count |theta|.
    int param_count() const;

    bool operator==(const AnsatzPath &other) const = default;
    auto operator<=>(const AnsatzPath &other) const = default;
};

/// One layer per line (empty line = empty layer), exactly max_layers
/// lines joined by '\n'. Round-trips exactly.
std::string serialize_path(const AnsatzPath &path);
AnsatzPath parse_path(const std::string &text, int n_qubits,
                      int max_layers);

} // namespace vavqe
