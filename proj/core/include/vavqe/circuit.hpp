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
 * @file circuit.hpp
 * Flattening paths to gate sequences and running them on a backend,
 * with the device noise model.
 */
#pragma once

#include <vector>

#include "vavqe/density_matrix.hpp"
#include "vavqe/path.hpp"
#include "vavqe/statevector.hpp"

namespace vavqe {

/// Depolarizing noise after every gate: strength p1 on the qubit of a
/// single-qubit gate; two independent strength-p2 channels on control
/// and target after a CNOT. Zero strengths mean noiseless.
struct NoiseModel {
    double p1 = 0.0;
    double p2 = 0.0;

    bool enabled() const { return p1 != 0.0 || p2 != 0.0; }

    static NoiseModel device_default() { return {1e-3, 1e-2}; }
};

/// One flattened gate in circuit order.
struct GateOp {
    enum class Kind { kRy, kRz, kCnot };
    Kind kind;
    int q0;           // rotation qubit, or CNOT control
    int q1;           // CNOT target, -1 for rotations
    int param_index;  // index into ParameterVector, -1 for CNOT
};

/// Circuit order: layers ascending; within a layer rotations by qubit
/// ascending, then CNOTs by control ascending.
std::vector<GateOp> flatten_path(const AnsatzPath &path);

void apply_path(DensityMatrix &state, const AnsatzPath &path,
                const ParameterVector &params,
                const NoiseModel &noise = {});
void apply_path(Statevector &state, const AnsatzPath &path,
                const ParameterVector &params);

} // namespace vavqe
