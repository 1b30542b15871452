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

#include "vavqe/circuit.hpp"

#include <sstream>
#include <stdexcept>

namespace vavqe {

int AnsatzPath::depth() const {
    const auto &cat = layer_catalog(n_qubits);
    int d = 0;
    for (int l = 0; l < max_layers(); ++l) {
        if (!cat.state(layers[l]).empty()) {
            d = l + 1;
        }
    }
    return d;
}

int AnsatzPath::param_count() const {
    const auto &cat = layer_catalog(n_qubits);
    int c = 0;
    for (StateId id : layers) {
        c += cat.param_count(id);
    }
    return c;
}

std::string serialize_path(const AnsatzPath &path) {
    const auto &cat = layer_catalog(path.n_qubits);
    std::string out;
    for (int l = 0; l < path.max_layers(); ++l) {
        if (l > 0) {
            out += '\n';
        }
        out += serialize_layer(cat.state(path.layers[l]));
    }
    return out;
}

AnsatzPath parse_path(const std::string &text, int n_qubits,
                      int max_layers) {
    const auto &cat = layer_catalog(n_qubits);
    AnsatzPath path(n_qubits, max_layers);
    std::istringstream in(text);
    std::string line;
    int l = 0;
    while (std::getline(in, line)) {
        if (l >= max_layers) {
            throw std::invalid_argument("parse_path: too many layers");
        }
        path.layers[l] = cat.id_of(parse_layer(line, n_qubits));
        ++l;
    }
    return path;
}

std::vector<GateOp> flatten_path(const AnsatzPath &path) {
    const auto &cat = layer_catalog(path.n_qubits);
    std::vector<GateOp> ops;
    int param_index = 0;
    for (StateId id : path.layers) {
        const LayerState &s = cat.state(id);
        for (int q = 0; q < path.n_qubits; ++q) {
            if (s.rots[q] == Rot::kRy) {
                ops.push_back({GateOp::Kind::kRy, q, -1, param_index++});
            } else if (s.rots[q] == Rot::kRz) {
                ops.push_back({GateOp::Kind::kRz, q, -1, param_index++});
            }
        }
        for (int c = 0; c < path.n_qubits; ++c) {
            if (s.has_cnot(c)) {
                ops.push_back({GateOp::Kind::kCnot, c,
                               (c + 1) % path.n_qubits, -1});
            }
        }
    }
    return ops;
}

void apply_path(DensityMatrix &state, const AnsatzPath &path,
                const ParameterVector &params, const NoiseModel &noise) {
    if (static_cast<int>(params.size()) != path.param_count()) {
        throw std::invalid_argument("apply_path: parameter count mismatch");
    }
    for (const GateOp &op : flatten_path(path)) {
        switch (op.kind) {
        case GateOp::Kind::kRy:
            state.apply_ry(op.q0, params[op.param_index]);
            if (noise.p1 != 0.0) {
                state.depolarize(op.q0, noise.p1);
            }
            break;
        case GateOp::Kind::kRz:
            state.apply_rz(op.q0, params[op.param_index]);
            if (noise.p1 != 0.0) {
                state.depolarize(op.q0, noise.p1);
            }
            break;
        case GateOp::Kind::kCnot:
            state.apply_cnot(op.q0, op.q1);
            if (noise.p2 != 0.0) {
                state.depolarize(op.q0, noise.p2);
                state.depolarize(op.q1, noise.p2);
            }
            break;
        }
    }
}

void apply_path(Statevector &state, const AnsatzPath &path,
                const ParameterVector &params) {
    if (static_cast<int>(params.size()) != path.param_count()) {
        throw std::invalid_argument("apply_path: parameter count mismatch");
    }
    for (const GateOp &op : flatten_path(path)) {
        switch (op.kind) {
        case GateOp::Kind::kRy:
            state.apply_ry(op.q0, params[op.param_index]);
            break;
        case GateOp::Kind::kRz:
            state.apply_rz(op.q0, params[op.param_index]);
            break;
        case GateOp::Kind::kCnot:
            state.apply_cnot(op.q0, op.q1);
            break;
        }
    }
}

} // namespace vavqe
