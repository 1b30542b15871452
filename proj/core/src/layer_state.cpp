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

#include "vavqe/layer_state.hpp"

#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace vavqe {

bool LayerState::empty() const {
    if (cnots != 0) {
        return false;
    }
    for (Rot r : rots) {
        if (r != Rot::kNone) {
            return false;
        }
    }
    return true;
}

int LayerState::param_count() const {
    int c = 0;
    for (Rot r : rots) {
        if (r != Rot::kNone) {
            ++c;
        }
    }
    return c;
}

namespace {

// Edge c occupies qubits {c, (c+1) mod n}. A subset is valid when no
// qubit is shared. For n = 2 the two directed edges (0>1) and (1>0)
// conflict, leaving three subsets. A single qubit has no ring edges.
bool disjoint_subset(std::uint32_t mask, int n) {
    if (n < 2) {
        return mask == 0;
    }
    std::uint32_t used = 0;
    for (int c = 0; c < n; ++c) {
        if ((mask >> c) & 1) {
            const std::uint32_t qs =
                (1u << c) | (1u << ((c + 1) % n));
            if (used & qs) {
                return false;
            }
            used |= qs;
        }
    }
    return true;
}

} // namespace

LayerCatalog::LayerCatalog(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 16) {
        throw std::invalid_argument("LayerCatalog: unsupported qubit count");
    }
    subset_rank_.assign(1u << n_qubits, -1);
    for (std::uint32_t mask = 0; mask < (1u << n_qubits); ++mask) {
        if (disjoint_subset(mask, n_qubits)) {
            subset_rank_[mask] = static_cast<int>(subsets_.size());
            subsets_.push_back(mask);
        }
    }
    int rot_count = 1;
    for (int q = 0; q < n_qubits; ++q) {
        rot_count *= 3;
    }
    states_.reserve(static_cast<std::size_t>(rot_count) * subsets_.size());
    std::vector<Rot> rots(n_qubits, Rot::kNone);
    for (int r = 0; r < rot_count; ++r) {
        int v = r;
        for (int q = n_qubits - 1; q >= 0; --q) {
            rots[q] = static_cast<Rot>(v % 3);
            v /= 3;
        }
        for (std::uint32_t mask : subsets_) {
            states_.push_back(LayerState{rots, mask});
        }
    }
    param_counts_.reserve(states_.size());
    for (const auto &s : states_) {
        param_counts_.push_back(s.param_count());
    }
}

const LayerState &LayerCatalog::state(StateId id) const {
    if (id < 0 || id >= size()) {
        throw std::out_of_range("LayerCatalog: bad state id");
    }
    return states_[id];
}

StateId LayerCatalog::id_of(const LayerState &state) const {
    if (state.n_qubits() != n_qubits_) {
        throw std::invalid_argument("LayerCatalog: qubit count mismatch");
    }
    int rot_index = 0;
    for (int q = 0; q < n_qubits_; ++q) {
        rot_index = rot_index * 3 + static_cast<int>(state.rots[q]);
    }
    if (state.cnots >= subset_rank_.size() ||
        subset_rank_[state.cnots] < 0) {
        throw std::invalid_argument("LayerCatalog: invalid CNOT subset");
    }
    return rot_index * n_cnot_subsets() + subset_rank_[state.cnots];
}

const LayerCatalog &layer_catalog(int n_qubits) {
    static std::map<int, std::unique_ptr<LayerCatalog>> catalogs;
    auto it = catalogs.find(n_qubits);
    if (it == catalogs.end()) {
        it = catalogs
                 .emplace(n_qubits,
                          std::make_unique<LayerCatalog>(n_qubits))
                 .first;
    }
    return *it->second;
}

std::string serialize_layer(const LayerState &state) {
    std::ostringstream out;
    bool first = true;
    for (int q = 0; q < state.n_qubits(); ++q) {
        if (state.rots[q] == Rot::kNone) {
            continue;
        }
        if (!first) {
            out << ' ';
        }
        out << 'q' << q << ':'
            << (state.rots[q] == Rot::kRy ? "Ry" : "Rz");
        first = false;
    }
    for (int c = 0; c < state.n_qubits(); ++c) {
        if (!state.has_cnot(c)) {
            continue;
        }
        if (!first) {
            out << ' ';
        }
        out << "cx:" << c << '>' << (c + 1) % state.n_qubits();
        first = false;
    }
    return out.str();
}

LayerState parse_layer(const std::string &text, int n_qubits) {
    LayerState state;
    state.rots.assign(n_qubits, Rot::kNone);
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok.rfind("cx:", 0) == 0) {
            const auto sep = tok.find('>');
            if (sep == std::string::npos) {
                throw std::invalid_argument("parse_layer: bad token " + tok);
            }
            const int c = std::stoi(tok.substr(3, sep - 3));
            const int t = std::stoi(tok.substr(sep + 1));
            if (c < 0 || c >= n_qubits || t != (c + 1) % n_qubits) {
                throw std::invalid_argument("parse_layer: bad edge " + tok);
            }
            state.cnots |= 1u << c;
        } else if (tok.size() > 2 && tok[0] == 'q') {
            const auto sep = tok.find(':');
            if (sep == std::string::npos) {
                throw std::invalid_argument("parse_layer: bad token " + tok);
            }
            const int q = std::stoi(tok.substr(1, sep - 1));
            const std::string rot = tok.substr(sep + 1);
            if (q < 0 || q >= n_qubits) {
                throw std::invalid_argument("parse_layer: bad qubit " + tok);
            }
            if (rot == "Ry") {
                state.rots[q] = Rot::kRy;
            } else if (rot == "Rz") {
                state.rots[q] = Rot::kRz;
            } else {
                throw std::invalid_argument("parse_layer: bad rotation " +
                                            tok);
            }
        } else {
            throw std::invalid_argument("parse_layer: bad token " + tok);
        }
    }
    if (!disjoint_subset(state.cnots, n_qubits)) {
        throw std::invalid_argument("parse_layer: overlapping CNOTs");
    }
    return state;
}

} // namespace vavqe
