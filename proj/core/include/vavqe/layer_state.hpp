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
 * @file layer_state.hpp
 * Layer states over ring connectivity and the dense per-qubit-count
 * catalog that assigns every state a stable integer id.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vavqe {

/// Per-qubit rotation choice inside one layer.
enum class Rot : std::uint8_t { kNone = 0, kRy = 1, kRz = 2 };

/// Identifier of a LayerState within a catalog. Dense in
/// [0, catalog size); 0 is always the empty state.
using StateId = std::int32_t;

/// One layer: a rotation choice per qubit plus a qubit-disjoint set of
/// directed ring CNOTs, where edge c means CNOT(control=c,
/// target=(c+1) mod n). Within a layer the single-qubit sublayer acts
/// before the CNOT sublayer.
struct LayerState {
    std::vector<Rot> rots;    // size n
    std::uint32_t cnots = 0;  // bit c set = edge c present

    int n_qubits() const { return static_cast<int>(rots.size()); }
    bool empty() const;
    int param_count() const;  // number of Ry + Rz rotations
    bool has_cnot(int control) const { return (cnots >> control) & 1; }

    bool operator==(const LayerState &other) const = default;
};

/// All well-formed LayerStates for one qubit count, in id order:
/// id = (base-3 rotation index, qubit 0 most significant) * S + (rank
/// of the CNOT subset among valid subsets sorted by mask), where S is
/// the number of disjoint ring-edge subsets. Immutable after
/// construction and shareable between threads.
class LayerCatalog {
  public:
    explicit LayerCatalog(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    int size() const { return static_cast<int>(states_.size()); }
    int n_cnot_subsets() const { return static_cast<int>(subsets_.size()); }

    const LayerState &state(StateId id) const;
    StateId id_of(const LayerState &state) const;
    int param_count(StateId id) const { return param_counts_[id]; }

    /// Valid ring-edge subsets (qubit-disjoint), ascending by mask.
    const std::vector<std::uint32_t> &cnot_subsets() const {
        return subsets_;
    }

  private:
    int n_qubits_;
    std::vector<std::uint32_t> subsets_;
    std::vector<int> subset_rank_;  // mask -> rank, -1 when invalid
    std::vector<LayerState> states_;
    std::vector<int> param_counts_;
};

/// Shared per-n catalog instance (built on first use, then immutable).
const LayerCatalog &layer_catalog(int n_qubits);

/// Textual form used in run records, e.g. "q0:Ry q2:Rz cx:1>2";
/// the empty state serializes to "". Round-trips exactly.
std::string serialize_layer(const LayerState &state);
LayerState parse_layer(const std::string &text, int n_qubits);

} // namespace vavqe
