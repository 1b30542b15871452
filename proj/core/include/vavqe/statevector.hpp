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
 * @file statevector.hpp
 * Pure-state backend used to cross-check the density-matrix backend in
 * noiseless mode. No channel support.
 */
#pragma once

#include <Eigen/Dense>

#include "vavqe/gates.hpp"
#include "vavqe/pauli.hpp"

namespace vavqe {

class Statevector {
  public:
    /// Initializes |0...0>.
    explicit Statevector(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    long dim() const { return amp_.size(); }
    const Eigen::VectorXcd &amplitudes() const { return amp_; }

    void apply_single(int qubit, const Mat2 &u);
    void apply_ry(int qubit, double theta);
    void apply_rz(int qubit, double theta);
    void apply_cnot(int control, int target);

    /// <psi| P |psi> for one Pauli word.
    double expectation_word(const std::string &word) const;

    /// <psi| H |psi>.
    double expectation(const PauliSum &h) const;

    double norm() const { return amp_.norm(); }

  private:
    long mask(int qubit) const { return 1L << (n_qubits_ - 1 - qubit); }

    int n_qubits_;
    Eigen::VectorXcd amp_;
};

} // namespace vavqe
