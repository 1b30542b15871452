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
 * @file density_matrix.hpp
 * Dense 2^n x 2^n density-matrix backend. The default backend for all
 * cost evaluations; supports the single-qubit depolarizing channel.
 */
#pragma once

#include <Eigen/Dense>

#include "vavqe/gates.hpp"
#include "vavqe/pauli.hpp"

namespace vavqe {

class DensityMatrix {
  public:
    /// Initializes |0...0><0...0| on `n_qubits` qubits.
    explicit DensityMatrix(int n_qubits);

    /// Constructs from an explicit matrix; used for custom input states.
    DensityMatrix(int n_qubits, Eigen::MatrixXcd rho);

    int n_qubits() const { return n_qubits_; }
    long dim() const { return rho_.rows(); }
    const Eigen::MatrixXcd &matrix() const { return rho_; }

    /// rho -> (U x I) rho (U x I)^dagger on one qubit.
    void apply_single(int qubit, const Mat2 &u);
    void apply_ry(int qubit, double theta);
    void apply_rz(int qubit, double theta);
    void apply_cnot(int control, int target);

    /// Single-qubit depolarizing channel with strength p:
    /// rho -> (1-p) rho + p/3 (X rho X + Y rho Y + Z rho Z).
    void depolarize(int qubit, double p);

    /// Tr[P rho] for a single Pauli word (real part; exact for
    /// Hermitian rho).
    double expectation_word(const std::string &word) const;

    /// Tr[H rho] as the weighted sum over terms.
    double expectation(const PauliSum &h) const;

    double trace_real() const;

    /// Hermitian within tol, trace 1 within tol, all eigenvalues
    /// >= -tol.
    bool is_physical(double tol = 1e-10) const;

  private:
    // Qubit 0 occupies the most significant bit of the index.
    long mask(int qubit) const { return 1L << (n_qubits_ - 1 - qubit); }

    int n_qubits_;
    Eigen::MatrixXcd rho_;
};

} // namespace vavqe
