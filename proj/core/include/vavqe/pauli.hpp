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
 * @file pauli.hpp
 * Real-weighted Pauli sums: the observable type for every cost function,
 * with text-format parsing, built-in model Hamiltonians and a dense
 * exact ground energy solver.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vavqe {

/// One weighted Pauli word. `word` holds one letter of {I,X,Y,Z} per
/// qubit, qubit 0 first (leftmost letter acts on qubit 0).
struct PauliTerm {
    double coeff = 0.0;
    std::string word;
};

/// A sum of real-weighted Pauli words over a fixed qubit count.
/// Terms are merged by word and kept sorted; exact zero coefficients
/// are dropped. Immutable after construction.
class PauliSum {
  public:
    PauliSum() = default;

    /// Merges duplicate words, drops zero terms, validates letters.
    /// Throws std::invalid_argument on malformed words, inconsistent
    /// lengths or non-finite coefficients.
    PauliSum(int n_qubits, std::vector<PauliTerm> terms);

    int n_qubits() const { return n_qubits_; }
    const std::vector<PauliTerm> &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    PauliSum scaled(double factor) const;

  private:
    int n_qubits_ = 0;
    std::vector<PauliTerm> terms_;
};

/// Parses the one-term-per-line text format:
///   <real coefficient> <pauli word>
/// '#' starts a comment, blank lines are ignored. Throws
/// std::invalid_argument with the offending line number on error.
PauliSum parse_hamiltonian(std::istream &in);
PauliSum parse_hamiltonian(const std::string &text);

/// Inverse of parse_hamiltonian up to term order; round-trips exactly.
std::string serialize_hamiltonian(const PauliSum &h);

/// Built-in ring-coupled models.
///   tfim:       -sum_bonds Z_i Z_{i+1} - g sum_i X_i   (params: {g})
///   heisenberg:  J sum_bonds (XX + YY + ZZ)            (params: {J})
/// A ring on n qubits has n bonds for n >= 3 and one bond for n = 2.
/// Throws std::invalid_argument for unknown names.
PauliSum builtin_hamiltonian(const std::string &name, int n_qubits,
                             const std::vector<double> &params);

/// Minimum eigenvalue of the dense Hermitian matrix of `h`.
/// Throws std::invalid_argument when the dimension exceeds `max_qubits`.
double exact_ground_energy(const PauliSum &h, int max_qubits = 12);

} // namespace vavqe
