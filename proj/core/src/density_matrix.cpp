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

#include "vavqe/density_matrix.hpp"

#include <stdexcept>

namespace vavqe {

using Cplx = std::complex<double>;

DensityMatrix::DensityMatrix(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 12) {
        throw std::invalid_argument("DensityMatrix: unsupported qubit count");
    }
    const long d = 1L << n_qubits;
    rho_ = Eigen::MatrixXcd::Zero(d, d);
    rho_(0, 0) = 1.0;
}

DensityMatrix::DensityMatrix(int n_qubits, Eigen::MatrixXcd rho)
    : n_qubits_(n_qubits), rho_(std::move(rho)) {
    const long d = 1L << n_qubits;
    if (rho_.rows() != d || rho_.cols() != d) {
        throw std::invalid_argument("DensityMatrix: shape mismatch");
    }
}

void DensityMatrix::apply_single(int qubit, const Mat2 &u) {
    const long d = dim();
    const long m = mask(qubit);
    const Cplx u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    // Left factor: rows paired by the qubit bit, every column.
    for (long col = 0; col < d; ++col) {
        for (long base = 0; base < d; ++base) {
            if (base & m) {
                continue;
            }
            const Cplx a = rho_(base, col);
            const Cplx b = rho_(base | m, col);
            rho_(base, col) = u00 * a + u01 * b;
            rho_(base | m, col) = u10 * a + u11 * b;
        }
    }
    // Right factor U^dagger: columns paired, conjugated coefficients.
    const Cplx c00 = std::conj(u00), c01 = std::conj(u01);
    const Cplx c10 = std::conj(u10), c11 = std::conj(u11);
    for (long row = 0; row < d; ++row) {
        for (long base = 0; base < d; ++base) {
            if (base & m) {
                continue;
            }
            const Cplx a = rho_(row, base);
            const Cplx b = rho_(row, base | m);
            rho_(row, base) = a * c00 + b * c01;
            rho_(row, base | m) = a * c10 + b * c11;
        }
    }
}

void DensityMatrix::apply_ry(int qubit, double theta) {
    apply_single(qubit, ry_matrix(theta));
}

void DensityMatrix::apply_rz(int qubit, double theta) {
    apply_single(qubit, rz_matrix(theta));
}

void DensityMatrix::apply_cnot(int control, int target) {
    const long d = dim();
    const long cm = mask(control);
    const long tm = mask(target);
    // Permutation i -> i ^ tm on rows with the control bit set, applied
    // to both sides. Swapping rows then columns realizes X on the
    // target conditioned on the control.
    for (long row = 0; row < d; ++row) {
        if ((row & cm) && !(row & tm)) {
            rho_.row(row).swap(rho_.row(row | tm));
        }
    }
    for (long col = 0; col < d; ++col) {
        if ((col & cm) && !(col & tm)) {
            rho_.col(col).swap(rho_.col(col | tm));
        }
    }
}

void DensityMatrix::depolarize(int qubit, double p) {
    if (p == 0.0) {
        return;
    }
    Mat2 x, y, z;
    x << 0, 1, 1, 0;
    y << Cplx(0, 0), Cplx(0, -1), Cplx(0, 1), Cplx(0, 0);
    z << 1, 0, 0, -1;
    DensityMatrix dx(*this), dy(*this), dz(*this);
    dx.apply_single(qubit, x);
    dy.apply_single(qubit, y);
    dz.apply_single(qubit, z);
    rho_ = (1.0 - p) * rho_ +
           (p / 3.0) * (dx.rho_ + dy.rho_ + dz.rho_);
}

double DensityMatrix::expectation_word(const std::string &word) const {
    const int n = n_qubits_;
    const long d = dim();
    long flip = 0;
    for (int q = 0; q < n; ++q) {
        if (word[q] == 'X' || word[q] == 'Y') {
            flip |= mask(q);
        }
    }
    // Tr[P rho] = sum_i P_{i, i^flip} rho_{i^flip, i}; each column of a
    // Pauli word has a single nonzero entry with a unit phase.
    Cplx total(0.0, 0.0);
    for (long j = 0; j < d; ++j) {
        Cplx phase(1.0, 0.0);
        for (int q = 0; q < n; ++q) {
            const bool bit = (j & mask(q)) != 0;
            const char c = word[q];
            if (c == 'Y') {
                phase *= bit ? Cplx(0.0, -1.0) : Cplx(0.0, 1.0);
            } else if (c == 'Z' && bit) {
                phase = -phase;
            }
        }
        total += phase * rho_(j, j ^ flip);
    }
    return total.real();
}

double DensityMatrix::expectation(const PauliSum &h) const {
    if (h.n_qubits() != n_qubits_) {
        throw std::invalid_argument("expectation: qubit count mismatch");
    }
    double e = 0.0;
    for (const auto &t : h.terms()) {
        e += t.coeff * expectation_word(t.word);
    }
    return e;
}

double DensityMatrix::trace_real() const { return rho_.trace().real(); }

bool DensityMatrix::is_physical(double tol) const {
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > tol) {
        return false;
    }
    if (std::abs(trace_real() - 1.0) > tol) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho_);
    return solver.eigenvalues().minCoeff() >= -tol;
}

} // namespace vavqe
