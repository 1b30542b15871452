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

#include "vavqe/statevector.hpp"

#include <stdexcept>

namespace vavqe {

using Cplx = std::complex<double>;

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 20) {
        throw std::invalid_argument("Statevector: unsupported qubit count");
    }
    amp_ = Eigen::VectorXcd::Zero(1L << n_qubits);
    amp_(0) = 1.0;
}

void Statevector::apply_single(int qubit, const Mat2 &u) {
    const long d = dim();
    const long m = mask(qubit);
    const Cplx u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    for (long base = 0; base < d; ++base) {
        if (base & m) {
            continue;
        }
        const Cplx a = amp_(base);
        const Cplx b = amp_(base | m);
        amp_(base) = u00 * a + u01 * b;
        amp_(base | m) = u10 * a + u11 * b;
    }
}

void Statevector::apply_ry(int qubit, double theta) {
    apply_single(qubit, ry_matrix(theta));
}

void Statevector::apply_rz(int qubit, double theta) {
    apply_single(qubit, rz_matrix(theta));
}

void Statevector::apply_cnot(int control, int target) {
    const long d = dim();
    const long cm = mask(control);
    const long tm = mask(target);
    for (long i = 0; i < d; ++i) {
        if ((i & cm) && !(i & tm)) {
            std::swap(amp_(i), amp_(i | tm));
        }
    }
}

double Statevector::expectation_word(const std::string &word) const {
    const int n = n_qubits_;
    const long d = dim();
    long flip = 0;
    for (int q = 0; q < n; ++q) {
        if (word[q] == 'X' || word[q] == 'Y') {
            flip |= mask(q);
        }
    }
    // (P psi)_r = phase(r^flip) psi_{r^flip}.
    Cplx total(0.0, 0.0);
    for (long r = 0; r < d; ++r) {
        const long j = r ^ flip;
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
        total += std::conj(amp_(r)) * phase * amp_(j);
    }
    return total.real();
}

double Statevector::expectation(const PauliSum &h) const {
    if (h.n_qubits() != n_qubits_) {
        throw std::invalid_argument("expectation: qubit count mismatch");
    }
    double e = 0.0;
    for (const auto &t : h.terms()) {
        e += t.coeff * expectation_word(t.word);
    }
    return e;
}

} // namespace vavqe
