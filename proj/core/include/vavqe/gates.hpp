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
 * @file gates.hpp
 * Native gate matrices. The device gate set is {Ry, Rz, CNOT} with CNOT
 * restricted to ring neighbours, target = (control + 1) mod n.
 */
#pragma once

#include <Eigen/Dense>
#include <complex>

namespace vavqe {

using Mat2 = Eigen::Matrix2cd;

inline Mat2 ry_matrix(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    Mat2 m;
    m << std::complex<double>(c, 0.0), std::complex<double>(-s, 0.0),
        std::complex<double>(s, 0.0), std::complex<double>(c, 0.0);
    return m;
}

inline Mat2 rz_matrix(double theta) {
    Mat2 m = Mat2::Zero();
    m(0, 0) = std::exp(std::complex<double>(0.0, -theta / 2.0));
    m(1, 1) = std::exp(std::complex<double>(0.0, theta / 2.0));
    return m;
}

} // namespace vavqe
