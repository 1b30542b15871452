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

#include "vavqe/pauli.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace vavqe {

namespace {

bool valid_word(const std::string &word) {
    if (word.empty()) {
        return false;
    }
    return std::all_of(word.begin(), word.end(), [](char c) {
        return c == 'I' || c == 'X' || c == 'Y' || c == 'Z';
    });
}

} // namespace

PauliSum::PauliSum(int n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits) {
    if (n_qubits < 1) {
        throw std::invalid_argument("PauliSum: qubit count must be positive");
    }
    std::map<std::string, double> merged;
    for (const auto &t : terms) {
        if (!valid_word(t.word)) {
            throw std::invalid_argument("PauliSum: invalid Pauli word '" +
                                        t.word + "'");
        }
        if (static_cast<int>(t.word.size()) != n_qubits) {
            throw std::invalid_argument(
                "PauliSum: word '" + t.word + "' does not act on " +
                std::to_string(n_qubits) + " qubits");
        }
        if (!std::isfinite(t.coeff)) {
            throw std::invalid_argument("PauliSum: non-finite coefficient");
        }
        merged[t.word] += t.coeff;
    }
    for (const auto &[word, coeff] : merged) {
        if (coeff != 0.0) {
            terms_.push_back({coeff, word});
        }
    }
}

PauliSum PauliSum::scaled(double factor) const {
    std::vector<PauliTerm> t = terms_;
    for (auto &term : t) {
        term.coeff *= factor;
    }
    return PauliSum(n_qubits_, std::move(t));
}

PauliSum parse_hamiltonian(std::istream &in) {
    std::vector<PauliTerm> terms;
    std::string line;
    int line_no = 0;
    int n_qubits = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) {
            line.erase(pos);
        }
        std::istringstream ls(line);
        std::string coeff_tok, word_tok, extra;
        if (!(ls >> coeff_tok)) {
            continue; // blank or comment-only line
        }
        if (!(ls >> word_tok) || (ls >> extra)) {
            throw std::invalid_argument(
                "parse_hamiltonian: malformed line " + std::to_string(line_no));
        }
        double coeff = 0.0;
        std::size_t used = 0;
        try {
            coeff = std::stod(coeff_tok, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != coeff_tok.size() || !std::isfinite(coeff)) {
            throw std::invalid_argument(
                "parse_hamiltonian: bad coefficient at line " +
                std::to_string(line_no));
        }
        if (!valid_word(word_tok)) {
            throw std::invalid_argument(
                "parse_hamiltonian: bad Pauli word at line " +
                std::to_string(line_no));
        }
        if (n_qubits < 0) {
            n_qubits = static_cast<int>(word_tok.size());
        } else if (static_cast<int>(word_tok.size()) != n_qubits) {
            throw std::invalid_argument(
                "parse_hamiltonian: inconsistent word length at line " +
                std::to_string(line_no));
        }
        terms.push_back({coeff, word_tok});
    }
    if (n_qubits < 0) {
        throw std::invalid_argument("parse_hamiltonian: no terms found");
    }
    return PauliSum(n_qubits, std::move(terms));
}

PauliSum parse_hamiltonian(const std::string &text) {
    std::istringstream in(text);
    return parse_hamiltonian(in);
}

std::string serialize_hamiltonian(const PauliSum &h) {
    std::string out;
    char buf[64];
    for (const auto &t : h.terms()) {
        std::snprintf(buf, sizeof(buf), "%.17g", t.coeff);
        out += buf;
        out += ' ';
        out += t.word;
        out += '\n';
    }
    return out;
}

PauliSum builtin_hamiltonian(const std::string &name, int n_qubits,
                             const std::vector<double> &params) {
    if (n_qubits < 2) {
        throw std::invalid_argument("builtin_hamiltonian: need n >= 2");
    }
    const int n_bonds = (n_qubits == 2) ? 1 : n_qubits;
    std::vector<PauliTerm> terms;
    auto bond_word = [&](int bond, char letter) {
        std::string w(n_qubits, 'I');
        w[bond] = letter;
        w[(bond + 1) % n_qubits] = letter;
        return w;
    };
    if (name == "tfim") {
        const double g = params.empty() ? 1.0 : params[0];
        for (int b = 0; b < n_bonds; ++b) {
            terms.push_back({-1.0, bond_word(b, 'Z')});
        }
        for (int q = 0; q < n_qubits; ++q) {
            std::string w(n_qubits, 'I');
            w[q] = 'X';
            terms.push_back({-g, w});
        }
    } else if (name == "heisenberg") {
        const double j = params.empty() ? 1.0 : params[0];
        for (int b = 0; b < n_bonds; ++b) {
            terms.push_back({j, bond_word(b, 'X')});
            terms.push_back({j, bond_word(b, 'Y')});
            terms.push_back({j, bond_word(b, 'Z')});
        }
    } else {
        throw std::invalid_argument("builtin_hamiltonian: unknown name '" +
                                    name + "'");
    }
    return PauliSum(n_qubits, std::move(terms));
}

double exact_ground_energy(const PauliSum &h, int max_qubits) {
    const int n = h.n_qubits();
    if (n > max_qubits) {
        throw std::invalid_argument("exact_ground_energy: dimension too large");
    }
    const long dim = 1L << n;
    using Cplx = std::complex<double>;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    // Each Pauli word is a signed-permutation matrix: column j has its
    // single nonzero entry at row j^flip with a phase determined by the
    // Y and Z positions. Qubit 0 maps to the most significant bit.
    for (const auto &t : h.terms()) {
        long flip = 0;
        for (int q = 0; q < n; ++q) {
            const char c = t.word[q];
            if (c == 'X' || c == 'Y') {
                flip |= 1L << (n - 1 - q);
            }
        }
        for (long j = 0; j < dim; ++j) {
            Cplx phase(1.0, 0.0);
            for (int q = 0; q < n; ++q) {
                const bool bit = (j >> (n - 1 - q)) & 1;
                const char c = t.word[q];
                if (c == 'Y') {
                    phase *= bit ? Cplx(0.0, -1.0) : Cplx(0.0, 1.0);
                } else if (c == 'Z' && bit) {
                    phase = -phase;
                }
            }
            m(j ^ flip, j) += t.coeff * phase;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    return solver.eigenvalues()(0);
}

} // namespace vavqe
