// Copyright 2026 The graphlogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphlogic/dense_state.h"

#include <bit>
#include <cmath>
#include <complex>

#include "graphlogic/errors.h"

namespace graphlogic {

namespace {

constexpr double kNormTolerance = 1e-10;
constexpr double kZeroBranch = 1e-12;

std::uint64_t mask_of(const BitVector &bits) {
    return bits.size() == 0 ? 0 : bits.words()[0];
}

}  // namespace

DenseState::DenseState(int n, Eigen::VectorXcd amps) : n_(n), amps_(std::move(amps)) {
    if (n < 0 || n > kMaxQubits) {
        throw ArgumentError("dense states support 0.." + std::to_string(kMaxQubits) + " qubits");
    }
    if (amps_.size() != (Eigen::Index{1} << n)) {
        throw ArgumentError("dense state on " + std::to_string(n) + " qubits needs 2^n amplitudes");
    }
    if (std::abs(amps_.norm() - 1.0) > kNormTolerance) {
        throw ArgumentError("dense state is not normalized");
    }
}

void DenseState::canonicalize_phase() {
    for (Eigen::Index i = 0; i < amps_.size(); i++) {
        if (std::abs(amps_[i]) > kZeroBranch) {
            amps_ *= std::conj(amps_[i]) / std::abs(amps_[i]);
            amps_[i] = std::abs(amps_[i]);
            return;
        }
    }
}

DenseState dense_state_vector(const Graph &g) {
    const int n = g.size();
    if (n > DenseState::kMaxQubits) {
        throw ResourceError("dense state vector refuses " + std::to_string(n) + " qubits; the limit is " +
                            std::to_string(DenseState::kMaxQubits));
    }
    const auto dim = std::size_t{1} << n;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; v++) {
        adj[static_cast<std::size_t>(v)] = g.adjacency().row(static_cast<std::size_t>(v))[0];
    }
    const double scale = std::pow(2.0, -0.5 * n);
    Eigen::VectorXcd amps(static_cast<Eigen::Index>(dim));
    for (std::size_t s = 0; s < dim; s++) {
        // Each edge inside s is counted from both endpoints.
        int twice_edges = 0;
        for (std::uint64_t rest = s; rest; rest &= rest - 1) {
            twice_edges += std::popcount(adj[static_cast<std::size_t>(std::countr_zero(rest))] & s);
        }
        amps[static_cast<Eigen::Index>(s)] = (twice_edges / 2) % 2 == 0 ? scale : -scale;
    }
    return DenseState(n, std::move(amps));
}

Eigen::VectorXcd apply_pauli(const PauliOperator &p, const Eigen::VectorXcd &psi) {
    if (psi.size() != (Eigen::Index{1} << p.qubits())) {
        throw ArgumentError("Pauli and state dimensions differ");
    }
    const std::uint64_t xm = mask_of(p.x());
    const std::uint64_t zm = mask_of(p.z());
    // sigma(x, z) = i^{|x & z|} X^x Z^z, since Y = iXZ.
    static const std::complex<double> kIPow[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const std::complex<double> factor = kIPow[(p.phase() + std::popcount(xm & zm)) & 3];
    Eigen::VectorXcd out(psi.size());
    for (Eigen::Index s = 0; s < psi.size(); s++) {
        const auto us = static_cast<std::uint64_t>(s);
        const double z_sign = std::popcount(us & zm) % 2 == 0 ? 1.0 : -1.0;
        out[static_cast<Eigen::Index>(us ^ xm)] = factor * z_sign * psi[s];
    }
    return out;
}

double expectation(const DenseState &s, const PauliOperator &p) {
    return s.amplitudes().dot(apply_pauli(p, s.amplitudes())).real();
}

double stabilizer_residual(const DenseState &s, const StabilizerTableau &t) {
    double worst = 0.0;
    for (const auto &g : t.generators()) {
        worst = std::max(worst, (apply_pauli(g, s.amplitudes()) - s.amplitudes()).norm());
    }
    return worst;
}

bool equal_up_to_phase(const DenseState &a, const DenseState &b, double tol) {
    if (a.qubits() != b.qubits()) {
        return false;
    }
    DenseState ca = a;
    DenseState cb = b;
    ca.canonicalize_phase();
    cb.canonicalize_phase();
    return (ca.amplitudes() - cb.amplitudes()).norm() <= tol;
}

std::size_t DenseMeasurement::index(int outcome) {
    if (outcome != 1 && outcome != -1) {
        throw ArgumentError("measurement outcome must be +1 or -1");
    }
    return outcome == 1 ? 0 : 1;
}

const DenseState &DenseMeasurement::branch(int outcome) const {
    const auto &post = post_[index(outcome)];
    if (!post) {
        throw ContractError("measurement outcome " + std::to_string(outcome) + " has probability 0");
    }
    return *post;
}

DenseMeasurement dense_measure(const DenseState &s, const PauliOperator &p) {
    if (static_cast<int>(p.qubits()) != s.qubits()) {
        throw ArgumentError("Pauli and state act on different qubit counts");
    }
    if (!p.hermitian()) {
        throw ContractError("cannot measure non-Hermitian " + p.str());
    }
    const Eigen::VectorXcd applied = apply_pauli(p, s.amplitudes());
    std::array<double, 2> probabilities{};
    std::array<std::optional<DenseState>, 2> post;
    for (int k = 0; k < 2; k++) {
        const double sign = k == 0 ? 1.0 : -1.0;
        Eigen::VectorXcd projected = 0.5 * (s.amplitudes() + sign * applied);
        const double prob = projected.squaredNorm();
        probabilities[static_cast<std::size_t>(k)] = prob;
        if (prob > kZeroBranch) {
            projected /= std::sqrt(prob);
            DenseState branch(s.qubits(), std::move(projected));
            branch.canonicalize_phase();
            post[static_cast<std::size_t>(k)] = std::move(branch);
        }
    }
    return DenseMeasurement(probabilities, std::move(post));
}

DenseMeasurement dense_measure(const DenseState &s, int qubit, PauliBasis basis) {
    if (qubit < 0 || qubit >= s.qubits()) {
        throw ArgumentError("qubit " + std::to_string(qubit) + " out of range for " + std::to_string(s.qubits()) +
                            " qubits");
    }
    return dense_measure(
        s, PauliOperator::single(static_cast<std::size_t>(s.qubits()), static_cast<std::size_t>(qubit), basis));
}

}  // namespace graphlogic
