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

#ifndef GRAPHLOGIC_DENSE_STATE_H
#define GRAPHLOGIC_DENSE_STATE_H

#include <Eigen/Dense>
#include <array>
#include <optional>

#include "graphlogic/graph.h"
#include "graphlogic/stabilizer.h"

namespace graphlogic {

/// Explicit 2^n amplitude vector; basis index bit q is qubit q. Used as an
/// independent check on the tableau simulator.
class DenseState {
   public:
    static constexpr int kMaxQubits = 20;

    /// Throws ArgumentError unless amps has 2^n entries and unit norm
    /// (within 1e-10).
    DenseState(int n, Eigen::VectorXcd amps);

    int qubits() const {
        return n_;
    }
    const Eigen::VectorXcd &amplitudes() const {
        return amps_;
    }

    /// Rotates the global phase so the first nonzero amplitude is real positive.
    void canonicalize_phase();

   private:
    int n_;
    Eigen::VectorXcd amps_;
};

/// |G> = 2^{-n/2} sum_s (-1)^{#edges inside s} |s>. Throws ResourceError
/// above DenseState::kMaxQubits.
DenseState dense_state_vector(const Graph &g);

/// P |psi> for an n-qubit Pauli (including its phase).
Eigen::VectorXcd apply_pauli(const PauliOperator &p, const Eigen::VectorXcd &psi);

/// <psi| P |psi> (real for Hermitian P).
double expectation(const DenseState &s, const PauliOperator &p);

/// max over generators g of || g psi - psi ||.
double stabilizer_residual(const DenseState &s, const StabilizerTableau &t);

/// Whether a and b agree up to a global phase, within `tol` in 2-norm.
bool equal_up_to_phase(const DenseState &a, const DenseState &b, double tol = 1e-10);

/// Born-rule outcome of a Pauli measurement.
class DenseMeasurement {
   public:
    /// Index 0 is outcome +1, index 1 is outcome -1.
    DenseMeasurement(std::array<double, 2> probabilities, std::array<std::optional<DenseState>, 2> post)
        : probabilities_(probabilities), post_(std::move(post)) {
    }

    double probability(int outcome) const {
        return probabilities_[index(outcome)];
    }
    /// Normalized post-measurement state. Throws ContractError for a branch
    /// with zero probability.
    const DenseState &branch(int outcome) const;

   private:
    static std::size_t index(int outcome);

    std::array<double, 2> probabilities_;
    std::array<std::optional<DenseState>, 2> post_;
};

/// Branches with probability below 1e-12 are treated as impossible.
DenseMeasurement dense_measure(const DenseState &s, const PauliOperator &p);
DenseMeasurement dense_measure(const DenseState &s, int qubit, PauliBasis basis);

}  // namespace graphlogic

#endif  // GRAPHLOGIC_DENSE_STATE_H
