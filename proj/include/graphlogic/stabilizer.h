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

#ifndef GRAPHLOGIC_STABILIZER_H
#define GRAPHLOGIC_STABILIZER_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphlogic/gf2.h"
#include "graphlogic/graph.h"
#include "json.hpp"

namespace graphlogic {

enum class PauliBasis { kX, kY, kZ };

char basis_char(PauliBasis basis);
PauliBasis parse_basis(char c);

/// n-qubit Pauli operator i^phase * (P_0 x ... x P_{n-1}) in binary
/// symplectic form, where qubit q carries I, X, Z or Y for (x_q, z_q) =
/// (0,0), (1,0), (0,1), (1,1). Public constructors only produce Hermitian
/// operators (phase 0 or 2, i.e. a +-1 sign); odd phases appear transiently
/// in products of anticommuting operators.
class PauliOperator {
   public:
    PauliOperator() = default;
    /// Identity on n qubits.
    explicit PauliOperator(std::size_t n) : x_(n), z_(n) {
    }
    /// Single-qubit Pauli `basis` on `qubit`, identity elsewhere.
    static PauliOperator single(std::size_t n, std::size_t qubit, PauliBasis basis, int sign = +1);
    /// Text like "+XIZ", "-YY" or "ZZ" (sign optional, '_' accepted for I).
    static PauliOperator parse(std::string_view text);

    std::size_t qubits() const {
        return x_.size();
    }
    const BitVector &x() const {
        return x_;
    }
    const BitVector &z() const {
        return z_;
    }
    /// Exponent of i, in 0..3.
    int phase() const {
        return phase_;
    }
    bool hermitian() const {
        return phase_ % 2 == 0;
    }
    /// +1 or -1. Throws ContractError for a non-Hermitian operator.
    int sign() const;
    void set_sign(int sign);
    void negate() {
        phase_ = (phase_ + 2) & 3;
    }

    /// 'I', 'X', 'Y' or 'Z'.
    char at(std::size_t qubit) const;
    void set(std::size_t qubit, char pauli);
    bool is_identity() const {
        return x_.none() && z_.none();
    }

    bool commutes_with(const PauliOperator &other) const;

    /// Right multiplication: *this = *this * rhs, phases tracked mod 4.
    PauliOperator &operator*=(const PauliOperator &rhs);
    friend PauliOperator operator*(PauliOperator lhs, const PauliOperator &rhs) {
        lhs *= rhs;
        return lhs;
    }

    /// "+XZI"; non-Hermitian operators print as "+iXZ" / "-iXZ".
    std::string str() const;

    friend bool operator==(const PauliOperator &, const PauliOperator &) = default;

   private:
    BitVector x_;
    BitVector z_;
    int phase_ = 0;
};

struct MeasurementOutcome {
    int outcome = 1;           // +1 or -1
    double probability = 1.0;  // 1 or 1/2
};

/// n independent, pairwise commuting generators of a stabilizer group.
class StabilizerTableau {
   public:
    StabilizerTableau() = default;
    /// Throws ArgumentError if the generators are not n commuting,
    /// independent Hermitian operators on n qubits.
    explicit StabilizerTableau(std::vector<PauliOperator> generators);

    std::size_t qubits() const {
        return generators_.size();
    }
    const std::vector<PauliOperator> &generators() const {
        return generators_;
    }

    /// n x 2n matrix with row i = (x bits | z bits) of generator i.
    Gf2Matrix symplectic_matrix() const;
    bool generators_commute() const;
    bool generators_independent() const;

    friend bool operator==(const StabilizerTableau &, const StabilizerTableau &) = default;

   private:
    friend MeasurementOutcome measure_in_place(StabilizerTableau &, const PauliOperator &, std::optional<int>,
                                               std::mt19937_64 &);
    std::vector<PauliOperator> generators_;
};

/// Generators K_a = X_a prod_{b in N(a)} Z_b, all with sign +1.
StabilizerTableau graph_state_tableau(const Graph &g);

/// <P> on the stabilizer state: +1 or -1 when +-P is in the group, 0 when P
/// anticommutes with some generator. The group element is found by solving
/// for the generator combination over GF(2).
int expectation_pauli(const StabilizerTableau &t, const PauliOperator &p);

/// Measures the Hermitian Pauli `p` in place. Deterministic outcomes leave
/// the tableau unchanged. Otherwise the outcome is `forced` when given, else
/// drawn from `rng` (top bit of one draw: 0 gives +1); the first
/// anticommuting generator becomes outcome * p and every other anticommuting
/// generator is multiplied by it.
/// Throws ContractError when `forced` contradicts a deterministic outcome.
MeasurementOutcome measure_in_place(StabilizerTableau &t, const PauliOperator &p, std::optional<int> forced,
                                    std::mt19937_64 &rng);

struct MeasureResult {
    int outcome = 1;
    double probability = 1.0;
    StabilizerTableau tableau;
};

/// Value-returning measure_in_place; `seed` defaults to 0.
MeasureResult measure_pauli(const StabilizerTableau &t, const PauliOperator &p, std::optional<int> forced = {},
                            std::optional<std::uint64_t> seed = {});

struct MeasurementStep {
    int qubit = 0;
    PauliBasis basis = PauliBasis::kZ;
    friend bool operator==(const MeasurementStep &, const MeasurementStep &) = default;
};

struct TranscriptEntry {
    int qubit = 0;
    PauliBasis basis = PauliBasis::kZ;
    int outcome = 1;
    double probability = 1.0;
    friend bool operator==(const TranscriptEntry &, const TranscriptEntry &) = default;
};

/// "qubit:basis,qubit:basis,..." e.g. "0:Z,3:X". Empty text is the empty
/// pattern. Throws ParseError with the character offset.
std::vector<MeasurementStep> parse_pattern(std::string_view text);

/// Measures single-qubit Paulis in order on |G>, one rng seeded with `seed`.
/// Throws ArgumentError for out-of-range or repeated qubits.
std::vector<TranscriptEntry> simulate_pattern(const Graph &g, std::span<const MeasurementStep> pattern,
                                              std::uint64_t seed);

/// Same, continuing from an existing tableau and generator.
std::vector<TranscriptEntry> simulate_pattern(StabilizerTableau &t, std::span<const MeasurementStep> pattern,
                                              std::mt19937_64 &rng);

/// [{"qubit": q, "basis": "X", "outcome": 1, "probability": 0.5}, ...]
nlohmann::ordered_json transcript_to_json(std::span<const TranscriptEntry> transcript);

}  // namespace graphlogic

#endif  // GRAPHLOGIC_STABILIZER_H
