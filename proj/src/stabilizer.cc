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

#include "graphlogic/stabilizer.h"

#include <algorithm>
#include <bit>
#include <cctype>

#include "graphlogic/errors.h"

namespace graphlogic {

char basis_char(PauliBasis basis) {
    switch (basis) {
        case PauliBasis::kX: return 'X';
        case PauliBasis::kY: return 'Y';
        case PauliBasis::kZ: return 'Z';
    }
    return '?';
}

PauliBasis parse_basis(char c) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'X': return PauliBasis::kX;
        case 'Y': return PauliBasis::kY;
        case 'Z': return PauliBasis::kZ;
        default: throw ArgumentError("unknown measurement basis '" + std::string(1, c) + "'");
    }
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t qubit, PauliBasis basis, int sign) {
    if (qubit >= n) {
        throw ArgumentError("qubit " + std::to_string(qubit) + " out of range for " + std::to_string(n) + " qubits");
    }
    PauliOperator p(n);
    p.set(qubit, basis_char(basis));
    p.set_sign(sign);
    return p;
}

PauliOperator PauliOperator::parse(std::string_view text) {
    int sign = +1;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        sign = text.front() == '-' ? -1 : +1;
        text.remove_prefix(1);
    }
    PauliOperator p(text.size());
    for (std::size_t q = 0; q < text.size(); q++) {
        p.set(q, text[q] == '_' ? 'I' : text[q]);
    }
    p.set_sign(sign);
    return p;
}

int PauliOperator::sign() const {
    if (!hermitian()) {
        throw ContractError("Pauli operator " + str() + " is not Hermitian");
    }
    return phase_ == 0 ? +1 : -1;
}

void PauliOperator::set_sign(int sign) {
    if (sign != 1 && sign != -1) {
        throw ArgumentError("Pauli sign must be +1 or -1");
    }
    phase_ = sign == 1 ? 0 : 2;
}

char PauliOperator::at(std::size_t qubit) const {
    static constexpr char kNames[] = {'I', 'X', 'Z', 'Y'};
    return kNames[(x_[qubit] ? 1 : 0) | (z_[qubit] ? 2 : 0)];
}

void PauliOperator::set(std::size_t qubit, char pauli) {
    if (qubit >= qubits()) {
        throw ArgumentError("qubit " + std::to_string(qubit) + " out of range");
    }
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(pauli)));
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
        throw ArgumentError("unknown Pauli '" + std::string(1, pauli) + "'");
    }
    x_.set(qubit, c == 'X' || c == 'Y');
    z_.set(qubit, c == 'Z' || c == 'Y');
}

bool PauliOperator::commutes_with(const PauliOperator &other) const {
    if (other.qubits() != qubits()) {
        throw ArgumentError("Pauli operators act on different qubit counts");
    }
    return x_.dot(other.z_) == z_.dot(other.x_);
}

PauliOperator &PauliOperator::operator*=(const PauliOperator &rhs) {
    if (rhs.qubits() != qubits()) {
        throw ArgumentError("Pauli operators act on different qubit counts");
    }
    // Per qubit, sigma(a) * sigma(b) = i^g sigma(a xor b) with g in {-1, 0, 1}.
    int acc = phase_ + rhs.phase_;
    const auto x1 = x_.words();
    const auto z1 = z_.words();
    const auto x2 = rhs.x_.words();
    const auto z2 = rhs.z_.words();
    for (std::size_t k = 0; k < x1.size(); k++) {
        for (std::uint64_t both = (x1[k] | z1[k]) & (x2[k] | z2[k]); both; both &= both - 1) {
            const int b = std::countr_zero(both);
            const int ax = (x1[k] >> b) & 1, az = (z1[k] >> b) & 1;
            const int bx = (x2[k] >> b) & 1, bz = (z2[k] >> b) & 1;
            if (ax && az) {
                acc += bz - bx;
            } else if (ax) {
                acc += bz * (2 * bx - 1);
            } else {
                acc += bx * (1 - 2 * bz);
            }
        }
        x1[k] ^= x2[k];
        z1[k] ^= z2[k];
    }
    phase_ = ((acc % 4) + 4) % 4;
    return *this;
}

std::string PauliOperator::str() const {
    static constexpr const char *kPrefix[] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[phase_];
    for (std::size_t q = 0; q < qubits(); q++) {
        out += at(q);
    }
    return out;
}

StabilizerTableau::StabilizerTableau(std::vector<PauliOperator> generators) : generators_(std::move(generators)) {
    const std::size_t n = generators_.size();
    for (const auto &g : generators_) {
        if (g.qubits() != n) {
            throw ArgumentError("tableau needs n generators on n qubits");
        }
        if (!g.hermitian()) {
            throw ArgumentError("generator " + g.str() + " is not Hermitian");
        }
    }
    if (!generators_commute()) {
        throw ArgumentError("tableau generators do not commute");
    }
    if (!generators_independent()) {
        throw ArgumentError("tableau generators are not independent");
    }
}

Gf2Matrix StabilizerTableau::symplectic_matrix() const {
    const std::size_t n = qubits();
    Gf2Matrix m(n, 2 * n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t q = 0; q < n; q++) {
            m.set(i, q, generators_[i].x()[q]);
            m.set(i, n + q, generators_[i].z()[q]);
        }
    }
    return m;
}

bool StabilizerTableau::generators_commute() const {
    for (std::size_t i = 0; i < generators_.size(); i++) {
        for (std::size_t j = i + 1; j < generators_.size(); j++) {
            if (!generators_[i].commutes_with(generators_[j])) {
                return false;
            }
        }
    }
    return true;
}

bool StabilizerTableau::generators_independent() const {
    return rank2(symplectic_matrix()) == qubits();
}

StabilizerTableau graph_state_tableau(const Graph &g) {
    const auto n = static_cast<std::size_t>(g.size());
    std::vector<PauliOperator> gens;
    gens.reserve(n);
    for (int a = 0; a < g.size(); a++) {
        PauliOperator k(n);
        k.set(static_cast<std::size_t>(a), 'X');
        for (int b : neighbors(g, a)) {
            k.set(static_cast<std::size_t>(b), 'Z');
        }
        gens.push_back(std::move(k));
    }
    return StabilizerTableau(std::move(gens));
}

int expectation_pauli(const StabilizerTableau &t, const PauliOperator &p) {
    const std::size_t n = t.qubits();
    if (p.qubits() != n) {
        throw ArgumentError("Pauli acts on " + std::to_string(p.qubits()) + " qubits, tableau has " +
                            std::to_string(n));
    }
    const int p_sign = p.sign();
    for (const auto &g : t.generators()) {
        if (!g.commutes_with(p)) {
            return 0;
        }
    }
    // Commuting with a maximal abelian group puts +-p inside it.
    BitVector target(2 * n);
    for (std::size_t q = 0; q < n; q++) {
        target.set(q, p.x()[q]);
        target.set(n + q, p.z()[q]);
    }
    const auto combo = solve_row_combination(t.symplectic_matrix(), target);
    if (!combo) {
        throw ContractError("Pauli commutes with every generator but is outside the group; tableau is invalid");
    }
    PauliOperator product(n);
    for (std::size_t i = 0; i < n; i++) {
        if ((*combo)[i]) {
            product *= t.generators()[i];
        }
    }
    return product.sign() * p_sign;
}

MeasurementOutcome measure_in_place(StabilizerTableau &t, const PauliOperator &p, std::optional<int> forced,
                                    std::mt19937_64 &rng) {
    if (p.qubits() != t.qubits()) {
        throw ArgumentError("Pauli acts on " + std::to_string(p.qubits()) + " qubits, tableau has " +
                            std::to_string(t.qubits()));
    }
    if (!p.hermitian()) {
        throw ContractError("cannot measure non-Hermitian " + p.str());
    }
    if (forced && *forced != 1 && *forced != -1) {
        throw ArgumentError("forced outcome must be +1 or -1");
    }
    auto &gens = t.generators_;
    std::vector<std::size_t> anticommuting;
    for (std::size_t i = 0; i < gens.size(); i++) {
        if (!gens[i].commutes_with(p)) {
            anticommuting.push_back(i);
        }
    }
    if (anticommuting.empty()) {
        const int value = expectation_pauli(t, p);
        if (forced && *forced != value) {
            throw ContractError("outcome " + std::to_string(*forced) + " of " + p.str() + " has probability 0");
        }
        return {value, 1.0};
    }
    const int outcome = forced ? *forced : ((rng() >> 63) == 0 ? +1 : -1);
    const std::size_t pivot = anticommuting.front();
    for (std::size_t k = 1; k < anticommuting.size(); k++) {
        gens[anticommuting[k]] *= gens[pivot];
    }
    gens[pivot] = p;
    if (outcome == -1) {
        gens[pivot].negate();
    }
    return {outcome, 0.5};
}

MeasureResult measure_pauli(const StabilizerTableau &t, const PauliOperator &p, std::optional<int> forced,
                            std::optional<std::uint64_t> seed) {
    std::mt19937_64 rng(seed.value_or(0));
    StabilizerTableau after = t;
    const auto m = measure_in_place(after, p, forced, rng);
    return {m.outcome, m.probability, std::move(after)};
}

std::vector<MeasurementStep> parse_pattern(std::string_view text) {
    std::vector<MeasurementStep> out;
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            i++;
        }
    };
    auto fail = [&](const std::string &what) {
        return ParseError("pattern: " + what + " at offset " + std::to_string(i), i);
    };
    skip_space();
    if (i == text.size()) {
        return out;
    }
    while (true) {
        skip_space();
        if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw fail("expected qubit index");
        }
        long long qubit = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            qubit = qubit * 10 + (text[i] - '0');
            if (qubit > (1 << 30)) {
                throw fail("qubit index too large");
            }
            i++;
        }
        skip_space();
        if (i == text.size() || text[i] != ':') {
            throw fail("expected ':'");
        }
        i++;
        skip_space();
        if (i == text.size() || std::string_view("XYZxyz").find(text[i]) == std::string_view::npos) {
            throw fail("expected basis X, Y or Z");
        }
        out.push_back({static_cast<int>(qubit), parse_basis(text[i])});
        i++;
        skip_space();
        if (i == text.size()) {
            return out;
        }
        if (text[i] != ',') {
            throw fail("expected ','");
        }
        i++;
    }
}

std::vector<TranscriptEntry> simulate_pattern(StabilizerTableau &t, std::span<const MeasurementStep> pattern,
                                              std::mt19937_64 &rng) {
    const auto n = static_cast<int>(t.qubits());
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (const auto &step : pattern) {
        if (step.qubit < 0 || step.qubit >= n) {
            throw ArgumentError("pattern qubit " + std::to_string(step.qubit) + " out of range for " +
                                std::to_string(n) + " qubits");
        }
        if (used[static_cast<std::size_t>(step.qubit)]) {
            throw ArgumentError("pattern measures qubit " + std::to_string(step.qubit) + " twice");
        }
        used[static_cast<std::size_t>(step.qubit)] = 1;
    }
    std::vector<TranscriptEntry> transcript;
    transcript.reserve(pattern.size());
    for (const auto &step : pattern) {
        const auto p = PauliOperator::single(static_cast<std::size_t>(n), static_cast<std::size_t>(step.qubit),
                                             step.basis);
        const auto m = measure_in_place(t, p, std::nullopt, rng);
        transcript.push_back({step.qubit, step.basis, m.outcome, m.probability});
    }
    return transcript;
}

std::vector<TranscriptEntry> simulate_pattern(const Graph &g, std::span<const MeasurementStep> pattern,
                                              std::uint64_t seed) {
    StabilizerTableau t = graph_state_tableau(g);
    std::mt19937_64 rng(seed);
    return simulate_pattern(t, pattern, rng);
}

nlohmann::ordered_json transcript_to_json(std::span<const TranscriptEntry> transcript) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto &e : transcript) {
        out.push_back({{"qubit", e.qubit},
                       {"basis", std::string(1, basis_char(e.basis))},
                       {"outcome", e.outcome},
                       {"probability", e.probability}});
    }
    return out;
}

}  // namespace graphlogic
