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

#include "graphlogic/gf2.h"

#include <algorithm>
#include <utility>

#include "graphlogic/errors.h"
#include "graphlogic/graph.h"

namespace graphlogic {

BitVector &BitVector::operator^=(const BitVector &other) {
    for (std::size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    for (std::size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

bool BitVector::none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::popcount() const {
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

bool BitVector::dot(const BitVector &other) const {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

std::string BitVector::str() const {
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; i++) {
        if ((*this)[i]) {
            out[i] = '1';
        }
    }
    return out;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(BitVector::word_count(cols)), bits_(rows * stride_, 0) {
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>> &rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Gf2Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw ArgumentError("Gf2Matrix::from_rows: ragged rows");
        }
        for (std::size_t c = 0; c < cols; c++) {
            if (rows[r][c] != 0 && rows[r][c] != 1) {
                throw ArgumentError("Gf2Matrix::from_rows: entries must be 0 or 1");
            }
            m.set(r, c, rows[r][c] == 1);
        }
    }
    return m;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
    std::uint64_t &w = bits_[r * stride_ + (c >> 6)];
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    w = value ? (w | mask) : (w & ~mask);
}

BitVector Gf2Matrix::row_vector(std::size_t r) const {
    BitVector v(cols_);
    std::copy_n(row(r).begin(), stride_, v.words().begin());
    return v;
}

void Gf2Matrix::set_row(std::size_t r, const BitVector &v) {
    std::copy_n(v.words().begin(), stride_, row(r).begin());
}

Gf2Matrix Gf2Matrix::transpose() const {
    Gf2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            if ((*this)(r, c)) {
                t.set(c, r);
            }
        }
    }
    return t;
}

std::vector<std::vector<int>> Gf2Matrix::to_rows() const {
    std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_, 0));
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out[r][c] = (*this)(r, c) ? 1 : 0;
        }
    }
    return out;
}

namespace {

void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    for (std::size_t k = 0; k < dst.size(); k++) {
        dst[k] ^= src[k];
    }
}

}  // namespace

std::size_t rank2(const Gf2Matrix &m) {
    Gf2Matrix work = m;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < work.cols() && rank < work.rows(); c++) {
        const std::size_t word = c >> 6;
        const std::uint64_t mask = std::uint64_t{1} << (c & 63);
        std::size_t pivot = rank;
        while (pivot < work.rows() && !(work.row(pivot)[word] & mask)) {
            pivot++;
        }
        if (pivot == work.rows()) {
            continue;
        }
        if (pivot != rank) {
            std::swap_ranges(work.row(pivot).begin(), work.row(pivot).end(), work.row(rank).begin());
        }
        for (std::size_t r = rank + 1; r < work.rows(); r++) {
            if (work.row(r)[word] & mask) {
                xor_into(work.row(r), work.row(rank));
            }
        }
        rank++;
    }
    return rank;
}

std::optional<BitVector> solve_row_combination(const Gf2Matrix &m, const BitVector &target) {
    if (target.size() != m.cols()) {
        throw ArgumentError("solve_row_combination: target length does not match column count");
    }
    // Echelon basis built row by row; each basis vector remembers which
    // original rows it is the sum of.
    struct Entry {
        BitVector value;
        BitVector combo;
        std::size_t pivot;
    };
    std::vector<Entry> basis;
    auto reduce = [&](BitVector &value, BitVector &combo) {
        for (const auto &e : basis) {
            if (value[e.pivot]) {
                value ^= e.value;
                combo ^= e.combo;
            }
        }
    };
    for (std::size_t r = 0; r < m.rows(); r++) {
        BitVector value = m.row_vector(r);
        BitVector combo(m.rows());
        combo.set(r);
        reduce(value, combo);
        if (value.none()) {
            continue;
        }
        std::size_t pivot = 0;
        while (!value[pivot]) {
            pivot++;
        }
        // Keep earlier basis vectors reduced against the new pivot so that a
        // single pass in `reduce` clears every pivot column.
        for (auto &e : basis) {
            if (e.value[pivot]) {
                e.value ^= value;
                e.combo ^= combo;
            }
        }
        basis.push_back({std::move(value), std::move(combo), pivot});
    }
    BitVector residual = target;
    BitVector combo(m.rows());
    reduce(residual, combo);
    if (!residual.none()) {
        return std::nullopt;
    }
    return combo;
}

namespace {

std::vector<char> membership(const Graph &g, std::span<const int> part) {
    std::vector<char> in(static_cast<std::size_t>(g.size()), 0);
    for (int v : part) {
        if (v < 0 || v >= g.size()) {
            throw ArgumentError("vertex " + std::to_string(v) + " out of range for graph on " +
                                std::to_string(g.size()) + " vertices");
        }
        if (in[static_cast<std::size_t>(v)]) {
            throw ArgumentError("vertex " + std::to_string(v) + " listed twice");
        }
        in[static_cast<std::size_t>(v)] = 1;
    }
    return in;
}

}  // namespace

Gf2Matrix cut_submatrix(const Graph &g, std::span<const int> part) {
    const auto in = membership(g, part);
    std::vector<int> rows;
    std::vector<int> cols;
    for (int v = 0; v < g.size(); v++) {
        (in[static_cast<std::size_t>(v)] ? rows : cols).push_back(v);
    }
    Gf2Matrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); i++) {
        for (std::size_t j = 0; j < cols.size(); j++) {
            if (g.has_edge(rows[i], cols[j])) {
                m.set(i, j);
            }
        }
    }
    return m;
}

std::size_t cut_rank(const Graph &g, std::span<const int> part) {
    return rank2(cut_submatrix(g, part));
}

}  // namespace graphlogic
