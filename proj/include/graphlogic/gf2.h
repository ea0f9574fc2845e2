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

#ifndef GRAPHLOGIC_GF2_H
#define GRAPHLOGIC_GF2_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace graphlogic {

class Graph;

/// Fixed-length bit vector packed into 64-bit words. Bits past `size()` in
/// the last word are always zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {
    }

    static constexpr std::size_t word_count(std::size_t bits) {
        return (bits + 63) / 64;
    }

    std::size_t size() const {
        return size_;
    }
    bool operator[](std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1U;
    }
    void set(std::size_t i, bool value = true) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(std::size_t i) {
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }
    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);

    bool none() const;
    std::size_t popcount() const;
    /// Parity of the popcount of (*this & other).
    bool dot(const BitVector &other) const;

    std::span<std::uint64_t> words() {
        return words_;
    }
    std::span<const std::uint64_t> words() const {
        return words_;
    }

    std::string str() const;

    friend bool operator==(const BitVector &, const BitVector &) = default;

   private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense binary matrix with row-major bit-packed storage. Each row occupies
/// `words_per_row()` 64-bit words; padding bits are zero.
class Gf2Matrix {
   public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    /// Builds from rows of 0/1 values; all rows must have equal length.
    static Gf2Matrix from_rows(const std::vector<std::vector<int>> &rows);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    std::size_t words_per_row() const {
        return stride_;
    }

    bool operator()(std::size_t r, std::size_t c) const {
        return (bits_[r * stride_ + (c >> 6)] >> (c & 63)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool value = true);

    std::span<std::uint64_t> row(std::size_t r) {
        return {bits_.data() + r * stride_, stride_};
    }
    std::span<const std::uint64_t> row(std::size_t r) const {
        return {bits_.data() + r * stride_, stride_};
    }
    BitVector row_vector(std::size_t r) const;
    void set_row(std::size_t r, const BitVector &v);

    Gf2Matrix transpose() const;
    std::vector<std::vector<int>> to_rows() const;

    friend bool operator==(const Gf2Matrix &, const Gf2Matrix &) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Rank over GF(2) by forward elimination with word-wide row XORs.
std::size_t rank2(const Gf2Matrix &m);

/// Finds coefficients c (one per row of `m`) with XOR_{i : c_i} row_i == target,
/// or nullopt when target is outside the row space. The first solution found by
/// elimination in row order is returned; it is unique when the rows are
/// independent.
std::optional<BitVector> solve_row_combination(const Gf2Matrix &m, const BitVector &target);

/// Adjacency submatrix Gamma(A, V \ A): rows are the vertices of `part` in
/// ascending order, columns the remaining vertices in ascending order.
Gf2Matrix cut_submatrix(const Graph &g, std::span<const int> part);

/// GF(2) rank of `cut_submatrix(g, part)`.
std::size_t cut_rank(const Graph &g, std::span<const int> part);

}  // namespace graphlogic

#endif  // GRAPHLOGIC_GF2_H
