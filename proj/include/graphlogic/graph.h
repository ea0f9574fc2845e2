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

#ifndef GRAPHLOGIC_GRAPH_H
#define GRAPHLOGIC_GRAPH_H

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphlogic/gf2.h"

namespace graphlogic {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1, stored as a symmetric GF(2)
/// adjacency matrix with zero diagonal. Immutable once built.
class Graph {
   public:
    Graph() = default;

    /// Throws ArgumentError on self-loops or out-of-range endpoints. Duplicate
    /// edges (in either orientation) collapse.
    Graph(int n, std::span<const Edge> edges, std::string name = {});
    Graph(int n, std::initializer_list<Edge> edges, std::string name = {})
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(name)) {
    }

    int size() const {
        return n_;
    }
    bool has_edge(int a, int b) const {
        return adj_(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    }
    std::size_t edge_count() const {
        return edge_count_;
    }
    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;
    int degree(int a) const;

    const Gf2Matrix &adjacency() const {
        return adj_;
    }
    const std::string &name() const {
        return name_;
    }
    Graph with_name(std::string name) const;

    /// Equality ignores the name.
    friend bool operator==(const Graph &a, const Graph &b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

   private:
    int n_ = 0;
    std::size_t edge_count_ = 0;
    Gf2Matrix adj_;
    std::string name_;
};

/// A finite, ordered family of graphs. Members may differ in size.
using GraphFamily = std::vector<Graph>;

/// N(a), ascending.
std::vector<int> neighbors(const Graph &g, int a);

/// Relabels vertex v as perm[v]. `perm` must be a permutation of 0..n-1.
Graph permute(const Graph &g, std::span<const int> perm);

enum class GraphKind { kPath, kCycle, kGrid, kTriangular, kHexagonal, kComplete, kBinaryTree };

/// Parses "path", "cycle", "grid", "triangular", "hexagonal", "complete",
/// "binary_tree" (also accepts "binary-tree").
GraphKind parse_graph_kind(std::string_view name);
std::string_view graph_kind_name(GraphKind kind);

/// Canonical family member. `size` is the vertex count for path, cycle and
/// complete; the side length k for the k x k lattices (row-major vertex
/// numbering); the depth d for binary_tree (2^(d+1) - 1 vertices, heap order).
///
/// Lattice patches:
///   grid        k x k square lattice.
///   triangular  grid plus the diagonal (r, c)-(r+1, c+1) in every cell.
///   hexagonal   brick wall: all horizontal edges, vertical edge
///               (r, c)-(r+1, c) only when r + c is even.
///
/// Throws ArgumentError when size < 1, or size < 3 for a cycle.
Graph generate(GraphKind kind, int size);

/// Edge-list text: first line "n m", then m lines "u v". Lines starting with
/// '#' and blank lines are ignored. Throws ParseError naming the line.
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list: "n m\n" followed by sorted "u v\n" lines.
std::string serialize(const Graph &g);

}  // namespace graphlogic

#endif  // GRAPHLOGIC_GRAPH_H
