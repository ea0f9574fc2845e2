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

#ifndef GRAPHLOGIC_RANKWIDTH_H
#define GRAPHLOGIC_RANKWIDTH_H

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "graphlogic/graph.h"
#include "json.hpp"

namespace graphlogic {

/// Tree whose nodes all have degree 1 or 3, with leaves labeled bijectively
/// by graph vertices 0..n-1. A tree with n >= 2 leaves has 2n - 2 nodes.
class SubcubicTree {
   public:
    /// `labels[node]` is the graph vertex carried by a leaf, or -1 for an
    /// internal node. Throws ArgumentError unless the result is a subcubic
    /// tree whose leaves are exactly the labeled nodes.
    SubcubicTree(std::vector<Edge> edges, std::vector<int> labels);

    int node_count() const {
        return static_cast<int>(labels_.size());
    }
    int leaf_count() const {
        return leaf_count_;
    }
    const std::vector<Edge> &edges() const {
        return edges_;
    }
    const std::vector<int> &labels() const {
        return labels_;
    }
    const std::vector<int> &adjacent(int node) const {
        return adjacency_[static_cast<std::size_t>(node)];
    }

    friend bool operator==(const SubcubicTree &a, const SubcubicTree &b) {
        return a.edges_ == b.edges_ && a.labels_ == b.labels_;
    }

   private:
    std::vector<Edge> edges_;
    std::vector<int> labels_;
    std::vector<std::vector<int>> adjacency_;
    int leaf_count_ = 0;
};

struct RankDecomposition {
    SubcubicTree tree;
    int width = 0;
};

/// Leaf labels on each side of T \ e. The first set is the side containing
/// e.first. Either orientation of e is accepted; both sets are ascending.
std::pair<std::vector<int>, std::vector<int>> tree_edge_bipartition(const SubcubicTree &tree, Edge e);

/// Every leaf-labeled subcubic tree with n leaves, exactly once. Trees are
/// grown from the single edge {0, 1} by inserting leaf k into each edge of
/// each (k-1)-leaf tree, depth first, so there are (2n-5)!! of them for n >= 3.
/// Leaves keep their label as node id; internal nodes are n..2n-3.
/// Throws ArgumentError for n < 2 or n > 64.
std::vector<SubcubicTree> enumerate_subcubic_trees(int n);

/// Streams the same sequence as enumerate_subcubic_trees.
void for_each_subcubic_tree(int n, const std::function<void(const SubcubicTree &)> &visit);

/// Number of trees the enumerator yields, counted by walking the insertion
/// search without materializing trees.
std::uint64_t count_subcubic_trees(int n);

/// Max over tree edges of the cut-rank of the induced bipartition.
/// Throws ArgumentError when the tree's leaves do not label exactly V(g).
int decomposition_width(const Graph &g, const SubcubicTree &tree);

/// Caterpillar over a vertex order: a spine of n - 2 internal nodes whose cuts
/// are the prefixes of `order`. Needs n >= 2.
SubcubicTree caterpillar_tree(std::span<const int> order);

struct ExactSearchOptions {
    /// Largest vertex count the exhaustive search accepts.
    int size_cap = 12;
    /// Branch-and-bound on partial trees. Disabling it evaluates every tree
    /// through decomposition_width.
    bool prune = true;
};

struct RankWidthResult {
    int width = 0;
    /// Absent for n <= 1, where no subcubic tree exists.
    std::optional<RankDecomposition> decomposition;
};

/// rwd(G) = min over subcubic trees of the max cut-rank over tree edges. The
/// witness is the first optimal tree in enumeration order.
/// Throws ResourceError when g.size() exceeds options.size_cap.
RankWidthResult exact_rankwidth(const Graph &g, const ExactSearchOptions &options = {});

/// Upper bound on rwd(G): caterpillar over a greedy vertex order that adds
/// the vertex minimizing the next prefix cut-rank (lowest index on ties),
/// starting from a minimum-degree vertex. Needs n >= 2.
RankDecomposition greedy_decomposition(const Graph &g);

/// {"n": leaves, "edges": [[u, v], ...], "leaf_labels": {"node": vertex}}.
nlohmann::ordered_json to_json(const SubcubicTree &tree);
SubcubicTree subcubic_tree_from_json(const nlohmann::ordered_json &j);

}  // namespace graphlogic

#endif  // GRAPHLOGIC_RANKWIDTH_H
