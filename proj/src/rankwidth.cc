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

#include "graphlogic/rankwidth.h"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "graphlogic/errors.h"
#include "graphlogic/gf2.h"

namespace graphlogic {

SubcubicTree::SubcubicTree(std::vector<Edge> edges, std::vector<int> labels)
    : edges_(std::move(edges)), labels_(std::move(labels)), adjacency_(labels_.size()) {
    const int nodes = node_count();
    if (nodes < 2) {
        throw ArgumentError("subcubic tree needs at least 2 nodes");
    }
    if (static_cast<int>(edges_.size()) != nodes - 1) {
        throw ArgumentError("tree on " + std::to_string(nodes) + " nodes must have " + std::to_string(nodes - 1) +
                            " edges, got " + std::to_string(edges_.size()));
    }
    std::set<Edge> seen;
    for (auto [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= nodes || v >= nodes || u == v) {
            throw ArgumentError("invalid tree edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
            throw ArgumentError("duplicate tree edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    // n - 1 edges plus connectivity makes it a tree.
    std::vector<char> reached(static_cast<std::size_t>(nodes), 0);
    std::vector<int> stack{0};
    reached[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int node = stack.back();
        stack.pop_back();
        for (int next : adjacency_[static_cast<std::size_t>(node)]) {
            if (!reached[static_cast<std::size_t>(next)]) {
                reached[static_cast<std::size_t>(next)] = 1;
                count++;
                stack.push_back(next);
            }
        }
    }
    if (count != nodes) {
        throw ArgumentError("tree is not connected");
    }
    for (int node = 0; node < nodes; node++) {
        const auto degree = adjacency_[static_cast<std::size_t>(node)].size();
        const bool leaf = labels_[static_cast<std::size_t>(node)] >= 0;
        if (degree != 1 && degree != 3) {
            throw ArgumentError("tree node " + std::to_string(node) + " has degree " + std::to_string(degree));
        }
        if (leaf != (degree == 1)) {
            throw ArgumentError("tree node " + std::to_string(node) +
                                (leaf ? " is labeled but not a leaf" : " is an unlabeled leaf"));
        }
        leaf_count_ += leaf ? 1 : 0;
    }
    std::vector<char> used(static_cast<std::size_t>(leaf_count_), 0);
    for (int label : labels_) {
        if (label < -1 || label >= leaf_count_ || (label >= 0 && used[static_cast<std::size_t>(label)])) {
            throw ArgumentError("leaf labels must be a bijection onto 0.." + std::to_string(leaf_count_ - 1));
        }
        if (label >= 0) {
            used[static_cast<std::size_t>(label)] = 1;
        }
    }
}

std::pair<std::vector<int>, std::vector<int>> tree_edge_bipartition(const SubcubicTree &tree, Edge e) {
    const auto [u, v] = e;
    const int nodes = tree.node_count();
    if (u < 0 || v < 0 || u >= nodes || v >= nodes ||
        std::find(tree.adjacent(u).begin(), tree.adjacent(u).end(), v) == tree.adjacent(u).end()) {
        throw ArgumentError("{" + std::to_string(u) + "," + std::to_string(v) + "} is not a tree edge");
    }
    std::vector<char> side(static_cast<std::size_t>(nodes), 0);
    std::vector<int> stack{u};
    side[static_cast<std::size_t>(u)] = 1;
    while (!stack.empty()) {
        int node = stack.back();
        stack.pop_back();
        for (int next : tree.adjacent(node)) {
            if ((node == u && next == v) || side[static_cast<std::size_t>(next)]) {
                continue;
            }
            side[static_cast<std::size_t>(next)] = 1;
            stack.push_back(next);
        }
    }
    std::pair<std::vector<int>, std::vector<int>> out;
    for (int node = 0; node < nodes; node++) {
        const int label = tree.labels()[static_cast<std::size_t>(node)];
        if (label >= 0) {
            (side[static_cast<std::size_t>(node)] ? out.first : out.second).push_back(label);
        }
    }
    std::sort(out.first.begin(), out.first.end());
    std::sort(out.second.begin(), out.second.end());
    return out;
}

namespace {

constexpr int kMaxEnumerationLeaves = 64;
// The pruned search tabulates cut-ranks of all vertex subsets.
constexpr int kMaxExactVertices = 24;

void check_leaf_count(int n) {
    if (n < 2) {
        throw ArgumentError("subcubic trees need at least 2 leaves, got " + std::to_string(n));
    }
    if (n > kMaxEnumerationLeaves) {
        throw ArgumentError("tree enumeration supports at most " + std::to_string(kMaxEnumerationLeaves) +
                            " leaves");
    }
}

/// Leaf-insertion search state. The tree is rooted at leaf 0; edges are
/// stored (parent, child) and `below[e]` is the leaf set under the child.
class InsertionTree {
   public:
    explicit InsertionTree(int n)
        : n_(n), parent_edge_(static_cast<std::size_t>(2 * n - 2), -1) {
        edges_.reserve(static_cast<std::size_t>(2 * n - 3));
        below_.reserve(static_cast<std::size_t>(2 * n - 3));
        edges_.emplace_back(0, 1);
        below_.push_back(std::uint64_t{1} << 1);
        parent_edge_[1] = 0;
    }

    int leaves_present() const {
        return leaves_;
    }
    std::size_t edge_count() const {
        return edges_.size();
    }
    std::span<const std::uint64_t> below() const {
        return below_;
    }

    /// Splits edge `e` with a new internal node and hangs the next leaf on it.
    void insert(std::size_t e) {
        const int leaf = leaves_;
        const int mid = n_ + leaf - 2;
        const std::uint64_t bit = std::uint64_t{1} << leaf;
        const auto [parent, child] = edges_[e];
        const std::uint64_t old = below_[e];
        edges_[e] = {parent, mid};
        below_[e] = old | bit;
        parent_edge_[static_cast<std::size_t>(mid)] = static_cast<int>(e);
        parent_edge_[static_cast<std::size_t>(child)] = static_cast<int>(edges_.size());
        edges_.emplace_back(mid, child);
        below_.push_back(old);
        parent_edge_[static_cast<std::size_t>(leaf)] = static_cast<int>(edges_.size());
        edges_.emplace_back(mid, leaf);
        below_.push_back(bit);
        for (int up = parent_edge_[static_cast<std::size_t>(parent)]; up >= 0;
             up = parent_edge_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(up)].first)]) {
            below_[static_cast<std::size_t>(up)] |= bit;
        }
        leaves_++;
    }

    void undo(std::size_t e) {
        leaves_--;
        const int leaf = leaves_;
        const std::uint64_t bit = std::uint64_t{1} << leaf;
        edges_.pop_back();
        below_.pop_back();
        const int child = edges_.back().second;
        edges_.pop_back();
        below_.pop_back();
        const int parent = edges_[e].first;
        edges_[e] = {parent, child};
        below_[e] &= ~bit;
        parent_edge_[static_cast<std::size_t>(child)] = static_cast<int>(e);
        parent_edge_[static_cast<std::size_t>(leaf)] = -1;
        parent_edge_[static_cast<std::size_t>(n_ + leaf - 2)] = -1;
        for (int up = parent_edge_[static_cast<std::size_t>(parent)]; up >= 0;
             up = parent_edge_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(up)].first)]) {
            below_[static_cast<std::size_t>(up)] &= ~bit;
        }
    }

    SubcubicTree materialize() const {
        std::vector<int> labels(static_cast<std::size_t>(2 * n_ - 2), -1);
        for (int v = 0; v < n_; v++) {
            labels[static_cast<std::size_t>(v)] = v;
        }
        return SubcubicTree(edges_, std::move(labels));
    }

   private:
    int n_;
    int leaves_ = 2;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> below_;
    std::vector<int> parent_edge_;
};

template <typename Visit>
void walk_insertions(InsertionTree &tree, int n, Visit &&visit) {
    if (tree.leaves_present() == n) {
        visit(tree);
        return;
    }
    const std::size_t edges = tree.edge_count();
    for (std::size_t e = 0; e < edges; e++) {
        tree.insert(e);
        walk_insertions(tree, n, visit);
        tree.undo(e);
    }
}

}  // namespace

void for_each_subcubic_tree(int n, const std::function<void(const SubcubicTree &)> &visit) {
    check_leaf_count(n);
    InsertionTree tree(n);
    walk_insertions(tree, n, [&](const InsertionTree &t) { visit(t.materialize()); });
}

std::vector<SubcubicTree> enumerate_subcubic_trees(int n) {
    std::vector<SubcubicTree> out;
    for_each_subcubic_tree(n, [&](const SubcubicTree &t) { out.push_back(t); });
    return out;
}

std::uint64_t count_subcubic_trees(int n) {
    check_leaf_count(n);
    InsertionTree tree(n);
    std::uint64_t count = 0;
    walk_insertions(tree, n, [&](const InsertionTree &) { count++; });
    return count;
}

int decomposition_width(const Graph &g, const SubcubicTree &tree) {
    if (tree.leaf_count() != g.size()) {
        throw ArgumentError("tree has " + std::to_string(tree.leaf_count()) + " leaves but graph has " +
                            std::to_string(g.size()) + " vertices");
    }
    int width = 0;
    for (const Edge &e : tree.edges()) {
        const auto part = tree_edge_bipartition(tree, e).first;
        width = std::max(width, static_cast<int>(cut_rank(g, part)));
    }
    return width;
}

SubcubicTree caterpillar_tree(std::span<const int> order) {
    const int n = static_cast<int>(order.size());
    if (n < 2) {
        throw ArgumentError("caterpillar needs at least 2 leaves");
    }
    std::vector<int> labels(static_cast<std::size_t>(2 * n - 2), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (int v : order) {
        if (v < 0 || v >= n || used[static_cast<std::size_t>(v)]) {
            throw ArgumentError("caterpillar order must be a permutation of 0..n-1");
        }
        used[static_cast<std::size_t>(v)] = 1;
        labels[static_cast<std::size_t>(v)] = v;
    }
    std::vector<Edge> edges;
    if (n == 2) {
        edges.emplace_back(order[0], order[1]);
        return SubcubicTree(std::move(edges), std::move(labels));
    }
    // Spine node s_i (id n + i - 1, i = 1..n-2) carries order[i]; the ends
    // also carry order[0] and order[n-1].
    auto spine = [n](int i) { return n + i - 1; };
    edges.emplace_back(order[0], spine(1));
    for (int i = 1; i <= n - 2; i++) {
        edges.emplace_back(spine(i), order[static_cast<std::size_t>(i)]);
        if (i + 1 <= n - 2) {
            edges.emplace_back(spine(i), spine(i + 1));
        }
    }
    edges.emplace_back(spine(n - 2), order[static_cast<std::size_t>(n - 1)]);
    return SubcubicTree(std::move(edges), std::move(labels));
}

namespace {

// GF(2) rank of a handful of rows packed in single words.
int small_rank(std::vector<std::uint64_t> rows) {
    int rank = 0;
    for (std::size_t i = 0; i < rows.size(); i++) {
        const std::uint64_t row = rows[i];
        if (row == 0) {
            continue;
        }
        rank++;
        const std::uint64_t pivot = row & (~row + 1);
        for (std::size_t j = i + 1; j < rows.size(); j++) {
            if (rows[j] & pivot) {
                rows[j] ^= row;
            }
        }
    }
    return rank;
}

/// prefix_rank[k][S] = cut-rank of S within the subgraph induced on the
/// first k vertices, for every S of those vertices.
std::vector<std::vector<std::uint8_t>> prefix_cut_ranks(const Graph &g) {
    const int n = g.size();
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; v++) {
        adj[static_cast<std::size_t>(v)] = g.adjacency().row(static_cast<std::size_t>(v))[0];
    }
    std::vector<std::vector<std::uint8_t>> table(static_cast<std::size_t>(n) + 1);
    std::vector<std::uint64_t> rows;
    for (int k = 2; k <= n; k++) {
        const std::uint64_t all = (std::uint64_t{1} << k) - 1;
        auto &ranks = table[static_cast<std::size_t>(k)];
        ranks.assign(std::size_t{1} << k, 0);
        for (std::uint64_t set = 1; set < all; set++) {
            if (ranks[set] != 0 || std::popcount(set) * 2 > k) {
                continue;
            }
            rows.clear();
            for (std::uint64_t rest = set; rest; rest &= rest - 1) {
                rows.push_back(adj[static_cast<std::size_t>(std::countr_zero(rest))] & all & ~set);
            }
            const auto r = static_cast<std::uint8_t>(small_rank(rows));
            ranks[set] = r;
            ranks[all & ~set] = r;
        }
    }
    return table;
}

RankWidthResult exact_pruned(const Graph &g, int lower_bound) {
    const int n = g.size();
    const auto table = prefix_cut_ranks(g);
    InsertionTree tree(n);
    int best = n + 1;
    std::optional<SubcubicTree> witness;

    auto partial_width = [&](const InsertionTree &t) {
        const auto &ranks = table[static_cast<std::size_t>(t.leaves_present())];
        int width = 0;
        for (auto set : t.below()) {
            width = std::max<int>(width, ranks[set]);
        }
        return width;
    };
    // Every edge of a partial tree persists in all completions and its cut
    // matrix only grows, so the partial width is a lower bound.
    std::function<bool()> search = [&]() -> bool {
        const std::size_t edges = tree.edge_count();
        for (std::size_t e = 0; e < edges; e++) {
            tree.insert(e);
            const int width = partial_width(tree);
            bool done = false;
            if (width < best) {
                if (tree.leaves_present() == n) {
                    best = width;
                    witness = tree.materialize();
                    done = best <= lower_bound;
                } else {
                    done = search();
                }
            }
            tree.undo(e);
            if (done) {
                return true;
            }
        }
        return false;
    };
    if (n == 2) {
        best = partial_width(tree);
        witness = tree.materialize();
    } else {
        search();
    }
    return {best, RankDecomposition{*witness, best}};
}

RankWidthResult exact_unpruned(const Graph &g) {
    int best = g.size() + 1;
    std::optional<SubcubicTree> witness;
    for_each_subcubic_tree(g.size(), [&](const SubcubicTree &t) {
        const int width = decomposition_width(g, t);
        if (width < best) {
            best = width;
            witness = t;
        }
    });
    return {best, RankDecomposition{*witness, best}};
}

}  // namespace

RankWidthResult exact_rankwidth(const Graph &g, const ExactSearchOptions &options) {
    const int n = g.size();
    if (n > options.size_cap) {
        throw ResourceError("exact rank-width search refuses " + std::to_string(n) +
                            " vertices; the limit is " + std::to_string(options.size_cap));
    }
    if (n <= 1) {
        return {0, std::nullopt};
    }
    if (n > kMaxExactVertices) {
        throw ResourceError("exact rank-width search supports at most " + std::to_string(kMaxExactVertices) +
                            " vertices regardless of the configured limit");
    }
    if (!options.prune) {
        return exact_unpruned(g);
    }
    return exact_pruned(g, g.edge_count() == 0 ? 0 : 1);
}

RankDecomposition greedy_decomposition(const Graph &g) {
    const int n = g.size();
    if (n < 2) {
        throw ArgumentError("greedy decomposition needs at least 2 vertices");
    }
    int start = 0;
    for (int v = 1; v < n; v++) {
        if (g.degree(v) < g.degree(start)) {
            start = v;
        }
    }
    std::vector<int> order{start};
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    placed[static_cast<std::size_t>(start)] = 1;
    while (static_cast<int>(order.size()) < n) {
        int pick = -1;
        std::size_t pick_rank = 0;
        for (int v = 0; v < n; v++) {
            if (placed[static_cast<std::size_t>(v)]) {
                continue;
            }
            order.push_back(v);
            const std::size_t r = cut_rank(g, order);
            order.pop_back();
            if (pick < 0 || r < pick_rank) {
                pick = v;
                pick_rank = r;
            }
        }
        order.push_back(pick);
        placed[static_cast<std::size_t>(pick)] = 1;
    }
    SubcubicTree tree = caterpillar_tree(order);
    const int width = decomposition_width(g, tree);
    return {std::move(tree), width};
}

nlohmann::ordered_json to_json(const SubcubicTree &tree) {
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (auto [u, v] : tree.edges()) {
        edges.push_back({u, v});
    }
    nlohmann::ordered_json labels = nlohmann::ordered_json::object();
    for (int node = 0; node < tree.node_count(); node++) {
        const int label = tree.labels()[static_cast<std::size_t>(node)];
        if (label >= 0) {
            labels[std::to_string(node)] = label;
        }
    }
    return {{"n", tree.leaf_count()}, {"edges", std::move(edges)}, {"leaf_labels", std::move(labels)}};
}

SubcubicTree subcubic_tree_from_json(const nlohmann::ordered_json &j) {
    try {
        const int n = j.at("n").get<int>();
        if (n < 2) {
            throw ArgumentError("decomposition JSON: n must be at least 2");
        }
        std::vector<Edge> edges;
        for (const auto &e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw ArgumentError("decomposition JSON: each edge must be a pair");
            }
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        std::vector<int> labels(static_cast<std::size_t>(2 * n - 2), -1);
        for (const auto &[key, value] : j.at("leaf_labels").items()) {
            std::size_t used = 0;
            const int node = std::stoi(key, &used);
            if (used != key.size() || node < 0 || node >= 2 * n - 2) {
                throw ArgumentError("decomposition JSON: bad tree vertex '" + key + "'");
            }
            labels[static_cast<std::size_t>(node)] = value.get<int>();
        }
        SubcubicTree tree(std::move(edges), std::move(labels));
        if (tree.leaf_count() != n) {
            throw ArgumentError("decomposition JSON: leaf count does not match n");
        }
        return tree;
    } catch (const nlohmann::ordered_json::exception &e) {
        throw ArgumentError(std::string("decomposition JSON: ") + e.what());
    } catch (const std::logic_error &e) {
        if (dynamic_cast<const ArgumentError *>(&e) != nullptr) {
            throw;
        }
        throw ArgumentError(std::string("decomposition JSON: ") + e.what());
    }
}

}  // namespace graphlogic
