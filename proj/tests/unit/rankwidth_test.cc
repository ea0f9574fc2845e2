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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "graphlogic/errors.h"
#include "graphlogic/gf2.h"
#include "oracles.h"

using namespace graphlogic;

namespace {

void expect_valid_tree(const SubcubicTree &t, int n) {
    ASSERT_EQ(t.leaf_count(), n);
    ASSERT_EQ(t.node_count(), 2 * n - 2);
    ASSERT_EQ(static_cast<int>(t.edges().size()), 2 * n - 3);
    std::set<int> labels;
    for (int v = 0; v < t.node_count(); v++) {
        const auto deg = t.adjacent(v).size();
        ASSERT_TRUE(deg == 1 || deg == 3);
        if (deg == 1) {
            ASSERT_GE(t.labels()[static_cast<std::size_t>(v)], 0);
            labels.insert(t.labels()[static_cast<std::size_t>(v)]);
        } else {
            ASSERT_EQ(t.labels()[static_cast<std::size_t>(v)], -1);
        }
    }
    ASSERT_EQ(static_cast<int>(labels.size()), n);
    ASSERT_EQ(*labels.begin(), 0);
    ASSERT_EQ(*labels.rbegin(), n - 1);
}

// Independent width: for each tree edge, flood fill from one end and take the
// dense cut rank of the labels reached.
int width_by_flood_fill(const Graph &g, const SubcubicTree &t) {
    int width = 0;
    for (auto [a, b] : t.edges()) {
        std::vector<char> seen(static_cast<std::size_t>(t.node_count()), 0);
        std::vector<int> stack{a};
        seen[static_cast<std::size_t>(a)] = 1;
        seen[static_cast<std::size_t>(b)] = 1;
        std::uint64_t side = 0;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            if (t.labels()[static_cast<std::size_t>(v)] >= 0) {
                side |= std::uint64_t{1} << t.labels()[static_cast<std::size_t>(v)];
            }
            for (int w : t.adjacent(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        width = std::max(width, oracle::cut_rank_dense(g, side));
    }
    return width;
}

}  // namespace

TEST(rankwidth, bipartition_examples) {
    const SubcubicTree single({{0, 1}}, {0, 1});
    const auto [a, b] = tree_edge_bipartition(single, {0, 1});
    EXPECT_EQ(a, std::vector<int>{0});
    EXPECT_EQ(b, std::vector<int>{1});

    // Star: leaves 0, 1, 2 around centre 3.
    const SubcubicTree star({{3, 0}, {3, 1}, {3, 2}}, {0, 1, 2, -1});
    const auto [c, d] = tree_edge_bipartition(star, {2, 3});
    EXPECT_EQ(c, std::vector<int>{2});
    EXPECT_EQ(d, (std::vector<int>{0, 1}));

    EXPECT_THROW(tree_edge_bipartition(star, {0, 1}), ArgumentError);
}

TEST(rankwidth, bipartition_is_a_partition) {
    for (const auto &t : enumerate_subcubic_trees(6)) {
        for (const auto &e : t.edges()) {
            auto [a, b] = tree_edge_bipartition(t, e);
            ASSERT_EQ(a.size() + b.size(), 6u);
            std::vector<int> all;
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(all));
            ASSERT_EQ(all.size(), 6u);
            ASSERT_FALSE(a.empty());
            ASSERT_FALSE(b.empty());
        }
    }
}

TEST(rankwidth, tree_validation) {
    EXPECT_THROW(SubcubicTree({}, {0}), ArgumentError);
    // Degree-2 node.
    EXPECT_THROW(SubcubicTree({{0, 2}, {2, 1}}, {0, 1, -1}), ArgumentError);
    // Labels not a bijection.
    EXPECT_THROW(SubcubicTree({{3, 0}, {3, 1}, {3, 2}}, {0, 0, 2, -1}), ArgumentError);
    // Internal node labeled.
    EXPECT_THROW(SubcubicTree({{3, 0}, {3, 1}, {3, 2}}, {0, 1, 2, 3}), ArgumentError);
    // Disconnected with right edge count is impossible for a forest; cycle instead.
    EXPECT_THROW(SubcubicTree({{0, 1}, {1, 0}}, {0, 1}), ArgumentError);
}

TEST(rankwidth, tree_counts_match_recurrence) {
    const std::vector<std::size_t> expected{1, 1, 3, 15, 105};
    for (int n = 2; n <= 6; n++) {
        const auto trees = enumerate_subcubic_trees(n);
        EXPECT_EQ(trees.size(), expected[static_cast<std::size_t>(n - 2)]);
        EXPECT_EQ(trees.size(), oracle::subcubic_tree_count(n));
        EXPECT_EQ(count_subcubic_trees(n), oracle::subcubic_tree_count(n));
    }
    EXPECT_EQ(count_subcubic_trees(10), oracle::subcubic_tree_count(10));
    EXPECT_THROW(enumerate_subcubic_trees(1), ArgumentError);
}

TEST(rankwidth, enumerated_trees_are_valid_and_distinct) {
    for (int n = 2; n <= 7; n++) {
        std::set<std::vector<std::pair<int, int>>> shapes;
        std::size_t count = 0;
        for_each_subcubic_tree(n, [&](const SubcubicTree &t) {
            expect_valid_tree(t, n);
            // Distinctness by the set of leaf bipartitions each tree induces.
            std::vector<std::pair<int, int>> splits;
            for (const auto &e : t.edges()) {
                auto [a, b] = tree_edge_bipartition(t, e);
                std::uint64_t ma = 0;
                for (int v : a) {
                    ma |= std::uint64_t{1} << v;
                }
                const std::uint64_t full = (std::uint64_t{1} << n) - 1;
                const std::uint64_t canon = (ma & 1U) ? ma : (full ^ ma);
                splits.emplace_back(static_cast<int>(canon), 0);
            }
            std::sort(splits.begin(), splits.end());
            shapes.insert(splits);
            count++;
        });
        EXPECT_EQ(count, oracle::subcubic_tree_count(n));
        EXPECT_EQ(shapes.size(), count) << "n=" << n;
    }
}

TEST(rankwidth, decomposition_width_examples) {
    const auto trees2 = enumerate_subcubic_trees(2);
    ASSERT_EQ(trees2.size(), 1u);
    EXPECT_EQ(decomposition_width(Graph(2, {}), trees2[0]), 0);
    EXPECT_EQ(decomposition_width(Graph(2, {{0, 1}}), trees2[0]), 1);

    const std::vector<int> order{0, 1, 2, 3};
    const SubcubicTree cat = caterpillar_tree(order);
    expect_valid_tree(cat, 4);
    EXPECT_EQ(decomposition_width(generate(GraphKind::kPath, 4), cat), 1);

    EXPECT_THROW(decomposition_width(generate(GraphKind::kPath, 3), cat), ArgumentError);
}

TEST(rankwidth, decomposition_width_matches_flood_fill_oracle) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; trial++) {
        const Graph g = oracle::random_graph(6, 0.5, rng);
        for (const auto &t : enumerate_subcubic_trees(6)) {
            ASSERT_EQ(decomposition_width(g, t), width_by_flood_fill(g, t));
        }
    }
}

TEST(rankwidth, exact_is_minimum_over_all_trees) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 8; trial++) {
        const Graph g = oracle::random_graph(6, 0.5, rng);
        const auto result = exact_rankwidth(g);
        ASSERT_TRUE(result.decomposition.has_value());
        EXPECT_EQ(decomposition_width(g, result.decomposition->tree), result.width);
        EXPECT_EQ(result.decomposition->width, result.width);
        int best = 1 << 20;
        for (const auto &t : enumerate_subcubic_trees(6)) {
            const int w = decomposition_width(g, t);
            EXPECT_LE(result.width, w);
            best = std::min(best, w);
        }
        EXPECT_EQ(result.width, best);
    }
}

TEST(rankwidth, exact_known_values) {
    for (int n = 2; n <= 8; n++) {
        EXPECT_EQ(exact_rankwidth(generate(GraphKind::kPath, n)).width, 1) << n;
        EXPECT_EQ(exact_rankwidth(generate(GraphKind::kComplete, n)).width, 1) << n;
    }
    EXPECT_EQ(exact_rankwidth(Graph(0, {})).width, 0);
    EXPECT_FALSE(exact_rankwidth(Graph(1, {})).decomposition.has_value());
    EXPECT_EQ(exact_rankwidth(Graph(5, {})).width, 0);
}

TEST(rankwidth, exact_invariant_under_relabeling) {
    std::mt19937_64 rng(123);
    for (int n = 4; n <= 7; n++) {
        const Graph g = oracle::random_graph(n, 0.5, rng);
        const int w = exact_rankwidth(g).width;
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        for (int k = 0; k < 5; k++) {
            std::shuffle(perm.begin(), perm.end(), rng);
            EXPECT_EQ(exact_rankwidth(permute(g, perm)).width, w);
        }
    }
}

TEST(rankwidth, zero_width_iff_edgeless) {
    for (int n = 2; n <= 6; n++) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); code++) {
            const Graph g = oracle::graph_from_code(n, code);
            ASSERT_EQ(exact_rankwidth(g).width == 0, g.edge_count() == 0) << n << " " << code;
        }
    }
}

TEST(rankwidth, pruned_and_unpruned_agree) {
    std::mt19937_64 rng(31);
    ExactSearchOptions unpruned;
    unpruned.prune = false;
    for (int n = 2; n <= 7; n++) {
        for (int trial = 0; trial < (n <= 5 ? 20 : 4); trial++) {
            const Graph g = oracle::random_graph(n, 0.5, rng);
            const auto a = exact_rankwidth(g);
            const auto b = exact_rankwidth(g, unpruned);
            ASSERT_EQ(a.width, b.width);
            ASSERT_EQ(a.decomposition.has_value(), b.decomposition.has_value());
            if (a.decomposition) {
                ASSERT_EQ(a.decomposition->tree, b.decomposition->tree);
            }
        }
    }
    const Graph c5 = generate(GraphKind::kCycle, 5);
    EXPECT_EQ(exact_rankwidth(c5).decomposition->tree, exact_rankwidth(c5, unpruned).decomposition->tree);
}

TEST(rankwidth, bounds_sandwich) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 10; trial++) {
        const Graph g = oracle::random_graph(7, 0.5, rng);
        const int exact = exact_rankwidth(g).width;
        const auto greedy = greedy_decomposition(g);
        EXPECT_LE(oracle::balanced_cut_lower_bound(g), exact);
        EXPECT_LE(exact, greedy.width);
        EXPECT_EQ(greedy.width, decomposition_width(g, greedy.tree));
    }
}

TEST(rankwidth, greedy_examples) {
    EXPECT_EQ(greedy_decomposition(generate(GraphKind::kPath, 50)).width, 1);
    EXPECT_EQ(greedy_decomposition(generate(GraphKind::kComplete, 20)).width, 1);
    EXPECT_THROW(greedy_decomposition(Graph(1, {})), ArgumentError);
}

TEST(rankwidth, size_cap_refuses) {
    EXPECT_THROW(exact_rankwidth(generate(GraphKind::kGrid, 5)), ResourceError);
    ExactSearchOptions small;
    small.size_cap = 4;
    EXPECT_THROW(exact_rankwidth(generate(GraphKind::kPath, 5), small), ResourceError);
    try {
        exact_rankwidth(generate(GraphKind::kPath, 13));
        FAIL();
    } catch (const ResourceError &e) {
        EXPECT_NE(std::string(e.what()).find("12"), std::string::npos) << e.what();
    }
}

TEST(rankwidth, json_round_trip) {
    for (const auto &t : enumerate_subcubic_trees(5)) {
        const auto j = to_json(t);
        EXPECT_EQ(j["n"], 5);
        EXPECT_EQ(j["edges"].size(), 7u);
        EXPECT_EQ(j["leaf_labels"].size(), 5u);
        EXPECT_EQ(subcubic_tree_from_json(j), t);
        EXPECT_EQ(subcubic_tree_from_json(nlohmann::ordered_json::parse(j.dump())), t);
    }
    EXPECT_THROW(subcubic_tree_from_json(nlohmann::ordered_json::parse(R"({"n": 2})")), ArgumentError);
    EXPECT_THROW(subcubic_tree_from_json(
                     nlohmann::ordered_json::parse(R"({"n": 2, "edges": [[0, 1]], "leaf_labels": {"0": 0, "1": 0}})")),
                 ArgumentError);
}
