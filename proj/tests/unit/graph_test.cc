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

#include "graphlogic/graph.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "graphlogic/errors.h"
#include "oracles.h"

using namespace graphlogic;

TEST(graph, construction_rejects_bad_edges) {
    EXPECT_THROW(Graph(3, {{0, 0}}), ArgumentError);
    EXPECT_THROW(Graph(3, {{0, 3}}), ArgumentError);
    EXPECT_THROW(Graph(3, {{-1, 2}}), ArgumentError);
    EXPECT_THROW(Graph(-1, {}), ArgumentError);
}

TEST(graph, duplicate_edges_collapse_and_adjacency_is_symmetric) {
    const Graph g(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
    EXPECT_EQ(g.edge_count(), 2u);
    for (int a = 0; a < 3; a++) {
        EXPECT_FALSE(g.has_edge(a, a));
        for (int b = 0; b < 3; b++) {
            EXPECT_EQ(g.has_edge(a, b), g.has_edge(b, a));
        }
    }
}

TEST(graph, parse_examples) {
    const Graph p3 = parse_edge_list("3 2\n0 1\n1 2");
    EXPECT_EQ(p3, generate(GraphKind::kPath, 3));

    const Graph single = parse_edge_list("1 0");
    EXPECT_EQ(single.size(), 1);
    EXPECT_EQ(single.edge_count(), 0u);

    const Graph edge = parse_edge_list("2 1\n0 1\n");
    EXPECT_EQ(edge.size(), 2);
    EXPECT_TRUE(edge.has_edge(0, 1));
}

TEST(graph, parse_skips_comments_and_blank_lines) {
    const Graph g = parse_edge_list("# header comment\n3 2\n\n0 1\n  # indented\n1 2\n");
    EXPECT_EQ(g, generate(GraphKind::kPath, 3));
}

TEST(graph, parse_accepts_crlf) {
    EXPECT_EQ(parse_edge_list("2 1\r\n0 1\r\n"), Graph(2, {{0, 1}}));
}

namespace {

std::size_t parse_error_line(const std::string &text) {
    try {
        parse_edge_list(text);
    } catch (const ParseError &e) {
        return e.position();
    }
    ADD_FAILURE() << "no parse error for: " << text;
    return 0;
}

}  // namespace

TEST(graph, parse_errors_name_line_number) {
    EXPECT_EQ(parse_error_line("3 2\n0 1\n1 x\n"), 3u);
    EXPECT_EQ(parse_error_line("3 1\n0 3\n"), 2u);
    EXPECT_EQ(parse_error_line("3 1\n# c\n2 2\n"), 3u);
    EXPECT_EQ(parse_error_line("3 1\n0 1 2\n"), 2u);
    EXPECT_EQ(parse_error_line("three\n"), 1u);
    EXPECT_EQ(parse_error_line("3 2\n0 1\n"), 3u);
    EXPECT_EQ(parse_error_line("3 1\n0 1\n1 2\n"), 3u);
    EXPECT_THROW(parse_edge_list(""), ParseError);
    EXPECT_THROW(parse_edge_list("-1 0"), ParseError);

    try {
        parse_edge_list("3 1\n0 5\n");
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
}

TEST(graph, generate_examples) {
    const Graph p4 = generate(GraphKind::kPath, 4);
    EXPECT_EQ(p4.size(), 4);
    EXPECT_EQ(p4.edge_count(), 3u);

    const Graph g2 = generate(GraphKind::kGrid, 2);
    EXPECT_EQ(g2.size(), 4);
    EXPECT_EQ(g2.edge_count(), 4u);
    for (int v = 0; v < 4; v++) {
        EXPECT_EQ(g2.degree(v), 2);
    }

    EXPECT_EQ(generate(GraphKind::kComplete, 4).edge_count(), 6u);
}

TEST(graph, generate_lattice_conventions) {
    const Graph grid = generate(GraphKind::kGrid, 3);
    EXPECT_EQ(grid.size(), 9);
    EXPECT_EQ(grid.edge_count(), 12u);
    EXPECT_TRUE(grid.has_edge(0, 1));
    EXPECT_TRUE(grid.has_edge(0, 3));
    EXPECT_FALSE(grid.has_edge(2, 3));

    const Graph tri = generate(GraphKind::kTriangular, 3);
    EXPECT_EQ(tri.size(), 9);
    EXPECT_EQ(tri.edge_count(), 12u + 4u);
    EXPECT_TRUE(tri.has_edge(0, 4));
    EXPECT_FALSE(tri.has_edge(1, 3));

    const Graph hex = generate(GraphKind::kHexagonal, 3);
    EXPECT_EQ(hex.size(), 9);
    // 6 horizontal edges plus vertical edges at (0,0), (0,2), (1,1).
    EXPECT_EQ(hex.edge_count(), 9u);
    EXPECT_TRUE(hex.has_edge(0, 3));
    EXPECT_FALSE(hex.has_edge(1, 4));
    EXPECT_TRUE(hex.has_edge(4, 7));
    for (int v = 0; v < hex.size(); v++) {
        EXPECT_LE(hex.degree(v), 3);
    }
}

TEST(graph, generate_other_families) {
    const Graph c5 = generate(GraphKind::kCycle, 5);
    EXPECT_EQ(c5.edge_count(), 5u);
    EXPECT_TRUE(c5.has_edge(0, 4));

    const Graph t2 = generate(GraphKind::kBinaryTree, 2);
    EXPECT_EQ(t2.size(), 7);
    EXPECT_EQ(t2.edge_count(), 6u);
    EXPECT_TRUE(t2.has_edge(0, 1));
    EXPECT_TRUE(t2.has_edge(0, 2));
    EXPECT_TRUE(t2.has_edge(2, 6));

    EXPECT_EQ(generate(GraphKind::kPath, 1).edge_count(), 0u);
    EXPECT_EQ(generate(GraphKind::kGrid, 3).name(), "grid(3)");
}

TEST(graph, generate_rejects_nonpositive_sizes) {
    for (GraphKind kind : {GraphKind::kPath, GraphKind::kCycle, GraphKind::kGrid, GraphKind::kTriangular,
                           GraphKind::kHexagonal, GraphKind::kComplete, GraphKind::kBinaryTree}) {
        EXPECT_THROW(generate(kind, 0), ArgumentError);
        EXPECT_THROW(generate(kind, -2), ArgumentError);
    }
    EXPECT_THROW(generate(GraphKind::kCycle, 2), ArgumentError);
}

TEST(graph, kind_names_round_trip) {
    for (GraphKind kind : {GraphKind::kPath, GraphKind::kCycle, GraphKind::kGrid, GraphKind::kTriangular,
                           GraphKind::kHexagonal, GraphKind::kComplete, GraphKind::kBinaryTree}) {
        EXPECT_EQ(parse_graph_kind(graph_kind_name(kind)), kind);
    }
    EXPECT_EQ(parse_graph_kind("binary-tree"), GraphKind::kBinaryTree);
    EXPECT_THROW(parse_graph_kind("torus"), ArgumentError);
}

TEST(graph, neighbors_examples) {
    EXPECT_EQ(neighbors(generate(GraphKind::kPath, 3), 1), (std::vector<int>{0, 2}));
    EXPECT_TRUE(neighbors(generate(GraphKind::kPath, 1), 0).empty());
    EXPECT_EQ(neighbors(generate(GraphKind::kComplete, 3), 0), (std::vector<int>{1, 2}));
    EXPECT_THROW(neighbors(generate(GraphKind::kPath, 3), 3), ArgumentError);
}

TEST(graph, serialize_examples) {
    EXPECT_EQ(serialize(generate(GraphKind::kPath, 3)), "3 2\n0 1\n1 2\n");
    EXPECT_EQ(serialize(Graph(0, {})), "0 0\n");
    EXPECT_EQ(serialize(Graph(3, {{2, 1}, {1, 0}})), "3 2\n0 1\n1 2\n");
}

TEST(graph, serialize_parse_round_trip_random) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; trial++) {
        const int n = static_cast<int>(rng() % 20);
        const Graph g = oracle::random_graph(n, 0.3, rng);
        const std::string text = serialize(g);
        const Graph back = parse_edge_list(text);
        ASSERT_EQ(back, g);
        ASSERT_EQ(serialize(back), text);
    }
}

TEST(graph, degree_invariants) {
    for (int k = 2; k <= 8; k++) {
        const Graph grid = generate(GraphKind::kGrid, k);
        for (int v = 0; v < grid.size(); v++) {
            EXPECT_GE(grid.degree(v), 2);
            EXPECT_LE(grid.degree(v), 4);
        }
    }
    for (int n = 2; n <= 30; n++) {
        const Graph p = generate(GraphKind::kPath, n);
        int leaves = 0;
        for (int v = 0; v < n; v++) {
            leaves += p.degree(v) == 1 ? 1 : 0;
        }
        EXPECT_EQ(leaves, 2);
    }
}

TEST(graph, permute_relabels) {
    const Graph p3 = generate(GraphKind::kPath, 3);
    const std::vector<int> perm{2, 0, 1};
    const Graph q = permute(p3, perm);
    EXPECT_TRUE(q.has_edge(2, 0));
    EXPECT_TRUE(q.has_edge(0, 1));
    EXPECT_FALSE(q.has_edge(2, 1));
    EXPECT_THROW(permute(p3, std::vector<int>{0, 0, 1}), ArgumentError);
}
