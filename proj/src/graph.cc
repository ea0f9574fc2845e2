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

#include <algorithm>
#include <charconv>
#include <sstream>

#include "graphlogic/errors.h"

namespace graphlogic {

Graph::Graph(int n, std::span<const Edge> edges, std::string name)
    : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), static_cast<std::size_t>(std::max(n, 0))),
      name_(std::move(name)) {
    if (n < 0) {
        throw ArgumentError("vertex count must be non-negative");
    }
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ArgumentError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} has an endpoint outside 0.." + std::to_string(n - 1));
        }
        if (u == v) {
            throw ArgumentError("self-loop at vertex " + std::to_string(u));
        }
        if (!has_edge(u, v)) {
            adj_.set(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
            adj_.set(static_cast<std::size_t>(v), static_cast<std::size_t>(u));
            edge_count_++;
        }
    }
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; u++) {
        for (int v = u + 1; v < n_; v++) {
            if (has_edge(u, v)) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

int Graph::degree(int a) const {
    int d = 0;
    for (auto w : adj_.row(static_cast<std::size_t>(a))) {
        d += std::popcount(w);
    }
    return d;
}

Graph Graph::with_name(std::string name) const {
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
}

std::vector<int> neighbors(const Graph &g, int a) {
    if (a < 0 || a >= g.size()) {
        throw ArgumentError("vertex " + std::to_string(a) + " out of range for graph on " +
                            std::to_string(g.size()) + " vertices");
    }
    std::vector<int> out;
    for (int b = 0; b < g.size(); b++) {
        if (g.has_edge(a, b)) {
            out.push_back(b);
        }
    }
    return out;
}

Graph permute(const Graph &g, std::span<const int> perm) {
    const int n = g.size();
    if (static_cast<int>(perm.size()) != n) {
        throw ArgumentError("permutation length does not match vertex count");
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
            throw ArgumentError("not a permutation of 0..n-1");
        }
        seen[static_cast<std::size_t>(p)] = 1;
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    }
    return Graph(n, edges, g.name());
}

namespace {

constexpr std::pair<GraphKind, std::string_view> kKindNames[] = {
    {GraphKind::kPath, "path"},
    {GraphKind::kCycle, "cycle"},
    {GraphKind::kGrid, "grid"},
    {GraphKind::kTriangular, "triangular"},
    {GraphKind::kHexagonal, "hexagonal"},
    {GraphKind::kComplete, "complete"},
    {GraphKind::kBinaryTree, "binary_tree"},
};

}  // namespace

GraphKind parse_graph_kind(std::string_view name) {
    if (name == "binary-tree") {
        return GraphKind::kBinaryTree;
    }
    for (auto [kind, text] : kKindNames) {
        if (text == name) {
            return kind;
        }
    }
    throw ArgumentError("unknown graph kind '" + std::string(name) + "'");
}

std::string_view graph_kind_name(GraphKind kind) {
    for (auto [k, text] : kKindNames) {
        if (k == kind) {
            return text;
        }
    }
    return "?";
}

Graph generate(GraphKind kind, int size) {
    const int min_size = kind == GraphKind::kCycle ? 3 : 1;
    if (size < min_size) {
        throw ArgumentError(std::string(graph_kind_name(kind)) + " size must be at least " +
                            std::to_string(min_size) + ", got " + std::to_string(size));
    }
    std::string name = std::string(graph_kind_name(kind)) + "(" + std::to_string(size) + ")";
    std::vector<Edge> edges;
    int n = size;
    auto at = [size](int r, int c) { return r * size + c; };
    switch (kind) {
        case GraphKind::kPath:
        case GraphKind::kCycle:
            for (int i = 0; i + 1 < n; i++) {
                edges.emplace_back(i, i + 1);
            }
            if (kind == GraphKind::kCycle) {
                edges.emplace_back(0, n - 1);
            }
            break;
        case GraphKind::kComplete:
            for (int u = 0; u < n; u++) {
                for (int v = u + 1; v < n; v++) {
                    edges.emplace_back(u, v);
                }
            }
            break;
        case GraphKind::kGrid:
        case GraphKind::kTriangular:
        case GraphKind::kHexagonal:
            if (size > 4096) {
                throw ArgumentError("lattice side too large");
            }
            n = size * size;
            for (int r = 0; r < size; r++) {
                for (int c = 0; c < size; c++) {
                    if (c + 1 < size) {
                        edges.emplace_back(at(r, c), at(r, c + 1));
                    }
                    if (r + 1 < size && (kind != GraphKind::kHexagonal || (r + c) % 2 == 0)) {
                        edges.emplace_back(at(r, c), at(r + 1, c));
                    }
                    if (kind == GraphKind::kTriangular && r + 1 < size && c + 1 < size) {
                        edges.emplace_back(at(r, c), at(r + 1, c + 1));
                    }
                }
            }
            break;
        case GraphKind::kBinaryTree:
            if (size > 24) {
                throw ArgumentError("binary tree depth too large");
            }
            n = (1 << (size + 1)) - 1;
            for (int v = 1; v < n; v++) {
                edges.emplace_back((v - 1) / 2, v);
            }
            break;
    }
    return Graph(n, edges, std::move(name));
}

namespace {

// Splits a line into whitespace-separated non-negative integers. Returns
// false on any token that is not a plain decimal number.
bool parse_ints(std::string_view line, std::vector<long long> &out) {
    out.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            i++;
        }
        if (i == line.size()) {
            break;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            j++;
        }
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
        if (ec != std::errc() || ptr != line.data() + j || value < 0) {
            return false;
        }
        out.push_back(value);
        i = j;
    }
    return true;
}

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    std::vector<Edge> edges;
    std::vector<long long> nums;
    auto fail = [&](const std::string &what) -> ParseError {
        return ParseError("line " + std::to_string(line_no) + ": " + what, line_no);
    };
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;
        if (is_blank(line) || line[line.find_first_not_of(" \t")] == '#') {
            continue;
        }
        if (!parse_ints(line, nums) || nums.size() != 2) {
            throw fail(have_header ? "expected \"u v\"" : "expected header \"n m\"");
        }
        if (!have_header) {
            n = nums[0];
            m = nums[1];
            if (n > (1 << 20)) {
                throw fail("vertex count too large");
            }
            have_header = true;
            continue;
        }
        if (static_cast<long long>(edges.size()) == m) {
            throw fail("more edge lines than the declared " + std::to_string(m));
        }
        const long long u = nums[0];
        const long long v = nums[1];
        if (u >= n || v >= n) {
            throw fail("vertex index " + std::to_string(std::max(u, v)) + " >= n = " + std::to_string(n));
        }
        if (u == v) {
            throw fail("self-loop at vertex " + std::to_string(u));
        }
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!have_header) {
        throw ParseError("line " + std::to_string(line_no) + ": missing header \"n m\"", line_no);
    }
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(m) +
                             " edge lines, found " + std::to_string(edges.size()),
                         line_no);
    }
    return Graph(static_cast<int>(n), edges);
}

std::string serialize(const Graph &g) {
    std::ostringstream out;
    out << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

}  // namespace graphlogic
