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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "graphlogic/errors.h"
#include "graphlogic/graph.h"
#include "graphlogic/logic.h"
#include "graphlogic/rankwidth.h"
#include "graphlogic/stabilizer.h"
#include "json.hpp"

namespace graphlogic::cli {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
    std::string format = "text";
    std::uint64_t seed = 0;
    int exact_cap = 12;
};

/// Graph inputs for one subcommand: edge-list files and generator specs.
struct Sources {
    std::vector<std::string> files;
    std::vector<std::string> gens;
};

void add_source_options(CLI::App &cmd, Sources &sources, bool many) {
    auto *input = cmd.add_option("-i,--input", sources.files, "Edge-list file ('-' reads stdin)");
    auto *gen = cmd.add_option("-g,--gen", sources.gens,
                               many ? "Generated graph KIND:SIZE, or KIND:LO..HI for a range"
                                    : "Generated graph KIND:SIZE");
    if (many) {
        input->allow_extra_args(false);
        gen->allow_extra_args(false);
    } else {
        input->expected(1);
        gen->expected(1);
    }
}

int parse_int(const std::string &text, const std::string &what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw ArgumentError("invalid " + what + " '" + text + "'");
    }
    return value;
}

std::vector<Graph> generate_spec(const std::string &spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw ArgumentError("generator spec must look like KIND:SIZE, got '" + spec + "'");
    }
    const GraphKind kind = parse_graph_kind(spec.substr(0, colon));
    const std::string size = spec.substr(colon + 1);
    const auto dots = size.find("..");
    if (dots == std::string::npos) {
        return {generate(kind, parse_int(size, "size"))};
    }
    const int lo = parse_int(size.substr(0, dots), "range start");
    const int hi = parse_int(size.substr(dots + 2), "range end");
    if (hi < lo) {
        throw ArgumentError("empty size range '" + size + "'");
    }
    std::vector<Graph> out;
    for (int k = lo; k <= hi; k++) {
        out.push_back(generate(kind, k));
    }
    return out;
}

Graph read_graph_file(const std::string &path, std::istream &in) {
    std::stringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) {
            throw std::runtime_error("cannot read '" + path + "'");
        }
        buffer << file.rdbuf();
    }
    try {
        return parse_edge_list(buffer.str()).with_name(path);
    } catch (const ParseError &e) {
        throw ParseError(path + ": " + e.what(), e.position());
    }
}

GraphFamily load_family(const Sources &sources, std::istream &in) {
    GraphFamily family;
    for (const auto &path : sources.files) {
        family.push_back(read_graph_file(path, in));
    }
    for (const auto &spec : sources.gens) {
        for (auto &g : generate_spec(spec)) {
            family.push_back(std::move(g));
        }
    }
    return family;
}

Graph load_single(const Sources &sources, std::istream &in) {
    if (sources.files.size() + sources.gens.size() != 1) {
        throw ArgumentError("exactly one graph source (--input or --gen) is required");
    }
    GraphFamily family = load_family(sources, in);
    if (family.size() != 1) {
        throw ArgumentError("a size range is only accepted by 'check'");
    }
    return std::move(family.front());
}

std::string graph_label(const Graph &g) {
    return g.name().empty() ? "graph" : g.name();
}

json edges_json(const Graph &g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) {
        edges.push_back({u, v});
    }
    return edges;
}

void emit(std::ostream &out, const RunConfig &config, const json &payload, const std::string &text) {
    if (config.format == "json") {
        out << payload.dump() << '\n';
    } else {
        out << text;
    }
}

}  // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    RunConfig config;
    CLI::App app{"Graph-state, rank-width and C2MS logic toolkit", "graphlogic"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", config.seed, "Measurement RNG seed (default 0)");
    app.add_option("--exact-cap", config.exact_cap, "Largest vertex count for exhaustive search (default 12)")
        ->check(CLI::Range(2, 24));

    // gen
    auto *gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
    std::string gen_kind;
    int gen_size = 0;
    std::string gen_out;
    gen->add_option("kind", gen_kind, "path|cycle|grid|triangular|hexagonal|complete|binary_tree")->required();
    gen->add_option("size", gen_size, "Vertex count, lattice side, or tree depth")->required();
    gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

    // rankwidth
    auto *rw = app.add_subcommand("rankwidth", "Exact or greedy rank-width with a witness decomposition");
    Sources rw_sources;
    add_source_options(*rw, rw_sources, false);
    bool rw_exact = false;
    bool rw_greedy = false;
    auto *exact_flag = rw->add_flag("--exact", rw_exact, "Exhaustive search (default)");
    rw->add_flag("--greedy", rw_greedy, "Greedy caterpillar upper bound")->excludes(exact_flag);

    // cutrank
    auto *cr = app.add_subcommand("cutrank", "GF(2) cut-rank of a vertex set");
    Sources cr_sources;
    add_source_options(*cr, cr_sources, false);
    std::string cr_set;
    cr->add_option("--set", cr_set, "Comma-separated vertices, e.g. 0,1,2")->required();

    // check
    auto *check = app.add_subcommand("check", "Evaluate a C2MS sentence on a graph or a finite family");
    Sources check_sources;
    add_source_options(*check, check_sources, true);
    std::string check_formula;
    std::string check_named;
    auto *formula_opt = check->add_option("formula", check_formula, "Sentence in the ASCII syntax");
    check->add_option("--named", check_named, "Library formula: path2|two_colorable|connected|even_order")
        ->excludes(formula_opt);

    // simulate
    auto *sim = app.add_subcommand("simulate", "Pauli measurement pattern on a graph state");
    Sources sim_sources;
    add_source_options(*sim, sim_sources, false);
    std::string sim_pattern;
    sim->add_option("-p,--pattern", sim_pattern, "qubit:basis list, e.g. 0:Z,3:X")->required();

    // trees-count
    auto *tc = app.add_subcommand("trees-count", "Count leaf-labeled subcubic trees by enumeration");
    int tc_n = 0;
    tc->add_option("n", tc_n, "Leaf count")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (gen->parsed()) {
            const Graph g = generate(parse_graph_kind(gen_kind), gen_size);
            std::string text = serialize(g);
            json payload = {{"name", g.name()}, {"n", g.size()}, {"m", g.edge_count()}, {"edges", edges_json(g)}};
            if (gen_out.empty()) {
                emit(out, config, payload, text);
            } else {
                std::ofstream file(gen_out);
                file << (config.format == "json" ? payload.dump() + "\n" : text);
                if (!file) {
                    throw std::runtime_error("cannot write '" + gen_out + "'");
                }
            }
        } else if (rw->parsed()) {
            const Graph g = load_single(rw_sources, in);
            json payload = {{"graph", graph_label(g)}, {"n", g.size()}};
            std::ostringstream text;
            text << "graph: " << graph_label(g) << '\n';
            if (rw_greedy) {
                const auto d = greedy_decomposition(g);
                payload["method"] = "greedy";
                payload["width"] = d.width;
                payload["decomposition"] = to_json(d.tree);
            } else {
                const auto r = exact_rankwidth(g, {.size_cap = config.exact_cap, .prune = true});
                payload["method"] = "exact";
                payload["width"] = r.width;
                payload["decomposition"] = r.decomposition ? to_json(r.decomposition->tree) : json(nullptr);
            }
            text << "method: " << payload["method"].get<std::string>() << '\n'
                 << "width: " << payload["width"].get<int>() << '\n'
                 << "decomposition: " << payload["decomposition"].dump() << '\n';
            emit(out, config, payload, text.str());
        } else if (cr->parsed()) {
            const Graph g = load_single(cr_sources, in);
            std::vector<int> part;
            std::stringstream list(cr_set);
            for (std::string item; std::getline(list, item, ',');) {
                item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
                if (!item.empty()) {
                    part.push_back(parse_int(item, "vertex"));
                }
            }
            const auto rank = cut_rank(g, part);
            std::sort(part.begin(), part.end());
            std::vector<int> rest;
            for (int v = 0; v < g.size(); v++) {
                if (!std::binary_search(part.begin(), part.end(), v)) {
                    rest.push_back(v);
                }
            }
            json payload = {{"graph", graph_label(g)}, {"set", part}, {"complement", rest}, {"cut_rank", rank}};
            emit(out, config, payload, "cut-rank: " + std::to_string(rank) + "\n");
        } else if (check->parsed()) {
            if (check_formula.empty() == check_named.empty()) {
                throw ArgumentError("give exactly one of a formula or --named NAME");
            }
            const Formula f = check_named.empty() ? parse_formula(check_formula) : named_formula(check_named);
            const auto free = free_variables(f);
            if (!free.closed()) {
                const auto &name = free.vertex.empty() ? *free.set.begin() : *free.vertex.begin();
                throw ContractError("formula has unbound variable '" + name + "'");
            }
            const GraphFamily family = load_family(check_sources, in);
            if (family.empty()) {
                throw ArgumentError("no graphs given (use --input or --gen)");
            }
            json results = json::array();
            std::ostringstream text;
            std::optional<std::size_t> witness;
            for (std::size_t i = 0; i < family.size(); i++) {
                const bool value = evaluate(family[i], f);
                if (!value && !witness) {
                    witness = i;
                }
                results.push_back({{"index", i}, {"graph", graph_label(family[i])}, {"value", value}});
                text << graph_label(family[i]) << ": " << (value ? "true" : "false") << '\n';
            }
            text << "verdict: " << (witness ? "false" : "true");
            if (witness) {
                text << " (first failure: #" << *witness << " " << graph_label(family[*witness]) << ")";
            }
            text << '\n';
            json payload = {{"formula", to_string(f)},
                            {"results", std::move(results)},
                            {"verdict", !witness},
                            {"witness", witness ? json(*witness) : json(nullptr)}};
            emit(out, config, payload, text.str());
        } else if (sim->parsed()) {
            const Graph g = load_single(sim_sources, in);
            const auto pattern = parse_pattern(sim_pattern);
            const auto transcript = simulate_pattern(g, pattern, config.seed);
            std::ostringstream text;
            for (const auto &e : transcript) {
                text << "qubit " << e.qubit << ' ' << basis_char(e.basis) << ": " << (e.outcome > 0 ? "+1" : "-1")
                     << " (p=" << e.probability << ")\n";
            }
            emit(out, config, transcript_to_json(transcript), text.str());
        } else if (tc->parsed()) {
            if (tc_n > config.exact_cap) {
                throw ResourceError("tree enumeration refuses " + std::to_string(tc_n) + " leaves; the limit is " +
                                    std::to_string(config.exact_cap));
            }
            const auto count = count_subcubic_trees(tc_n);
            emit(out, config, json{{"n", tc_n}, {"count", count}},
                 "n=" + std::to_string(tc_n) + " trees=" + std::to_string(count) + "\n");
        }
    } catch (const ResourceError &e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const std::logic_error &e) {
        // ArgumentError, ParseError, ContractError
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kOk;
}

}  // namespace graphlogic::cli
