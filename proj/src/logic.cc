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

#include "graphlogic/logic.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <utility>

#include "graphlogic/errors.h"

namespace graphlogic {

Sort sort_of(std::string_view name) {
    return !name.empty() && std::isupper(static_cast<unsigned char>(name.front())) ? Sort::kSet : Sort::kVertex;
}

Formula::Formula(Kind kind, std::vector<std::string> vars, std::vector<Formula> children)
    : kind_(kind), vars_(std::move(vars)), children_(std::move(children)) {
}

namespace {

void require_sort(const std::string &name, Sort sort) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) {
        throw ArgumentError("invalid variable name '" + name + "'");
    }
    if (sort_of(name) != sort) {
        throw ArgumentError(sort == Sort::kSet ? "set variable must start uppercase: '" + name + "'"
                                               : "vertex variable must start lowercase: '" + name + "'");
    }
}

}  // namespace

Formula Formula::edge(std::string x, std::string y) {
    require_sort(x, Sort::kVertex);
    require_sort(y, Sort::kVertex);
    return Formula(Kind::kEdge, {std::move(x), std::move(y)}, {});
}

Formula Formula::in(std::string x, std::string set) {
    require_sort(x, Sort::kVertex);
    require_sort(set, Sort::kSet);
    return Formula(Kind::kIn, {std::move(x), std::move(set)}, {});
}

Formula Formula::even(std::string set) {
    require_sort(set, Sort::kSet);
    return Formula(Kind::kEven, {std::move(set)}, {});
}

Formula Formula::equal(std::string x, std::string y) {
    require_sort(x, Sort::kVertex);
    require_sort(y, Sort::kVertex);
    return Formula(Kind::kEqual, {std::move(x), std::move(y)}, {});
}

Formula Formula::negate(Formula f) {
    return Formula(Kind::kNot, {}, {std::move(f)});
}

Formula Formula::conj(Formula a, Formula b) {
    return Formula(Kind::kAnd, {}, {std::move(a), std::move(b)});
}

Formula Formula::disj(Formula a, Formula b) {
    return Formula(Kind::kOr, {}, {std::move(a), std::move(b)});
}

Formula Formula::exists(std::string var, Formula body) {
    require_sort(var, sort_of(var));
    return Formula(Kind::kExists, {std::move(var)}, {std::move(body)});
}

Formula Formula::forall(std::string var, Formula body) {
    require_sort(var, sort_of(var));
    return Formula(Kind::kForall, {std::move(var)}, {std::move(body)});
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { kIdent, kLParen, kRParen, kComma, kDot, kOr, kAnd, kNot, kEq, kEnd };

struct Token {
    Tok type;
    std::string text;
    std::size_t pos;
};

constexpr std::array<std::string_view, 5> kKeywords = {"exists", "forall", "edge", "in", "Even"};

bool is_keyword(std::string_view s) {
    return std::find(kKeywords.begin(), kKeywords.end(), s) != kKeywords.end();
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            i++;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                j++;
            }
            out.push_back({Tok::kIdent, std::string(text.substr(i, j - i)), i});
            i = j;
            continue;
        }
        Tok t;
        switch (c) {
            case '(': t = Tok::kLParen; break;
            case ')': t = Tok::kRParen; break;
            case ',': t = Tok::kComma; break;
            case '.': t = Tok::kDot; break;
            case '|': t = Tok::kOr; break;
            case '&': t = Tok::kAnd; break;
            case '!': t = Tok::kNot; break;
            case '=': t = Tok::kEq; break;
            default:
                throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(i), i);
        }
        out.push_back({t, std::string(1, c), i});
        i++;
    }
    out.push_back({Tok::kEnd, "", text.size()});
    return out;
}

class Parser {
   public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {
    }

    Formula parse() {
        Formula f = formula();
        if (peek().type != Tok::kEnd) {
            fail("unexpected '" + peek().text + "'");
        }
        return f;
    }

   private:
    const Token &peek() const {
        return tokens_[at_];
    }
    const Token &next() {
        return tokens_[at_++];
    }
    bool at_keyword(std::string_view kw) const {
        return peek().type == Tok::kIdent && peek().text == kw;
    }
    [[noreturn]] void fail(const std::string &what) const {
        const auto pos = peek().pos;
        throw ParseError(what + " at offset " + std::to_string(pos), pos);
    }
    void expect(Tok type, std::string_view shown) {
        if (peek().type != type) {
            fail("expected '" + std::string(shown) + "'" +
                 (peek().type == Tok::kEnd ? std::string(" before end of input") : ", found '" + peek().text + "'"));
        }
        next();
    }
    std::string variable(Sort sort) {
        const Token &t = peek();
        if (t.type != Tok::kIdent) {
            fail(sort == Sort::kSet ? "expected set variable" : "expected vertex variable");
        }
        if (is_keyword(t.text)) {
            fail("keyword '" + t.text + "' used as a variable");
        }
        if (sort_of(t.text) != sort) {
            fail(sort == Sort::kSet ? "expected set variable (uppercase), found '" + t.text + "'"
                                    : "expected vertex variable (lowercase), found '" + t.text + "'");
        }
        return next().text;
    }

    Formula formula() {
        if (at_keyword("exists") || at_keyword("forall")) {
            return quantifier();
        }
        return disjunction();
    }

    Formula quantifier() {
        const bool exists = next().text == "exists";
        const Token &t = peek();
        if (t.type != Tok::kIdent || is_keyword(t.text)) {
            fail("expected variable after quantifier");
        }
        std::string var = next().text;
        expect(Tok::kDot, ".");
        Formula body = formula();
        return exists ? Formula::exists(std::move(var), std::move(body))
                      : Formula::forall(std::move(var), std::move(body));
    }

    Formula disjunction() {
        Formula f = conjunction();
        while (peek().type == Tok::kOr) {
            next();
            f = Formula::disj(std::move(f), conjunction());
        }
        return f;
    }

    Formula conjunction() {
        Formula f = negation();
        while (peek().type == Tok::kAnd) {
            next();
            f = Formula::conj(std::move(f), negation());
        }
        return f;
    }

    Formula negation() {
        if (peek().type == Tok::kNot) {
            next();
            return Formula::negate(negation());
        }
        if (at_keyword("exists") || at_keyword("forall")) {
            return quantifier();
        }
        return atom();
    }

    Formula atom() {
        if (peek().type == Tok::kLParen) {
            next();
            Formula f = formula();
            expect(Tok::kRParen, ")");
            return f;
        }
        if (at_keyword("edge")) {
            next();
            expect(Tok::kLParen, "(");
            std::string x = variable(Sort::kVertex);
            expect(Tok::kComma, ",");
            std::string y = variable(Sort::kVertex);
            expect(Tok::kRParen, ")");
            return Formula::edge(std::move(x), std::move(y));
        }
        if (at_keyword("Even")) {
            next();
            expect(Tok::kLParen, "(");
            std::string set = variable(Sort::kSet);
            expect(Tok::kRParen, ")");
            return Formula::even(std::move(set));
        }
        if (peek().type != Tok::kIdent) {
            fail(peek().type == Tok::kEnd ? "unexpected end of input" : "unexpected '" + peek().text + "'");
        }
        std::string x = variable(Sort::kVertex);
        if (at_keyword("in")) {
            next();
            return Formula::in(std::move(x), variable(Sort::kSet));
        }
        if (peek().type == Tok::kEq) {
            next();
            return Formula::equal(std::move(x), variable(Sort::kVertex));
        }
        fail("expected 'in' or '=' after vertex variable '" + x + "'");
    }

    std::vector<Token> tokens_;
    std::size_t at_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
    return Parser(text).parse();
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Context levels: 0 anywhere, 1 operand of '|', 2 operand of '&' (and right
// operand of '|'), 3 operand of '!' (and right operand of '&').
void print(const Formula &f, int level, std::string &out) {
    using K = Formula::Kind;
    auto wrap = [&](bool paren, auto &&body) {
        if (paren) {
            out += '(';
        }
        body();
        if (paren) {
            out += ')';
        }
    };
    switch (f.kind()) {
        case K::kEdge:
            out += "edge(" + f.var(0) + ", " + f.var(1) + ")";
            return;
        case K::kIn:
            out += f.var(0) + " in " + f.var(1);
            return;
        case K::kEven:
            out += "Even(" + f.var(0) + ")";
            return;
        case K::kEqual:
            out += f.var(0) + " = " + f.var(1);
            return;
        case K::kNot:
            out += '!';
            print(f.child(0), 3, out);
            return;
        case K::kAnd:
            wrap(level > 2, [&] {
                print(f.child(0), 2, out);
                out += " & ";
                print(f.child(1), 3, out);
            });
            return;
        case K::kOr:
            wrap(level > 1, [&] {
                print(f.child(0), 1, out);
                out += " | ";
                print(f.child(1), 2, out);
            });
            return;
        case K::kExists:
        case K::kForall:
            wrap(level > 0, [&] {
                out += f.kind() == K::kExists ? "exists " : "forall ";
                out += f.var(0) + ". ";
                print(f.child(0), 0, out);
            });
            return;
    }
}

}  // namespace

std::string to_string(const Formula &f) {
    std::string out;
    print(f, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Free variables

namespace {

void collect_free(const Formula &f, std::vector<std::string> &bound, FreeVariables &out) {
    auto note = [&](const std::string &name) {
        if (std::find(bound.begin(), bound.end(), name) == bound.end()) {
            (sort_of(name) == Sort::kSet ? out.set : out.vertex).insert(name);
        }
    };
    if (f.is_atom()) {
        for (std::size_t i = 0; i < f.arity(); i++) {
            note(f.var(i));
        }
        return;
    }
    if (f.is_quantifier()) {
        bound.push_back(f.var(0));
        collect_free(f.child(0), bound, out);
        bound.pop_back();
        return;
    }
    for (std::size_t i = 0; i < f.child_count(); i++) {
        collect_free(f.child(i), bound, out);
    }
}

}  // namespace

FreeVariables free_variables(const Formula &f) {
    FreeVariables out;
    std::vector<std::string> bound;
    collect_free(f, bound, out);
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

double cost_below(const Formula &f, double multiplier, int n) {
    if (f.is_atom()) {
        return 0.0;
    }
    if (f.is_quantifier()) {
        const double domain = sort_of(f.var(0)) == Sort::kSet ? std::ldexp(1.0, n) : static_cast<double>(n);
        const double inner = multiplier * domain;
        return inner + cost_below(f.child(0), inner, n);
    }
    double total = 0.0;
    for (std::size_t i = 0; i < f.child_count(); i++) {
        total += cost_below(f.child(i), multiplier, n);
    }
    return total;
}

bool has_set_quantifier(const Formula &f) {
    if (f.is_quantifier() && sort_of(f.var(0)) == Sort::kSet) {
        return true;
    }
    for (std::size_t i = 0; i < f.child_count(); i++) {
        if (has_set_quantifier(f.child(i))) {
            return true;
        }
    }
    return false;
}

/// Formula flattened to an array with variables resolved to environment
/// slots. Vertex and set variables live in separate slot arrays indexed by
/// binder depth.
class Program {
   public:
    struct Node {
        Formula::Kind kind;
        bool set_binder = false;
        int a = -1;  // slot of first variable / bound variable
        int b = -1;  // slot of second variable
        int left = -1;
        int right = -1;
    };

    explicit Program(const Formula &f) {
        root_ = compile(f);
    }

    int root() const {
        return root_;
    }
    const Node &node(int i) const {
        return nodes_[static_cast<std::size_t>(i)];
    }
    std::size_t vertex_slots() const {
        return max_vertex_;
    }
    std::size_t set_slots() const {
        return max_set_;
    }

   private:
    int resolve(const std::string &name) const {
        const auto &scope = sort_of(name) == Sort::kSet ? set_scope_ : vertex_scope_;
        for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
            if (*it == name) {
                return static_cast<int>(scope.rend() - it) - 1;
            }
        }
        throw ContractError("unbound " + std::string(sort_of(name) == Sort::kSet ? "set" : "vertex") +
                            " variable '" + name + "'; only closed formulas can be evaluated");
    }

    int compile(const Formula &f) {
        Node node{f.kind()};
        if (f.is_atom()) {
            node.a = resolve(f.var(0));
            if (f.arity() > 1) {
                node.b = resolve(f.var(1));
            }
        } else if (f.is_quantifier()) {
            node.set_binder = sort_of(f.var(0)) == Sort::kSet;
            auto &scope = node.set_binder ? set_scope_ : vertex_scope_;
            node.a = static_cast<int>(scope.size());
            scope.push_back(f.var(0));
            max_vertex_ = std::max(max_vertex_, vertex_scope_.size());
            max_set_ = std::max(max_set_, set_scope_.size());
            node.left = compile(f.child(0));
            scope.pop_back();
        } else {
            node.left = compile(f.child(0));
            if (f.child_count() > 1) {
                node.right = compile(f.child(1));
            }
        }
        nodes_.push_back(node);
        return static_cast<int>(nodes_.size()) - 1;
    }

    std::vector<Node> nodes_;
    std::vector<std::string> vertex_scope_;
    std::vector<std::string> set_scope_;
    std::size_t max_vertex_ = 0;
    std::size_t max_set_ = 0;
    int root_ = -1;
};

class Evaluator {
   public:
    Evaluator(const Graph &g, const Program &program)
        : g_(g), program_(program), vertex_(program.vertex_slots(), 0), set_(program.set_slots(), 0) {
    }

    bool run() {
        return eval(program_.root());
    }

   private:
    bool eval(int index) {
        using K = Formula::Kind;
        const auto &node = program_.node(index);
        switch (node.kind) {
            case K::kEdge:
                return g_.has_edge(vertex(node.a), vertex(node.b));
            case K::kIn:
                return (set(node.b) >> vertex(node.a)) & 1U;
            case K::kEven:
                return std::popcount(set(node.a)) % 2 == 0;
            case K::kEqual:
                return vertex(node.a) == vertex(node.b);
            case K::kNot:
                return !eval(node.left);
            case K::kAnd:
                return eval(node.left) && eval(node.right);
            case K::kOr:
                return eval(node.left) || eval(node.right);
            case K::kExists:
            case K::kForall:
                return quantify(node, node.kind == K::kExists);
        }
        return false;
    }

    // exists: true on the first satisfying value; forall: false on the first
    // falsifying value.
    bool quantify(const Program::Node &node, bool exists) {
        const auto slot = static_cast<std::size_t>(node.a);
        if (node.set_binder) {
            const std::uint64_t count = std::uint64_t{1} << g_.size();
            for (std::uint64_t s = 0; s < count; s++) {
                set_[slot] = s;
                if (eval(node.left) == exists) {
                    return exists;
                }
            }
            return !exists;
        }
        for (int v = 0; v < g_.size(); v++) {
            vertex_[slot] = v;
            if (eval(node.left) == exists) {
                return exists;
            }
        }
        return !exists;
    }

    int vertex(int slot) const {
        return vertex_[static_cast<std::size_t>(slot)];
    }
    std::uint64_t set(int slot) const {
        return set_[static_cast<std::size_t>(slot)];
    }

    const Graph &g_;
    const Program &program_;
    std::vector<int> vertex_;
    std::vector<std::uint64_t> set_;
};

}  // namespace

double evaluation_cost(const Formula &f, int n) {
    return cost_below(f, 1.0, n);
}

bool evaluate(const Graph &g, const Formula &f, const EvalOptions &options) {
    const Program program(f);  // throws on unbound variables
    const double cost = evaluation_cost(f, g.size());
    if (cost > options.max_environments) {
        throw ResourceError("evaluation would enumerate about " + std::to_string(cost) +
                            " environments on " + std::to_string(g.size()) + " vertices; the limit is " +
                            std::to_string(options.max_environments));
    }
    if (g.size() > 62 && has_set_quantifier(f)) {
        throw ResourceError("set quantifiers are limited to graphs with at most 62 vertices");
    }
    return Evaluator(g, program).run();
}

TheoryVerdict theory_member(const GraphFamily &family, const Formula &f, const EvalOptions &options) {
    if (!free_variables(f).closed()) {
        throw ContractError("theory membership is defined for closed formulas only");
    }
    for (std::size_t i = 0; i < family.size(); i++) {
        if (!evaluate(family[i], f, options)) {
            return {false, i};
        }
    }
    return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Named formulas

namespace {

struct NamedFormula {
    std::string_view name;
    std::string_view text;
};

// two_colorable transcribes the MS display for 2-colorability, reading
// "z, z' in X" as (z in X) & (z' in X) and spelling z' as z2.
constexpr NamedFormula kLibrary[] = {
    {"path2", "exists x. exists y. exists z. edge(x, y) & edge(y, z)"},
    {"two_colorable",
     "exists X. exists Y. (forall z. z in X | z in Y) & "
     "(forall z. forall z2. !edge(z, z2) | !(z in X & z2 in X | z in Y & z2 in Y))"},
    {"connected",
     "forall X. !((exists x. x in X) & (exists y. !y in X)) | "
     "(exists x. exists y. x in X & !y in X & edge(x, y))"},
    {"even_order", "exists X. (forall y. y in X) & Even(X)"},
};

}  // namespace

std::vector<std::string> named_formula_names() {
    std::vector<std::string> out;
    for (const auto &entry : kLibrary) {
        out.emplace_back(entry.name);
    }
    return out;
}

std::string_view named_formula_text(std::string_view name) {
    for (const auto &entry : kLibrary) {
        if (entry.name == name) {
            return entry.text;
        }
    }
    std::string known;
    for (const auto &entry : kLibrary) {
        known += (known.empty() ? "" : ", ") + std::string(entry.name);
    }
    throw ArgumentError("unknown named formula '" + std::string(name) + "' (known: " + known + ")");
}

Formula named_formula(std::string_view name) {
    return parse_formula(named_formula_text(name));
}

}  // namespace graphlogic
