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

#ifndef GRAPHLOGIC_LOGIC_H
#define GRAPHLOGIC_LOGIC_H

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "graphlogic/graph.h"

namespace graphlogic {

/// Variables starting with a lowercase letter range over vertices, those
/// starting with an uppercase letter over vertex sets.
enum class Sort { kVertex, kSet };

/// Sort implied by a variable name's first character.
Sort sort_of(std::string_view name);

/// Immutable C2MS formula tree: first-order logic over vertices plus set
/// quantifiers, membership and the parity atom Even(X).
class Formula {
   public:
    enum class Kind {
        kEdge,    // edge(x, y)
        kIn,      // x in X
        kEven,    // Even(X)
        kEqual,   // x = y
        kNot,
        kAnd,
        kOr,
        kExists,  // binds var(0); sort from its name
        kForall,
    };

    static Formula edge(std::string x, std::string y);
    static Formula in(std::string x, std::string set);
    static Formula even(std::string set);
    static Formula equal(std::string x, std::string y);
    static Formula negate(Formula f);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula exists(std::string var, Formula body);
    static Formula forall(std::string var, Formula body);

    Kind kind() const {
        return kind_;
    }
    bool is_atom() const {
        return kind_ <= Kind::kEqual;
    }
    bool is_quantifier() const {
        return kind_ == Kind::kExists || kind_ == Kind::kForall;
    }
    /// Variable operands of an atom, or the bound variable (index 0) of a
    /// quantifier.
    const std::string &var(std::size_t i) const {
        return vars_[i];
    }
    std::size_t arity() const {
        return vars_.size();
    }
    const Formula &child(std::size_t i) const {
        return children_[i];
    }
    std::size_t child_count() const {
        return children_.size();
    }

    friend bool operator==(const Formula &, const Formula &) = default;

   private:
    Formula(Kind kind, std::vector<std::string> vars, std::vector<Formula> children);

    Kind kind_ = Kind::kEven;
    std::vector<std::string> vars_;
    std::vector<Formula> children_;
};

/// Parses the ASCII surface syntax:
///
///   formula := quant | or
///   quant   := ("exists" | "forall") IDENT "." formula
///   or      := and { "|" and }
///   and     := not { "&" not }
///   not     := "!" not | atom
///   atom    := "edge" "(" x "," y ")" | x "in" X | "Even" "(" X ")"
///            | x "=" y | "(" formula ")"
///
/// A quantifier is also accepted wherever `not` is expected; its body then
/// extends as far right as possible. Binary operators associate left.
/// Throws ParseError carrying the character offset.
Formula parse_formula(std::string_view text);

/// Canonical text; parse_formula(to_string(f)) == f.
std::string to_string(const Formula &f);

struct FreeVariables {
    std::set<std::string> vertex;
    std::set<std::string> set;
    bool closed() const {
        return vertex.empty() && set.empty();
    }
};

FreeVariables free_variables(const Formula &f);

struct EvalOptions {
    /// Upper bound on the number of quantifier environments the evaluator
    /// may enumerate (sum over quantifiers of the product of enclosing
    /// domain sizes).
    double max_environments = 1073741824.0;  // 2^30
};

/// Estimated environment count for evaluating `f` on a graph with n vertices.
double evaluation_cost(const Formula &f, int n);

/// Truth of a closed formula on g by exhaustive enumeration with
/// short-circuiting. Vertex quantifiers range over V(g), set quantifiers over
/// all subsets. Throws ContractError for open formulas and ResourceError when
/// the cost estimate exceeds the configured bound.
bool evaluate(const Graph &g, const Formula &f, const EvalOptions &options = {});

struct TheoryVerdict {
    bool holds = true;
    /// Index of the first member on which the formula is false.
    std::optional<std::size_t> witness;
};

/// Whether f belongs to the theory of a finite family: true on every member.
/// Stops at the first member where it fails. The empty family holds vacuously.
TheoryVerdict theory_member(const GraphFamily &family, const Formula &f, const EvalOptions &options = {});

/// Library formulas: "path2", "two_colorable", "connected", "even_order".
std::vector<std::string> named_formula_names();
/// Surface text of a library formula. Throws ArgumentError for unknown names.
std::string_view named_formula_text(std::string_view name);
Formula named_formula(std::string_view name);

}  // namespace graphlogic

#endif  // GRAPHLOGIC_LOGIC_H
