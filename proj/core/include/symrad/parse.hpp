#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symrad/bipoly.hpp"

namespace symrad {

struct AstNode;
using AstPtr = std::shared_ptr<const AstNode>;

// Expression tree for one side of an equation. Exponents are natural
// number literals; all other literals are exact integers.
struct AstNode {
  enum class Kind { Number, Identifier, Add, Sub, Mul, Pow, Neg };

  Kind kind;
  mpz_class number;      // Number
  std::string name;      // Identifier
  unsigned exponent = 0; // Pow
  std::vector<AstPtr> children;
};

struct EquationAst {
  AstPtr lhs;
  AstPtr rhs;
};

struct ProblemStatement {
  std::vector<EquationAst> equations;
  std::vector<std::string> unknowns;
  std::vector<std::string> parameters;
};

// Parses "lhs = rhs { ; lhs = rhs }". Without an explicit list, "x" and
// "y" are unknowns (in that order, when present) and every other
// identifier is a parameter.
ProblemStatement parse(std::string_view text,
                       const std::optional<std::vector<std::string>>& unknowns = std::nullopt);

// Parses a single expression (no '='), e.g. the body of --as-iterate f=...
AstPtr parse_expression(std::string_view text);

// Name table used for a statement's polynomials: the first unknown takes
// slot 0; a single-unknown problem pads slot 1 with an unused name.
UnknownNames unknown_names(const ProblemStatement& stmt);

// Every equation as lhs - rhs, expanded.
std::vector<BiPoly> to_bipoly(const ProblemStatement& stmt);

// Expands an expression tree over the given unknown table. Identifiers
// that are not unknowns become parameters.
BiPoly ast_to_bipoly(const AstPtr& node, const UnknownNames& names);

// All subtrees, breadth-first with the root first.
std::vector<AstPtr> subtrees(const AstPtr& root);

}  // namespace symrad
