#include "symrad/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "symrad/errors.hpp"

namespace symrad {
namespace {

constexpr unsigned kMaxExponent = 4096;

class EquationParser {
 public:
  explicit EquationParser(std::string_view text) : text_(text) {}

  std::vector<EquationAst> system() {
    std::vector<EquationAst> out;
    out.push_back(equation());
    while (accept(';')) {
      skip_space();
      if (at_end()) break;  // tolerate a trailing ';'
      out.push_back(equation());
    }
    expect_end();
    return out;
  }

  AstPtr lone_expression() {
    AstPtr e = expr();
    expect_end();
    return e;
  }

 private:
  EquationAst equation() {
    AstPtr lhs = expr();
    if (!accept('=')) fail("expected '='");
    AstPtr rhs = expr();
    return {lhs, rhs};
  }

  AstPtr expr() {
    AstPtr node = term();
    for (;;) {
      if (accept('+')) {
        node = binary(AstNode::Kind::Add, node, term());
      } else if (accept('-')) {
        node = binary(AstNode::Kind::Sub, node, term());
      } else {
        return node;
      }
    }
  }

  AstPtr term() {
    AstPtr node = factor();
    while (accept('*')) node = binary(AstNode::Kind::Mul, node, factor());
    return node;
  }

  // factor = ["-"] base ["^" nat {"^" nat}]; the power chain folds from
  // the right and unary minus applies to the whole power.
  AstPtr factor() {
    const bool negate = accept('-');
    AstPtr node = base();
    if (accept('^')) {
      unsigned e = natural_exponent();
      std::vector<unsigned> chain{e};
      while (accept('^')) chain.push_back(natural_exponent());
      unsigned folded = chain.back();
      for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it) folded = checked_pow(*it, folded);
      auto pow = std::make_shared<AstNode>();
      pow->kind = AstNode::Kind::Pow;
      pow->exponent = folded;
      pow->children = {node};
      node = pow;
    }
    if (negate) {
      auto neg = std::make_shared<AstNode>();
      neg->kind = AstNode::Kind::Neg;
      neg->children = {node};
      node = neg;
    }
    return node;
  }

  AstPtr base() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const char c = text_[pos_];
    AstPtr node;
    if (accept('(')) {
      node = expr();
      if (!accept(')')) fail("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      auto num = std::make_shared<AstNode>();
      num->kind = AstNode::Kind::Number;
      num->number = mpz_class(digits(), 10);
      node = num;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      auto id = std::make_shared<AstNode>();
      id->kind = AstNode::Kind::Identifier;
      id->name = std::string(1, c);
      advance();
      if (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        id->name += text_[pos_];
        advance();
      }
      node = id;
    } else if (c == '-') {
      fail("a factor may carry at most one leading '-'; parenthesise the operand");
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    reject_implicit_product();
    return node;
  }

  // Directly adjacent identifier, digit or '(' after a complete base
  // would be an implicit product, which the grammar forbids.
  void reject_implicit_product() {
    if (at_end()) return;
    const char c = text_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
      fail("implicit multiplication is not supported; write '*' explicitly");
    }
  }

  unsigned natural_exponent() {
    skip_space();
    if (at_end()) fail("expected a natural-number exponent");
    const char c = text_[pos_];
    if (c == '-') fail("negative exponents are not allowed");
    if (c == '(') fail("exponent must be a non-negative integer literal");
    if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected a natural-number exponent");
    const int line = line_;
    const int col = column_;
    std::string d = digits();
    if (!at_end() && text_[pos_] == '.') fail("exponent must be an integer");
    mpz_class value(d, 10);
    if (value > kMaxExponent) {
      throw ParseError("exponent " + d + " exceeds the limit " + std::to_string(kMaxExponent),
                       line, col);
    }
    return static_cast<unsigned>(value.get_ui());
  }

  unsigned checked_pow(unsigned base, unsigned exponent) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), base, exponent);
    if (v > kMaxExponent) fail("exponent tower exceeds the limit " + std::to_string(kMaxExponent));
    return static_cast<unsigned>(v.get_ui());
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      out += text_[pos_];
      advance();
    }
    if (!at_end() && text_[pos_] == '.') fail("floating-point literals are not allowed in equations");
    return out;
  }

  static AstPtr binary(AstNode::Kind kind, AstPtr lhs, AstPtr rhs) {
    auto node = std::make_shared<AstNode>();
    node->kind = kind;
    node->children = {std::move(lhs), std::move(rhs)};
    return node;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect_end() {
    skip_space();
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

void collect_identifiers(const AstPtr& node, std::vector<std::string>& out) {
  if (node->kind == AstNode::Kind::Identifier) {
    if (std::find(out.begin(), out.end(), node->name) == out.end()) out.push_back(node->name);
  }
  for (const auto& child : node->children) collect_identifiers(child, out);
}

}  // namespace

ProblemStatement parse(std::string_view text,
                       const std::optional<std::vector<std::string>>& unknowns) {
  if (std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) {
    throw ParseError("empty input", 1, 1);
  }
  ProblemStatement stmt;
  stmt.equations = EquationParser(text).system();
  if (stmt.equations.size() > 2) {
    throw UnsupportedShape("at most two equations are supported, got " +
                           std::to_string(stmt.equations.size()));
  }

  std::vector<std::string> seen;
  for (const auto& eq : stmt.equations) {
    collect_identifiers(eq.lhs, seen);
    collect_identifiers(eq.rhs, seen);
  }

  if (unknowns) {
    std::set<std::string> distinct(unknowns->begin(), unknowns->end());
    if (distinct.size() != unknowns->size()) throw UnsupportedShape("duplicate unknown names");
    stmt.unknowns = *unknowns;
  } else {
    for (const char* u : {"x", "y"}) {
      if (std::find(seen.begin(), seen.end(), u) != seen.end()) stmt.unknowns.emplace_back(u);
    }
  }
  if (stmt.unknowns.empty()) throw UnsupportedShape("the input contains no unknowns");
  if (stmt.unknowns.size() > 2) {
    throw UnsupportedShape("at most two unknowns are supported, got " +
                           std::to_string(stmt.unknowns.size()));
  }
  for (const auto& name : seen) {
    if (std::find(stmt.unknowns.begin(), stmt.unknowns.end(), name) == stmt.unknowns.end()) {
      stmt.parameters.push_back(name);
    }
  }
  std::sort(stmt.parameters.begin(), stmt.parameters.end());
  return stmt;
}

AstPtr parse_expression(std::string_view text) {
  return EquationParser(text).lone_expression();
}

UnknownNames unknown_names(const ProblemStatement& stmt) {
  if (stmt.unknowns.size() == 2) return {stmt.unknowns[0], stmt.unknowns[1]};
  const std::string& u = stmt.unknowns.at(0);
  // Pad with a name that cannot collide with the unknown or a parameter.
  for (const char* pad : {"y", "x", "z", "w"}) {
    if (pad != u && std::find(stmt.parameters.begin(), stmt.parameters.end(), pad) ==
                        stmt.parameters.end()) {
      return {u, pad};
    }
  }
  return {u, u + "_"};
}

BiPoly ast_to_bipoly(const AstPtr& node, const UnknownNames& names) {
  switch (node->kind) {
    case AstNode::Kind::Number:
      return BiPoly(ParamPoly(Rational(node->number)), names);
    case AstNode::Kind::Identifier:
      if (node->name == names[0]) return BiPoly::unknown(0, names);
      if (node->name == names[1]) return BiPoly::unknown(1, names);
      return BiPoly(ParamPoly::symbol(node->name), names);
    case AstNode::Kind::Add:
      return ast_to_bipoly(node->children[0], names) + ast_to_bipoly(node->children[1], names);
    case AstNode::Kind::Sub:
      return ast_to_bipoly(node->children[0], names) - ast_to_bipoly(node->children[1], names);
    case AstNode::Kind::Mul:
      return ast_to_bipoly(node->children[0], names) * ast_to_bipoly(node->children[1], names);
    case AstNode::Kind::Pow:
      return pow(ast_to_bipoly(node->children[0], names), node->exponent);
    case AstNode::Kind::Neg:
      return -ast_to_bipoly(node->children[0], names);
  }
  throw InvariantViolation("unknown AST node kind");
}

std::vector<BiPoly> to_bipoly(const ProblemStatement& stmt) {
  const UnknownNames names = unknown_names(stmt);
  std::vector<BiPoly> out;
  for (const auto& eq : stmt.equations) {
    out.push_back(ast_to_bipoly(eq.lhs, names) - ast_to_bipoly(eq.rhs, names));
  }
  return out;
}

std::vector<AstPtr> subtrees(const AstPtr& root) {
  std::vector<AstPtr> out{root};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& child : out[i]->children) out.push_back(child);
  }
  return out;
}

}  // namespace symrad
