#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "symrad/bipoly.hpp"
#include "symrad/numeric.hpp"
#include "symrad/param_poly.hpp"

namespace symrad {

// Immutable expression over rationals, parameter symbols, field
// operations, integer powers, principal n-th roots and roots of unity.
// Subtrees are shared, so copies are cheap and values are thread-safe.
//
// Select(guard, primary, fallback) evaluates `primary` unless the guard
// value is numerically zero, in which case `fallback` is used. Cardano and
// Ferrari roots use it for the parameter values where the generic formula
// divides by zero; text rendering shows the primary branch.
class RadicalExpr {
 public:
  enum class Kind { Rational, Param, Add, Mul, Neg, Div, IntPow, Root, UnityRoot, Select };

  RadicalExpr();  // the rational 0
  RadicalExpr(const Rational& r);  // NOLINT(google-explicit-constructor)
  RadicalExpr(long r);             // NOLINT(google-explicit-constructor)

  // Raw constructors: build exactly the requested node.
  static RadicalExpr param(std::string name);
  static RadicalExpr raw_add(std::vector<RadicalExpr> terms);
  static RadicalExpr raw_mul(std::vector<RadicalExpr> factors);
  static RadicalExpr raw_neg(RadicalExpr e);
  // Throws DomainError when the denominator is the literal zero.
  static RadicalExpr raw_div(RadicalExpr num, RadicalExpr den);
  static RadicalExpr raw_pow(RadicalExpr base, long k);
  // Throws DomainError when n < 2.
  static RadicalExpr raw_root(RadicalExpr base, unsigned n);
  // j is reduced modulo n.
  static RadicalExpr raw_unity(unsigned n, unsigned j);
  static RadicalExpr raw_select(RadicalExpr guard, RadicalExpr primary, RadicalExpr fallback);

  Kind kind() const noexcept;
  const Rational& rational() const;  // Kind::Rational
  const std::string& name() const;   // Kind::Param
  const std::vector<RadicalExpr>& args() const noexcept;
  long exponent() const noexcept;    // Kind::IntPow
  unsigned index() const noexcept;   // Kind::Root and UnityRoot order n
  unsigned unity_power() const noexcept;  // Kind::UnityRoot j

  bool is_rational() const noexcept { return kind() == Kind::Rational; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  // Identity of the shared node, used for evaluation memoisation.
  const void* id() const noexcept { return node_.get(); }

  friend bool structurally_equal(const RadicalExpr& a, const RadicalExpr& b);

  struct Node;  // opaque outside radical.cpp

 private:
  explicit RadicalExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Simplifying builders; operands are assumed already simplified.
RadicalExpr operator+(const RadicalExpr& a, const RadicalExpr& b);
RadicalExpr operator-(const RadicalExpr& a, const RadicalExpr& b);
RadicalExpr operator-(const RadicalExpr& a);
RadicalExpr operator*(const RadicalExpr& a, const RadicalExpr& b);
RadicalExpr operator/(const RadicalExpr& a, const RadicalExpr& b);
RadicalExpr pow(const RadicalExpr& base, long k);
RadicalExpr root(const RadicalExpr& base, unsigned n);
RadicalExpr sqrt(const RadicalExpr& base);
RadicalExpr cbrt(const RadicalExpr& base);
RadicalExpr omega(unsigned n, unsigned j);
RadicalExpr select(const RadicalExpr& guard, const RadicalExpr& primary, const RadicalExpr& fallback);

RadicalExpr to_radical(const ParamPoly& p);
// Sum of c_i * value^i for ascending coefficients c_i.
RadicalExpr evaluate_at(const std::vector<ParamPoly>& coefficients, const RadicalExpr& value);

// Bottom-up application of the fixed rule set: flattening, rational
// folding, like-term and like-factor collection, perfect-power roots,
// power collapse, unity-root arithmetic and negation normalisation.
RadicalExpr simplify_radical(const RadicalExpr& e);

// Principal-branch evaluation at kWorkingDigits. Throws UnboundSymbol for
// a missing parameter and NumericSingularity when a divisor has magnitude
// below 10^-precision.
Complex eval_radical(const RadicalExpr& e, const std::map<std::string, Complex>& params,
                     int precision);

// Parameters occurring in the expression, sorted.
std::vector<std::string> parameters_of(const RadicalExpr& e);

// Replaces parameters by rational constants and re-simplifies.
RadicalExpr substitute_params(const RadicalExpr& e, const std::map<std::string, Rational>& values);

// Text form using sqrt(.), cbrt(.), root(., n), omega(n, j).
std::string render(const RadicalExpr& e);

// Parses the text form produced by render (plus '/', '^' and unary '-').
RadicalExpr parse_radical(std::string_view text);

struct RadicalRoot {
  RadicalExpr value;
  unsigned multiplicity = 1;
};

// Roots of a univariate polynomial. Multiplicities sum to `degree`.
// `assumptions` lists parameter expressions assumed nonzero.
struct RootSet {
  std::vector<RadicalRoot> roots;
  unsigned degree = 0;
  std::vector<ParamPoly> assumptions;
};

// Closed-form roots for degree 1..4 (linear, quadratic, Cardano, Ferrari
// via the resolvent cubic). Throws NotSolvableHere otherwise.
RootSet solve_univariate_radicals(const BiPoly& p);

// Same for a polynomial given by ascending ParamPoly coefficients.
RootSet solve_univariate_radicals(const std::vector<ParamPoly>& coefficients);

// Roots of z^2 - s z + t = 0 for radical coefficients; a discriminant
// that simplifies to 0 yields one double root.
std::vector<RadicalRoot> solve_monic_quadratic(const RadicalExpr& s, const RadicalExpr& t);

}  // namespace symrad
