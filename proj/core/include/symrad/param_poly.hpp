#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symrad/numeric.hpp"

namespace symrad {

// Exact rational coefficient. mpq_class keeps values in lowest terms with
// a positive denominator after every arithmetic operation.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);
// "3", "-7", "2/5"; throws DomainError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
Complex to_complex(const Rational& r);
bool is_integer(const Rational& r);

// Product of parameter symbols with positive exponents, stored sorted by
// name. The empty monomial is 1.
class Monomial {
 public:
  using Factor = std::pair<std::string, unsigned>;

  Monomial() = default;
  static Monomial variable(std::string name, unsigned exponent = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  unsigned degree() const noexcept;
  unsigned exponent(std::string_view name) const noexcept;
  bool is_one() const noexcept { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  // Quotient when `divisor` divides this monomial.
  std::optional<Monomial> divide(const Monomial& divisor) const;
  // This monomial with `name` removed; pairs with exponent(name).
  Monomial without(std::string_view name) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

// Graded lexicographic order with alphabetical variable precedence.
struct GrlexLess {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

// Polynomial in the free parameters with rational coefficients. Zero
// coefficients are never stored, so structural equality is mathematical
// equality.
class ParamPoly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexLess>;

  ParamPoly() = default;
  ParamPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  ParamPoly(long constant);             // NOLINT(google-explicit-constructor)
  explicit ParamPoly(Terms terms);
  static ParamPoly symbol(std::string name);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  // Value of a constant polynomial; nullopt when a parameter occurs.
  std::optional<Rational> constant_value() const;
  unsigned degree() const noexcept;
  std::vector<std::string> symbols() const;

  // Highest term in grlex order; requires a nonzero polynomial.
  std::pair<Monomial, Rational> leading_term() const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const ParamPoly& other);
  friend ParamPoly operator+(ParamPoly lhs, const ParamPoly& rhs) { return lhs += rhs; }
  friend ParamPoly operator-(ParamPoly lhs, const ParamPoly& rhs) { return lhs -= rhs; }
  friend ParamPoly operator*(const ParamPoly& lhs, const ParamPoly& rhs);
  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

  ParamPoly substitute(const std::map<std::string, ParamPoly>& bindings) const;
  Complex evaluate(const std::map<std::string, Complex>& values) const;

  // Largest |c| over all terms; 0 for the zero polynomial.
  Rational max_abs_coefficient() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

ParamPoly pow(const ParamPoly& base, unsigned exponent);

// Quotient q with q * divisor == dividend; NotDivisible otherwise.
ParamPoly divide_exact(const ParamPoly& dividend, const ParamPoly& divisor);

// Canonical text: terms in descending grlex order, explicit '*', integer
// coefficients plain and non-integers parenthesised as "(p/q)".
std::string to_string(const ParamPoly& p);

}  // namespace symrad
