#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>

#include "symrad/numeric.hpp"
#include "symrad/param_poly.hpp"

namespace symrad {

// Exponent pair (degree in the first unknown, degree in the second).
using Exponents = std::pair<unsigned, unsigned>;

struct GrlexPairLess {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const noexcept {
    const unsigned dl = lhs.first + lhs.second;
    const unsigned dr = rhs.first + rhs.second;
    if (dl != dr) return dl < dr;
    return lhs.first < rhs.first;
  }
};

using UnknownNames = std::array<std::string, 2>;

inline const UnknownNames kXY{"x", "y"};

// Polynomial in two unknowns with ParamPoly coefficients. A univariate
// polynomial is a BiPoly whose second exponent is always zero. Binary
// operations require both operands to carry the same unknown names.
class BiPoly {
 public:
  using Terms = std::map<Exponents, ParamPoly, GrlexPairLess>;

  BiPoly() : names_(kXY) {}
  explicit BiPoly(UnknownNames names) : names_(std::move(names)) {}
  BiPoly(const ParamPoly& constant, UnknownNames names = kXY);
  BiPoly(Terms terms, UnknownNames names);

  // The first or second unknown as a polynomial.
  static BiPoly unknown(unsigned slot, UnknownNames names = kXY);
  static BiPoly x(UnknownNames names = kXY) { return unknown(0, std::move(names)); }
  static BiPoly y(UnknownNames names = kXY) { return unknown(1, std::move(names)); }
  static BiPoly monomial(unsigned dx, unsigned dy, const ParamPoly& c,
                         UnknownNames names = kXY);

  const Terms& terms() const noexcept { return terms_; }
  const UnknownNames& names() const noexcept { return names_; }
  // Slot index of an unknown name; throws SymbolMismatch if undeclared.
  unsigned slot_of(const std::string& name) const;

  bool is_zero() const noexcept { return terms_.empty(); }
  // No unknown occurs (the polynomial is a ParamPoly).
  bool is_constant() const noexcept;
  ParamPoly constant_term() const;
  unsigned degree() const noexcept;
  unsigned degree_in(unsigned slot) const noexcept;
  bool is_univariate() const noexcept { return degree_in(1) == 0; }

  // Coefficient of (unknown `slot`)^k, itself free of that unknown.
  BiPoly coefficient_in(unsigned slot, unsigned k) const;
  // Coefficients of a univariate polynomial in ascending degree.
  std::vector<ParamPoly> univariate_coefficients() const;

  // Same polynomial over a different name table (names only, no algebra).
  BiPoly renamed(UnknownNames names) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const BiPoly& other);
  friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
  friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
  friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  // Applies `f` to every coefficient (e.g. parameter specialisation).
  template <class F>
  BiPoly map_coefficients(F&& f) const {
    BiPoly out(names_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  void add_term(const Exponents& e, const ParamPoly& c);

 private:
  void require_same_names(const BiPoly& other) const;

  Terms terms_;
  UnknownNames names_;
};

BiPoly pow(const BiPoly& base, unsigned exponent);

// Simultaneous substitution of unknowns. When every unknown of `p` that
// occurs is bound, the result lives over the bindings' name table;
// otherwise bindings must share p's table.
BiPoly substitute(const BiPoly& p, const std::map<std::string, BiPoly>& bindings);

// Swaps the two unknowns.
BiPoly swap_unknowns(const BiPoly& p);

// Replaces parameters by ParamPolys (typically rational constants).
BiPoly substitute_params(const BiPoly& p, const std::map<std::string, ParamPoly>& bindings);

// Exact quotient p / d. Throws NotDivisible when the remainder is nonzero.
BiPoly divide_exact(const BiPoly& p, const BiPoly& d);

// Resultant of p and q with respect to the named unknown, as the Sylvester
// determinant computed by Bareiss fraction-free elimination.
BiPoly resultant(const BiPoly& p, const BiPoly& q, const std::string& eliminate);

// Numeric value with every unknown and parameter bound. Precision must be
// in [kMinPrecision, kMaxPrecision]; arithmetic runs at kWorkingDigits.
Complex evaluate_numeric(const BiPoly& p, const std::map<std::string, Complex>& point,
                         const std::map<std::string, Complex>& params, int precision);

// Sum over terms of |coefficient| * max(1, |x|)^i * max(1, |y|)^j; the
// scale for relative residuals. The floor at 1 keeps the scale away from
// zero at roots near the origin.
Real absolute_term_sum(const BiPoly& p, const std::map<std::string, Complex>& point,
                       const std::map<std::string, Complex>& params);

// Divides by the leading rational coefficient when the leading ParamPoly
// coefficient is a constant; otherwise divides out the rational content
// so the leading parameter term has coefficient 1.
BiPoly normalize_leading(const BiPoly& p);

std::string to_string(const BiPoly& p);

}  // namespace symrad
