#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "symrad/bipoly.hpp"
#include "symrad/parse.hpp"
#include "symrad/param_poly.hpp"

namespace symrad::test {

inline BiPoly poly(const std::string& text, const UnknownNames& names = kXY) {
  return ast_to_bipoly(parse_expression(text), names);
}

inline ParamPoly param(const std::string& text) { return poly(text).constant_term(); }

inline Rational q(long n, long d = 1) { return make_rational(n, d); }

inline Complex cx(double re, double im = 0) { return Complex(Real(re), Real(im)); }

inline double distance(const Complex& a, const Complex& b) { return static_cast<double>(abs(a - b)); }

// Random polynomial in x, y (and optionally parameters a, b) with small
// integer coefficients.
class PolyGen {
 public:
  explicit PolyGen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational() {
    long d = integer(1, 6);
    return make_rational(integer(-9, 9), d);
  }

  Rational value(bool integral) { return integral ? make_rational(integer(-20, 20)) : rational(); }

  ParamPoly coefficient(bool with_params, bool integral = false) {
    ParamPoly c(value(integral));
    if (with_params && integer(0, 2) == 0) c += ParamPoly(value(integral)) * ParamPoly::symbol("a");
    if (with_params && integer(0, 3) == 0) c += ParamPoly(value(integral)) * ParamPoly::symbol("b");
    return c;
  }

  BiPoly bivariate(unsigned max_degree, unsigned terms, bool with_params = false, bool integral = false) {
    BiPoly p;
    for (unsigned t = 0; t < terms; ++t) {
      const unsigned i = static_cast<unsigned>(integer(0, max_degree));
      const unsigned j = static_cast<unsigned>(integer(0, max_degree - i));
      p += BiPoly::monomial(i, j, coefficient(with_params, integral));
    }
    return p;
  }

  // Ascending coefficients of a degree-n polynomial with a nonzero leading
  // coefficient.
  std::vector<Rational> univariate(unsigned n) {
    std::vector<Rational> c(n + 1);
    for (auto& v : c) v = make_rational(integer(-9, 9), integer(1, 4));
    while (c.back() == 0) c.back() = make_rational(integer(-9, 9), 1);
    return c;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace symrad::test
