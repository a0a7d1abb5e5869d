#pragma once

#include <string>

#include "symrad/bipoly.hpp"

namespace symrad {

inline const UnknownNames kSigmaNames{"s1", "s2"};

// Polynomial in the elementary symmetric polynomials s1 = x + y and
// s2 = x*y, stored as a BiPoly over the (s1, s2) name table.
class SigmaPoly {
 public:
  SigmaPoly() : poly_(kSigmaNames) {}
  explicit SigmaPoly(BiPoly poly);

  static SigmaPoly s1() { return SigmaPoly(BiPoly::x(kSigmaNames)); }
  static SigmaPoly s2() { return SigmaPoly(BiPoly::y(kSigmaNames)); }
  static SigmaPoly constant(const ParamPoly& c) { return SigmaPoly(BiPoly(c, kSigmaNames)); }

  const BiPoly& poly() const noexcept { return poly_; }
  unsigned degree_in_s1() const noexcept { return poly_.degree_in(0); }
  unsigned degree_in_s2() const noexcept { return poly_.degree_in(1); }

  friend SigmaPoly operator+(const SigmaPoly& a, const SigmaPoly& b) { return SigmaPoly(a.poly_ + b.poly_); }
  friend SigmaPoly operator-(const SigmaPoly& a, const SigmaPoly& b) { return SigmaPoly(a.poly_ - b.poly_); }
  friend SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b) { return SigmaPoly(a.poly_ * b.poly_); }
  SigmaPoly operator-() const { return SigmaPoly(-poly_); }
  friend bool operator==(const SigmaPoly&, const SigmaPoly&) = default;

 private:
  BiPoly poly_;
};

std::string to_string(const SigmaPoly& s);

enum class SymmetryClass { Symmetric, AntiSymmetric, Neither, Zero };

std::string to_string(SymmetryClass c);

// Throws ArityError for polynomials in fewer than two unknowns; the zero
// polynomial and constants are accepted (constants are Symmetric).
SymmetryClass classify(const BiPoly& p);

// R with (x - y) * R == q; requires an anti-symmetric q.
BiPoly antisym_factor(const BiPoly& q);

// Unique expression of a symmetric polynomial in s1, s2; ClassError otherwise,
// including for polynomials in a single unknown.
SigmaPoly to_elementary(const BiPoly& p);

// Substitutes s1 = x + y, s2 = x*y over the given unknown table.
BiPoly from_elementary(const SigmaPoly& s, const UnknownNames& names = kXY);

// x^n + y^n in s1, s2 via the closed-form Waring coefficients. n = 0 gives
// the constant 2; negative n throws DomainError.
SigmaPoly power_sum(int n);

// Same power sum from s_k = s1 s_{k-1} - s2 s_{k-2}.
SigmaPoly power_sum_recurrence(int n);

}  // namespace symrad
