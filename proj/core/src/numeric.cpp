#include "symrad/numeric.hpp"

#include <iomanip>
#include <sstream>

#include "symrad/errors.hpp"

namespace symrad {

void check_precision(int digits) {
  if (digits < kMinPrecision || digits > kMaxPrecision) {
    throw DomainError("precision must lie in [" +
                      std::to_string(kMinPrecision) + ", " +
                      std::to_string(kMaxPrecision) + "] digits, got " +
                      std::to_string(digits));
  }
}

Real ten_to_minus(int digits) {
  return boost::multiprecision::pow(Real(10), Real(-digits));
}

Real pi() { return boost::math::constants::pi<Real>(); }

Complex principal_root(const Complex& z, unsigned n) {
  if (n == 0) throw DomainError("root index must be positive");
  const Real re = z.real();
  Real im = z.imag();
  if (re == 0 && im == 0) return Complex(0);
  if (im == 0) im = Real(0);  // drop a negative zero
  const Real modulus = boost::multiprecision::sqrt(re * re + im * im);
  const Real theta = boost::multiprecision::atan2(im, re);
  const Real r = boost::multiprecision::pow(modulus, Real(1) / Real(n));
  const Real phi = theta / Real(n);
  return Complex(r * boost::multiprecision::cos(phi),
                 r * boost::multiprecision::sin(phi));
}

Complex unity_root(unsigned n, unsigned j) {
  if (n == 0) throw DomainError("unity root order must be positive");
  j %= n;
  if (j == 0) return Complex(1);
  if (2 * j == n) return Complex(-1);
  const Real phi = Real(2) * pi() * Real(j) / Real(n);
  return Complex(boost::multiprecision::cos(phi),
                 boost::multiprecision::sin(phi));
}

Complex int_pow(const Complex& z, long k) {
  if (k < 0) return Complex(1) / int_pow(z, -k);
  Complex result(1);
  Complex base = z;
  auto e = static_cast<unsigned long>(k);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::complex<double> to_double(const Complex& z) {
  return {z.real().convert_to<double>(), z.imag().convert_to<double>()};
}

std::string format_real(const Real& r, int digits) {
  std::ostringstream out;
  out << std::setprecision(digits) << r;
  return out.str();
}

}  // namespace symrad
