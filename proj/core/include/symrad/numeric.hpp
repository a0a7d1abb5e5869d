#pragma once

#include <boost/multiprecision/complex_adaptor.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <string>

namespace symrad {

// Every numeric path works at a fixed 60 significant decimal digits. The
// user-facing `precision` argument (15..50) controls tolerances, clamping
// and printed digits; it never lowers the working precision.
inline constexpr int kWorkingDigits = 60;
inline constexpr int kMinPrecision = 15;
inline constexpr int kMaxPrecision = 50;

using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<kWorkingDigits>,
    boost::multiprecision::et_off>;
using Complex = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<
        boost::multiprecision::mpfr_float_backend<kWorkingDigits>>,
    boost::multiprecision::et_off>;

// Throws DomainError unless kMinPrecision <= digits <= kMaxPrecision.
void check_precision(int digits);

// 10^-digits as a Real.
Real ten_to_minus(int digits);

Real pi();

// |z|^(1/n) e^(i Arg z / n) with Arg z in (-pi, pi]; a negative zero
// imaginary part counts as +0 so negative reals sit on the +pi side.
Complex principal_root(const Complex& z, unsigned n);

// e^(2 pi i j / n)
Complex unity_root(unsigned n, unsigned j);

// z^k by repeated squaring; k may be negative.
Complex int_pow(const Complex& z, long k);

std::complex<double> to_double(const Complex& z);

// General-notation text with `digits` significant digits.
std::string format_real(const Real& r, int digits);

}  // namespace symrad
