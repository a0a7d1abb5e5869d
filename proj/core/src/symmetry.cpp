#include "symrad/symmetry.hpp"

#include <vector>

#include "symrad/errors.hpp"

namespace symrad {

SigmaPoly::SigmaPoly(BiPoly poly) : poly_(std::move(poly)) {
  if (poly_.names() != kSigmaNames) poly_ = poly_.renamed(kSigmaNames);
}

std::string to_string(const SigmaPoly& s) { return to_string(s.poly()); }

std::string to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::Symmetric: return "Symmetric";
    case SymmetryClass::AntiSymmetric: return "AntiSymmetric";
    case SymmetryClass::Neither: return "Neither";
    case SymmetryClass::Zero: return "Zero";
  }
  return "?";
}

SymmetryClass classify(const BiPoly& p) {
  if (p.is_zero()) return SymmetryClass::Zero;
  if ((p.degree_in(0) > 0) != (p.degree_in(1) > 0)) {
    throw ArityError("symmetry is defined for polynomials in two unknowns; got " + to_string(p));
  }
  const BiPoly swapped = swap_unknowns(p);
  if (swapped == p) return SymmetryClass::Symmetric;
  if (swapped == -p) return SymmetryClass::AntiSymmetric;
  return SymmetryClass::Neither;
}

BiPoly antisym_factor(const BiPoly& q) {
  const SymmetryClass c = classify(q);
  if (c != SymmetryClass::AntiSymmetric) {
    throw ClassError("antisym_factor needs an anti-symmetric polynomial, got " + to_string(c));
  }
  const BiPoly difference = BiPoly::x(q.names()) - BiPoly::y(q.names());
  BiPoly r = divide_exact(q, difference);
  if (!r.is_constant() && classify(r) != SymmetryClass::Symmetric) {
    throw InvariantViolation("cofactor of x - y is not symmetric: " + to_string(r));
  }
  return r;
}

BiPoly from_elementary(const SigmaPoly& s, const UnknownNames& names) {
  return substitute(s.poly(), {{"s1", BiPoly::x(names) + BiPoly::y(names)},
                               {"s2", BiPoly::x(names) * BiPoly::y(names)}});
}

SigmaPoly to_elementary(const BiPoly& p) {
  SymmetryClass c = SymmetryClass::Neither;
  try {
    c = classify(p);
  } catch (const ArityError&) {
  }
  if (c != SymmetryClass::Symmetric && c != SymmetryClass::Zero) {
    throw ClassError("to_elementary needs a symmetric polynomial, got " + to_string(c));
  }
  const unsigned d = p.degree();
  const UnknownNames& names = p.names();

  // Candidate columns s1^i s2^j with i + 2j <= d, expanded into x, y.
  struct Column {
    unsigned i;
    unsigned j;
    BiPoly expanded;
  };
  std::vector<Column> columns;
  const BiPoly sum = BiPoly::x(names) + BiPoly::y(names);
  const BiPoly product = BiPoly::x(names) * BiPoly::y(names);
  std::vector<BiPoly> sum_powers{BiPoly(ParamPoly(1), names)};
  for (unsigned k = 1; k <= d; ++k) sum_powers.push_back(sum_powers.back() * sum);
  BiPoly product_power(ParamPoly(1), names);
  for (unsigned j = 0; 2 * j <= d; ++j) {
    for (unsigned i = 0; i + 2 * j <= d; ++i) {
      columns.push_back({i, j, sum_powers[i] * product_power});
    }
    product_power *= product;
  }

  // Rows are the monomials x^a y^b with a + b <= d.
  std::vector<Exponents> rows;
  for (unsigned total = 0; total <= d; ++total) {
    for (unsigned a = 0; a <= total; ++a) rows.emplace_back(a, total - a);
  }
  const std::size_t ncols = columns.size();
  std::vector<std::vector<Rational>> matrix(rows.size(), std::vector<Rational>(ncols));
  std::vector<ParamPoly> rhs(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t col = 0; col < ncols; ++col) {
      auto it = columns[col].expanded.terms().find(rows[r]);
      if (it != columns[col].expanded.terms().end()) {
        matrix[r][col] = *it->second.constant_value();
      }
    }
    if (auto it = p.terms().find(rows[r]); it != p.terms().end()) rhs[r] = it->second;
  }

  // Gauss-Jordan elimination over Q with a ParamPoly right-hand side.
  std::vector<std::size_t> pivot_row_of(ncols, rows.size());
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < ncols && next_row < rows.size(); ++col) {
    std::size_t pivot = next_row;
    while (pivot < rows.size() && matrix[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(matrix[pivot], matrix[next_row]);
    std::swap(rhs[pivot], rhs[next_row]);
    const Rational inv = Rational(1) / matrix[next_row][col];
    for (auto& v : matrix[next_row]) v *= inv;
    rhs[next_row] *= ParamPoly(inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next_row || matrix[r][col] == 0) continue;
      const Rational factor = matrix[r][col];
      for (std::size_t k = col; k < ncols; ++k) matrix[r][k] -= factor * matrix[next_row][k];
      rhs[r] -= ParamPoly(factor) * rhs[next_row];
    }
    pivot_row_of[col] = next_row++;
  }
  for (std::size_t r = next_row; r < rows.size(); ++r) {
    if (!rhs[r].is_zero()) throw ClassError("polynomial has no expression in s1, s2");
  }

  BiPoly result(kSigmaNames);
  for (std::size_t col = 0; col < ncols; ++col) {
    if (pivot_row_of[col] == rows.size()) continue;
    result.add_term({columns[col].i, columns[col].j}, rhs[pivot_row_of[col]]);
  }
  SigmaPoly out(result);
  if (from_elementary(out, names) != p) {
    throw InvariantViolation("s1/s2 rewrite does not expand back to the input");
  }
  return out;
}

SigmaPoly power_sum(int n) {
  if (n < 0) throw DomainError("power_sum needs n >= 0, got " + std::to_string(n));
  if (n == 0) return SigmaPoly::constant(ParamPoly(2));
  // s_n = sum_{i=0}^{n/2} (-1)^i n/(n-i) C(n-i, i) s1^(n-2i) s2^i
  BiPoly out(kSigmaNames);
  const auto k = static_cast<unsigned long>(n);
  for (unsigned long i = 0; 2 * i <= k; ++i) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), k - i, i);
    Rational coeff(mpz_class(static_cast<unsigned long>(k)) * binom,
                   mpz_class(static_cast<unsigned long>(k - i)));
    coeff.canonicalize();
    if (i % 2 == 1) coeff = -coeff;
    out.add_term({static_cast<unsigned>(k - 2 * i), static_cast<unsigned>(i)}, ParamPoly(coeff));
  }
  return SigmaPoly(out);
}

SigmaPoly power_sum_recurrence(int n) {
  if (n < 0) throw DomainError("power_sum needs n >= 0, got " + std::to_string(n));
  SigmaPoly previous = SigmaPoly::constant(ParamPoly(2));  // s_0
  SigmaPoly current = SigmaPoly::s1();                      // s_1
  if (n == 0) return previous;
  for (int k = 2; k <= n; ++k) {
    SigmaPoly next = SigmaPoly::s1() * current - SigmaPoly::s2() * previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

}  // namespace symrad
