#include <algorithm>
#include <gmpxx.h>

#include "symrad/errors.hpp"
#include "symrad/radical.hpp"

namespace symrad {

namespace {

RadicalExpr R(const ParamPoly& p) { return to_radical(p); }

void add_root(std::vector<RadicalRoot>& roots, const RadicalExpr& value, unsigned multiplicity) {
  for (auto& r : roots) {
    if (structurally_equal(r.value, value)) {
      r.multiplicity += multiplicity;
      return;
    }
  }
  roots.push_back({value, multiplicity});
}

void add_assumption(std::vector<ParamPoly>& out, const ParamPoly& p) {
  if (p.is_constant()) return;
  // p != 0 is unchanged by scaling, so store the monic form.
  const ParamPoly monic = p * ParamPoly(Rational(1 / p.leading_term().second));
  if (std::find(out.begin(), out.end(), monic) == out.end()) out.push_back(monic);
}

// Roots of a x^2 + b x + c.
void solve_quadratic(const ParamPoly& a, const ParamPoly& b, const ParamPoly& c, RootSet& out) {
  const ParamPoly disc = b * b - ParamPoly(4) * a * c;
  const RadicalExpr two_a = R(ParamPoly(2) * a);
  if (disc.is_zero()) {
    add_root(out.roots, R(-b) / two_a, 2);
    return;
  }
  const RadicalExpr sq = sqrt(R(disc));
  add_root(out.roots, (R(-b) + sq) / two_a, 1);
  add_root(out.roots, (R(-b) - sq) / two_a, 1);
}

// Roots of a x^3 + b x^2 + c x + d. With x = (T - b)/(3a) the cubic
// becomes T^3 + P T + Q.
void solve_cubic(const ParamPoly& a, const ParamPoly& b, const ParamPoly& c, const ParamPoly& d,
                 RootSet& out) {
  const ParamPoly P = ParamPoly(9) * a * c - ParamPoly(3) * b * b;
  const ParamPoly Q = ParamPoly(2) * pow(b, 3) - ParamPoly(9) * a * b * c + ParamPoly(27) * a * a * d;
  const ParamPoly disc = ParamPoly(4) * pow(P, 3) + ParamPoly(27) * Q * Q;
  const RadicalExpr three_a = R(ParamPoly(3) * a);
  const RadicalExpr rb = R(b);

  if (disc.is_zero()) {
    if (P.is_zero()) {
      add_root(out.roots, R(-b) / three_a, 3);
      return;
    }
    const ParamPoly h = b * b - ParamPoly(3) * a * c;
    add_assumption(out.assumptions, h);
    add_root(out.roots, R(ParamPoly(9) * a * d - b * c) / R(ParamPoly(2) * h), 2);
    add_root(out.roots, R(ParamPoly(4) * a * b * c - ParamPoly(9) * a * a * d - pow(b, 3)) / R(a * h), 1);
    return;
  }

  const RadicalExpr rq = R(Q);
  if (P.is_zero()) {
    const RadicalExpr t = cbrt(-rq);
    for (unsigned k = 0; k < 3; ++k) add_root(out.roots, (t * omega(3, k) - rb) / three_a, 1);
    return;
  }

  const RadicalExpr rp = R(P);
  const RadicalExpr half_q = rq / RadicalExpr(2);
  const RadicalExpr delta = sqrt(rq * rq / RadicalExpr(4) + pow(rp, 3) / RadicalExpr(27));
  const RadicalExpr u = cbrt(-half_q + delta);
  const RadicalExpr v = -rp / (RadicalExpr(3) * u);
  // u vanishes exactly when P does at the evaluation point; the three
  // cube roots of -Q are then the roots.
  const RadicalExpr t0 = cbrt(-rq);
  for (unsigned k = 0; k < 3; ++k) {
    const RadicalExpr primary = u * omega(3, k) + v * omega(3, (3 - k) % 3);
    const RadicalExpr fallback = t0 * omega(3, k);
    add_root(out.roots, (select(u, primary, fallback) - rb) / three_a, 1);
  }
}

// Y^2 = z for each root z of z^2 + P z + R.
std::vector<RadicalRoot> biquadratic(const ParamPoly& P, const ParamPoly& Rc) {
  RootSet z;
  solve_quadratic(ParamPoly(1), P, Rc, z);
  std::vector<RadicalRoot> ys;
  for (const auto& root : z.roots) {
    const RadicalExpr s = sqrt(root.value);
    add_root(ys, s, root.multiplicity);
    add_root(ys, -s, root.multiplicity);
  }
  return ys;
}

// Roots of a x^4 + b x^3 + c x^2 + d x + e through x = (Y - b)/(4a) and
// Y^4 + P Y^2 + Q Y + R.
void solve_quartic(const ParamPoly& a, const ParamPoly& b, const ParamPoly& c, const ParamPoly& d,
                   const ParamPoly& e, RootSet& out) {
  const ParamPoly P = ParamPoly(16) * a * c - ParamPoly(6) * b * b;
  const ParamPoly Q = ParamPoly(8) * pow(b, 3) - ParamPoly(32) * a * b * c + ParamPoly(64) * a * a * d;
  const ParamPoly Rc = ParamPoly(-3) * pow(b, 4) + ParamPoly(256) * pow(a, 3) * e -
                       ParamPoly(64) * a * a * b * d + ParamPoly(16) * a * b * b * c;
  const RadicalExpr four_a = R(ParamPoly(4) * a);
  const RadicalExpr rb = R(b);
  auto back = [&](const RadicalExpr& y) { return (y - rb) / four_a; };

  if (Q.is_zero()) {
    for (const auto& y : biquadratic(P, Rc)) add_root(out.roots, back(y.value), y.multiplicity);
    return;
  }

  // Resolvent m^3 + P m^2 + (P^2/4 - R) m - Q^2/8; its first root gives
  // (Y^2 + P/2 + m)^2 = 2m (Y - Q/(4m))^2.
  RootSet resolvent = solve_univariate_radicals(
      std::vector<ParamPoly>{-(Q * Q) * ParamPoly(make_rational(1, 8)),
                             P * P * ParamPoly(make_rational(1, 4)) - Rc, P, ParamPoly(1)});
  const RadicalExpr m = resolvent.roots.front().value;
  const RadicalExpr s = sqrt(RadicalExpr(2) * m);
  const RadicalExpr base = RadicalExpr(-2) * R(P) - RadicalExpr(2) * m;
  const RadicalExpr q_over_s = RadicalExpr(2) * R(Q) / s;
  const RadicalExpr w1 = sqrt(base - q_over_s);
  const RadicalExpr w2 = sqrt(base + q_over_s);
  const std::vector<RadicalExpr> primary{(s + w1) / RadicalExpr(2), (s - w1) / RadicalExpr(2),
                                         (-s + w2) / RadicalExpr(2), (-s - w2) / RadicalExpr(2)};
  // When s vanishes at the evaluation point, Q does too and the quartic
  // is biquadratic there.
  const ParamPoly bq_disc = P * P - ParamPoly(4) * Rc;
  const RadicalExpr bq_root = sqrt(R(bq_disc));
  const RadicalExpr z1 = (-R(P) + bq_root) / RadicalExpr(2);
  const RadicalExpr z2 = (-R(P) - bq_root) / RadicalExpr(2);
  const std::vector<RadicalExpr> fallback{sqrt(z1), -sqrt(z1), sqrt(z2), -sqrt(z2)};
  for (std::size_t i = 0; i < 4; ++i) add_root(out.roots, back(select(s, primary[i], fallback[i])), 1);
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> out;
  const mpz_class m = abs(n);
  for (mpz_class d = 1; d * d <= m; ++d) {
    if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t()) != 0) {
      out.push_back(d);
      if (d * d != m) out.push_back(m / d);
    }
  }
  return out;
}

Rational horner(const std::vector<Rational>& c, const Rational& x) {
  Rational v(0);
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

// Strips rational roots from a polynomial with rational constant
// coefficients (nonzero constant term), so numeric instances get exact
// roots where they exist. Gives up on very large coefficients.
void peel_rational_roots(std::vector<ParamPoly>& c, RootSet& out) {
  std::vector<Rational> q;
  for (const auto& p : c) {
    auto v = p.constant_value();
    if (!v) return;
    q.push_back(*v);
  }
  mpz_class l = 1;
  for (const auto& r : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den().get_mpz_t());
  const mpz_class c0 = Rational(q.front() * l).get_num();
  const mpz_class cn = Rational(q.back() * l).get_num();
  const mpz_class limit("1000000000000");
  if (abs(c0) > limit || abs(cn) > limit) return;
  const auto ps = divisors(c0);
  const auto qs = divisors(cn);
  bool found = true;
  while (found && q.size() > 2) {
    found = false;
    for (const auto& num : ps) {
      for (const auto& den : qs) {
        for (int sign : {1, -1}) {
          Rational r(num * sign, den);
          r.canonicalize();
          if (horner(q, r) != 0) continue;
          // Synthetic division by (x - r).
          std::vector<Rational> quotient(q.size() - 1);
          Rational carry(0);
          for (std::size_t i = q.size(); i-- > 1;) {
            carry = carry * r + q[i];
            quotient[i - 1] = carry;
          }
          q = std::move(quotient);
          add_root(out.roots, RadicalExpr(r), 1);
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
  }
  c.assign(q.begin(), q.end());
}

}  // namespace

RootSet solve_univariate_radicals(const BiPoly& p) {
  return solve_univariate_radicals(p.univariate_coefficients());
}

RootSet solve_univariate_radicals(const std::vector<ParamPoly>& coefficients) {
  std::vector<ParamPoly> c = coefficients;
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  if (c.size() < 2) throw NotSolvableHere("degree 0 polynomial has no roots to solve for");
  const unsigned degree = static_cast<unsigned>(c.size() - 1);
  if (degree > 4) {
    throw NotSolvableHere("degree " + std::to_string(degree) +
                          " exceeds the closed-form solvers (degree 1 to 4)");
  }
  RootSet out;
  out.degree = degree;
  add_assumption(out.assumptions, c.back());

  // Pull out x^k when the low coefficients vanish identically.
  unsigned zeros = 0;
  while (c[zeros].is_zero()) ++zeros;
  if (zeros > 0) {
    add_root(out.roots, RadicalExpr(0), zeros);
    c.erase(c.begin(), c.begin() + zeros);
  }
  if (c.size() > 2) peel_rational_roots(c, out);

  switch (c.size() - 1) {
    case 0:
      break;
    case 1:
      try {
        add_root(out.roots, R(-divide_exact(c[0], c[1])), 1);
      } catch (const NotDivisible&) {
        add_root(out.roots, R(-c[0]) / R(c[1]), 1);
      }
      break;
    case 2:
      solve_quadratic(c[2], c[1], c[0], out);
      break;
    case 3:
      solve_cubic(c[3], c[2], c[1], c[0], out);
      break;
    case 4:
      solve_quartic(c[4], c[3], c[2], c[1], c[0], out);
      break;
  }
  return out;
}

std::vector<RadicalRoot> solve_monic_quadratic(const RadicalExpr& s, const RadicalExpr& t) {
  const RadicalExpr disc = s * s - RadicalExpr(4) * t;
  std::vector<RadicalRoot> roots;
  if (disc.is_zero()) {
    roots.push_back({s / RadicalExpr(2), 2});
    return roots;
  }
  const RadicalExpr sq = sqrt(disc);
  roots.push_back({(s + sq) / RadicalExpr(2), 1});
  roots.push_back({(s - sq) / RadicalExpr(2), 1});
  return roots;
}

}  // namespace symrad
