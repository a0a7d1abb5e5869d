#include <gtest/gtest.h>

#include "support.hpp"
#include "symrad/errors.hpp"
#include "symrad/numverify.hpp"
#include "symrad/radical.hpp"

namespace symrad {
namespace {

using test::cx;
using test::distance;
using test::poly;
using test::q;

using Params = std::map<std::string, Complex>;

Complex eval(const RadicalExpr& e, const Params& p = {}, int precision = 30) { return eval_radical(e, p, precision); }

std::vector<Complex> values(const RootSet& s, const Params& p) {
  std::vector<Complex> out;
  for (const auto& r : s.roots) {
    for (unsigned k = 0; k < r.multiplicity; ++k) out.push_back(eval(r.value, p));
  }
  return out;
}

std::vector<Complex> oracle(const BiPoly& p, const Params& params) {
  return numeric_roots(NumPoly::from_bipoly(p, params), 30);
}

TEST(EvalRadical, PrincipalBranch) {
  EXPECT_LT(distance(eval(sqrt(RadicalExpr(2))), Complex(Real("1.41421356237309504880168872420969807857"))), 1e-35);
  const Complex c = eval(RadicalExpr::raw_root(RadicalExpr(-8), 3));
  EXPECT_LT(distance(c, Complex(Real(1), Real("1.73205080756887729352744634150587236694"))), 1e-35);
  EXPECT_LT(distance(eval(omega(4, 1)), cx(0, 1)), 1e-40);
}

TEST(EvalRadical, RootOfTheSexticAtFiveTwo) {
  const RadicalExpr r = RadicalExpr(1) - RadicalExpr(q(1, 2)) * sqrt(RadicalExpr(3)) +
                        RadicalExpr(q(1, 2)) * sqrt(RadicalExpr(3) + RadicalExpr(4) * sqrt(RadicalExpr(3)));
  const Complex v = eval(r);
  // Reference value from an independent 40-digit evaluation.
  EXPECT_LT(distance(v, Complex(Real("1.709427168516256571320261374396321835802"))), 1e-28);
  const Complex residual =
      evaluate_numeric(poly("2*x^6-3*a*x^4-2*b*x^3+3*a^2*x^2+b^2-a^3"), {{"x", v}}, {{"a", cx(5)}, {"b", cx(2)}}, 30);
  EXPECT_LT(static_cast<double>(abs(residual)), 1e-25);
  EXPECT_EQ(render(r), "1-(1/2)*sqrt(3)+(1/2)*sqrt(3+4*sqrt(3))");
}

TEST(EvalRadical, Errors) {
  const RadicalExpr a = RadicalExpr::param("a");
  EXPECT_THROW(eval(a), UnboundSymbol);
  EXPECT_THROW(eval(RadicalExpr(1) / a, {{"a", cx(0)}}), NumericSingularity);
  EXPECT_THROW(RadicalExpr(1) / RadicalExpr(0), DomainError);
}

TEST(Simplify, Rules) {
  EXPECT_TRUE(structurally_equal(sqrt(RadicalExpr(4)), RadicalExpr(2)));
  // The principal cube root of a negative rational is not real.
  EXPECT_LT(distance(eval(cbrt(RadicalExpr(q(-27, 8)))), principal_root(cx(-3.375), 3)), 1e-40);
  EXPECT_TRUE(structurally_equal(cbrt(RadicalExpr(q(27, 8))), RadicalExpr(q(3, 2))));
  const RadicalExpr a = RadicalExpr::param("a");
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_TRUE(simplify_radical(RadicalExpr::raw_add({a, RadicalExpr::raw_neg(a)})).is_zero());
  EXPECT_TRUE(root(RadicalExpr(0), 5).is_zero());
  EXPECT_EQ(render(a + a + RadicalExpr(1)), "1+2*a");
  EXPECT_EQ(render(sqrt(RadicalExpr(12))), "2*sqrt(3)");
  EXPECT_TRUE((omega(3, 1) * omega(3, 2)).is_one());
  EXPECT_EQ(render(pow(sqrt(RadicalExpr::param("b")), 2)), "b");
  EXPECT_TRUE(select(RadicalExpr(1), a, RadicalExpr(7)).kind() == RadicalExpr::Kind::Param);
  EXPECT_TRUE(structurally_equal(select(RadicalExpr(0), a, RadicalExpr(7)), RadicalExpr(7)));
}

// Random trees over a, small rationals, field operations and roots.
class TreeGen {
 public:
  explicit TreeGen(std::uint64_t seed) : gen_(seed) {}

  RadicalExpr tree(int depth) {
    if (depth == 0 || gen_.integer(0, 4) == 0) {
      if (gen_.integer(0, 2) == 0) return RadicalExpr::param("a");
      const long d = gen_.integer(1, 4);
      return RadicalExpr(make_rational(gen_.integer(-6, 6), d));
    }
    switch (gen_.integer(0, 7)) {
      case 0: return RadicalExpr::raw_add({tree(depth - 1), tree(depth - 1)});
      case 1: return RadicalExpr::raw_mul({tree(depth - 1), tree(depth - 1)});
      case 2: return RadicalExpr::raw_neg(tree(depth - 1));
      case 3: {
        RadicalExpr den = tree(depth - 1);
        if (den.is_zero()) den = RadicalExpr(3);
        return RadicalExpr::raw_div(tree(depth - 1), den);
      }
      case 4: return RadicalExpr::raw_pow(tree(depth - 1), gen_.integer(-2, 3));
      case 5: return RadicalExpr::raw_root(tree(depth - 1), static_cast<unsigned>(gen_.integer(2, 3)));
      case 6: return RadicalExpr::raw_unity(3, static_cast<unsigned>(gen_.integer(0, 2)));
      default: return RadicalExpr::raw_add({tree(depth - 1), RadicalExpr::raw_mul({tree(depth - 1), tree(depth - 1)})});
    }
  }

 private:
  test::PolyGen gen_;
};

TEST(Simplify, PreservesValue) {
  TreeGen gen(5);
  const Params at{{"a", Complex(Real("0.7312"), Real("0.2141"))}};
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const RadicalExpr raw = gen.tree(4);
    Complex before;
    try {
      before = eval(raw, at);
    } catch (const NumericSingularity&) {
      continue;
    }
    const RadicalExpr simple = simplify_radical(raw);
    const Complex after = eval(simple, at);
    const double scale = std::max(1.0, static_cast<double>(abs(before)));
    EXPECT_LT(distance(before, after) / scale, 1e-25) << render(raw) << "  ->  " << render(simple);
    ++checked;
  }
  EXPECT_GT(checked, 150);
}

TEST(RenderParse, RoundTrip) {
  TreeGen gen(17);
  const Params at{{"a", Complex(Real("-1.25"), Real("0.5"))}};
  for (int i = 0; i < 200; ++i) {
    RadicalExpr e;
    try {
      e = simplify_radical(gen.tree(4));
    } catch (const DomainError&) {
      continue;  // a subtree folded to zero under a negative power
    }
    const std::string text = render(e);
    const RadicalExpr back = parse_radical(text);
    EXPECT_EQ(render(back), text);
    try {
      EXPECT_LT(distance(eval(back, at), eval(e, at)), 1e-25) << text;
    } catch (const NumericSingularity&) {
    }
  }
  EXPECT_THROW(parse_radical("sqrt(2"), ParseError);
}

TEST(Solve, QuadraticWithParameter) {
  const RootSet s = solve_univariate_radicals(poly("x^2-x+a"));
  ASSERT_EQ(s.roots.size(), 2u);
  const Params at{{"a", cx(-3.5)}};
  for (const auto& r : s.roots) {
    const Complex v = eval(r.value, at);
    EXPECT_LT(static_cast<double>(abs(v * v - v + cx(-3.5))), 1e-40);
  }
  EXPECT_EQ(render(s.roots[0].value), "(1/2)+(1/2)*sqrt(1-4*a)");
}

TEST(Solve, CubeRootsOfUnity) {
  const RootSet s = solve_univariate_radicals(poly("x^3-1"));
  EXPECT_EQ(s.degree, 3u);
  const std::vector<Complex> expected{cx(1), eval(omega(3, 1)), eval(omega(3, 2))};
  EXPECT_TRUE(match_roots(values(s, {}), expected, Real("1e-30")).success);
}

TEST(Solve, SigmaCubicContainsOne) {
  const RootSet s = solve_univariate_radicals(poly("x^3-3*a*x+2*b"));
  const auto v = values(s, {{"a", cx(1)}, {"b", cx(1)}});
  const bool has_one = std::any_of(v.begin(), v.end(), [](const Complex& z) { return distance(z, cx(1)) < 1e-12; });
  EXPECT_TRUE(has_one);
}

TEST(Solve, CardanoWithoutLinearTerm) {
  // p = 0: the roots are the three cube roots of -q.
  const RootSet s = solve_univariate_radicals(poly("x^3+b"));
  const Params at{{"b", cx(4)}};
  const Complex base = principal_root(cx(-4), 3);
  const std::vector<Complex> expected{base, base * unity_root(3, 1), base * unity_root(3, 2)};
  EXPECT_TRUE(match_roots(values(s, at), expected, Real("1e-30")).success);
}

TEST(Solve, CardanoFallbackWhenGuardVanishes) {
  // x^3 - 3 a x + 2 b with a = b = 0 needs the stored fallback branch.
  const RootSet s = solve_univariate_radicals(poly("x^3-3*a*x+2*b"));
  for (const auto& z : values(s, {{"a", cx(0)}, {"b", cx(0)}})) EXPECT_LT(static_cast<double>(abs(z)), 1e-20);
}

TEST(Solve, Multiplicities) {
  const RootSet s = solve_univariate_radicals(poly("(x-1)^2*(x+2)"));
  unsigned total = 0;
  for (const auto& r : s.roots) {
    total += r.multiplicity;
    if (r.multiplicity == 2) EXPECT_TRUE(structurally_equal(r.value, RadicalExpr(1)));
  }
  EXPECT_EQ(total, 3u);
  const RootSet t = solve_univariate_radicals(poly("x^4"));
  ASSERT_EQ(t.roots.size(), 1u);
  EXPECT_EQ(t.roots[0].multiplicity, 4u);
}

TEST(Solve, QuarticCases) {
  const Params at{{"a", cx(2.5)}, {"b", cx(-1.5)}};
  for (const std::string text : {"x^4+a*x^2+b", "x^4+x^3+a*x+b", "x^4-2*x^3+a*x^2-x+b", "a*x^4+x+1"}) {
    const BiPoly p = poly(text);
    const RootSet s = solve_univariate_radicals(p);
    EXPECT_TRUE(match_roots(values(s, at), oracle(p, at), Real("1e-20")).success) << text;
  }
}

TEST(Solve, LeadingCoefficientAssumption) {
  const RootSet s = solve_univariate_radicals(poly("a*x^2+x+1"));
  ASSERT_EQ(s.assumptions.size(), 1u);
  EXPECT_EQ(s.assumptions[0], ParamPoly::symbol("a"));
}

TEST(Solve, OutOfRange) {
  EXPECT_THROW(solve_univariate_radicals(poly("x^5+a*x+1")), NotSolvableHere);
  EXPECT_THROW(solve_univariate_radicals(poly("a+1")), NotSolvableHere);
}

TEST(Solve, OracleEquivalenceAndVieta) {
  test::PolyGen gen(4242);
  for (int i = 0; i < 100; ++i) {
    const unsigned n = static_cast<unsigned>(gen.integer(2, 4));
    const auto c = gen.univariate(n);
    BiPoly p;
    for (unsigned k = 0; k <= n; ++k) p += BiPoly::monomial(k, 0, ParamPoly(c[k]));
    const RootSet s = solve_univariate_radicals(p);
    const auto found = values(s, {});
    ASSERT_EQ(found.size(), n);
    EXPECT_TRUE(match_roots(found, oracle(p, {}), Real("1e-8")).success) << to_string(p);
    Complex sum(0);
    Complex product(1);
    for (const auto& z : found) {
      sum += z;
      product *= z;
    }
    const Complex lead = to_complex(c[n]);
    const Complex expected_sum = -to_complex(c[n - 1]) / lead;
    const Complex expected_product = (n % 2 == 0 ? Complex(1) : Complex(-1)) * to_complex(c[0]) / lead;
    EXPECT_LT(distance(sum, expected_sum) / std::max(1.0, static_cast<double>(abs(expected_sum))), 1e-9);
    EXPECT_LT(distance(product, expected_product) / std::max(1.0, static_cast<double>(abs(expected_product))), 1e-9);
  }
}

TEST(Solve, VietaAtSampledParameters) {
  const BiPoly p = poly("x^4+a*x^3-b*x+a*b-1");
  const RootSet s = solve_univariate_radicals(p);
  test::PolyGen gen(8);
  for (int i = 0; i < 20; ++i) {
    const Complex a = to_complex(gen.rational());
    const Complex b = to_complex(gen.rational());
    const auto v = values(s, {{"a", a}, {"b", b}});
    Complex sum(0);
    Complex product(1);
    for (const auto& z : v) {
      sum += z;
      product *= z;
    }
    EXPECT_LT(distance(sum, -a), 1e-9 * std::max(1.0, static_cast<double>(abs(a))));
    EXPECT_LT(distance(product, a * b - Complex(1)), 1e-9 * std::max(1.0, static_cast<double>(abs(a * b - Complex(1)))));
  }
}

TEST(Solve, MonicQuadraticOverRadicals) {
  const auto r = solve_monic_quadratic(RadicalExpr(2), RadicalExpr(1));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].multiplicity, 2u);
  EXPECT_TRUE(r[0].value.is_one());
}

TEST(Radical, ParametersAndSubstitution) {
  const RadicalExpr e = sqrt(RadicalExpr::param("b") - RadicalExpr::param("a"));
  EXPECT_EQ(parameters_of(e), (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(structurally_equal(substitute_params(e, {{"a", q(1)}, {"b", q(10)}}), RadicalExpr(3)));
}

}  // namespace
}  // namespace symrad
