#include <gtest/gtest.h>

#include "support.hpp"
#include "symrad/errors.hpp"
#include "symrad/numverify.hpp"
#include "symrad/reduce.hpp"

namespace symrad {
namespace {

using test::cx;
using test::poly;

std::vector<Complex> reals(std::initializer_list<const char*> values) {
  std::vector<Complex> out;
  for (const char* v : values) out.push_back(Complex(Real(v)));
  return out;
}

TEST(NumericRoots, Simple) {
  const auto r = numeric_roots(NumPoly({cx(-1), cx(0), cx(1)}), 15);
  EXPECT_TRUE(match_roots(r, {cx(1), cx(-1)}, Real("1e-40")).success);
}

TEST(NumericRoots, SexticAtSevenTwo) {
  const NumPoly p = NumPoly::from_bipoly(poly("2*x^6-21*x^4-4*x^3+147*x^2-339"), {});
  const std::vector<Complex> expected{
      Complex(Real("1.963798039")),
      Complex(Real("-1.772991050")),
      Complex(Real("2.242095980"), Real("1.235716141")),
      Complex(Real("2.242095980"), Real("-1.235716141")),
      Complex(Real("-2.337499474"), Real("1.401393518")),
      Complex(Real("-2.337499474"), Real("-1.401393518")),
  };
  EXPECT_TRUE(match_roots(numeric_roots(p, 15), expected, Real("1e-6")).success);
}

TEST(NumericRoots, IterateCubic) {
  const NumPoly p = NumPoly::from_bipoly(poly("x^3-x+3"), {});
  const std::vector<Complex> expected{
      Complex(Real("-1.67169988165728")),
      Complex(Real("0.835849940828641"), Real("1.04686931885012")),
      Complex(Real("0.835849940828641"), Real("-1.04686931885012")),
  };
  EXPECT_TRUE(match_roots(numeric_roots(p, 15), expected, Real("1e-9")).success);
}

TEST(NumericRoots, KnownRootsAndClusters) {
  // (x - 1)^3 (x + 2) (x^2 + 1)
  const BiPoly f = poly("(x-1)^3*(x+2)*(x^2+1)");
  const auto roots = numeric_roots(NumPoly::from_bipoly(f, {}), 30);
  ASSERT_EQ(roots.size(), 6u);
  const auto clusters = cluster_roots(roots, 30);
  ASSERT_EQ(clusters.size(), 4u);
  for (const auto& c : clusters) {
    if (abs(c.value - cx(1)) < Real("1e-6")) {
      EXPECT_EQ(c.multiplicity, 3u);
    } else {
      EXPECT_EQ(c.multiplicity, 1u);
    }
  }
}

TEST(NumericRoots, ZeroRootsAndConstants) {
  const auto r = numeric_roots(NumPoly({cx(0), cx(0), cx(2), cx(1)}), 15);
  EXPECT_TRUE(match_roots(r, {cx(0), cx(0), cx(-2)}, Real("1e-40")).success);
  EXPECT_THROW(numeric_roots(NumPoly({cx(5)}), 15), DegreeError);
}

TEST(MatchRoots, Examples) {
  const auto ok = match_roots({cx(1), cx(-1)}, {cx(-1), cx(1)}, Real("1e-9"));
  EXPECT_TRUE(ok.success);
  EXPECT_EQ(ok.max_distance, 0);
  const auto bad = match_roots({cx(1)}, {Complex(Real(1) + Real("1e-6"))}, Real("1e-9"));
  EXPECT_FALSE(bad.success);
  EXPECT_LT(abs(bad.max_distance - Real("1e-6")), Real("1e-20"));
  const auto uneven = match_roots({cx(1), cx(2)}, {cx(1)}, Real("1e-9"));
  EXPECT_FALSE(uneven.success);
  EXPECT_EQ(uneven.unmatched_found.size(), 1u);
}

TEST(EvaluateNumeric, RingHomomorphism) {
  test::PolyGen gen(3);
  const std::map<std::string, Complex> point{{"x", Complex(Real("0.37"), Real("-1.1"))}, {"y", cx(1.7, 0.2)}};
  const std::map<std::string, Complex> params{{"a", cx(-2.25)}, {"b", cx(0.5, 1)}};
  for (int i = 0; i < 50; ++i) {
    const BiPoly p = gen.bivariate(4, 5, true);
    const BiPoly q = gen.bivariate(4, 5, true);
    const Complex lhs = evaluate_numeric(p * q, point, params, 15);
    const Complex rhs = evaluate_numeric(p, point, params, 15) * evaluate_numeric(q, point, params, 15);
    const double scale = std::max(1.0, static_cast<double>(abs(lhs)));
    EXPECT_LT(test::distance(lhs, rhs) / scale, 1e-12);
  }
}

SolutionSet symmetric_solutions() { return solve_symmetric_system(poly("x^2+y^2-a"), poly("x^3+y^3-b")); }

TEST(Verify, PassesOnExactSolutions) {
  const auto report = verify_solutions({poly("x^2+y^2-a"), poly("x^3+y^3-b")}, symmetric_solutions(), {});
  EXPECT_TRUE(report.passed);
  EXPECT_EQ(report.samples, 20);
  EXPECT_LT(report.max_residual, Real("1e-9"));
}

TEST(Verify, ScaleInvariance) {
  VerifyOptions options;
  const auto a = verify_solutions({poly("x^2+y^2-a"), poly("x^3+y^3-b")}, symmetric_solutions(), options);
  const auto b = verify_solutions({poly("7*(x^2+y^2-a)"), poly("-(x^3+y^3-b)")}, symmetric_solutions(), options);
  EXPECT_EQ(a.passed, b.passed);
  EXPECT_LT(abs(a.max_residual - b.max_residual), Real("1e-50"));
}

TEST(Verify, CorruptedRootFails) {
  SolutionSet s = symmetric_solutions();
  s.entries[2].x = s.entries[2].x + RadicalExpr(make_rational(1, 1000));
  const auto report = verify_solutions({poly("x^2+y^2-a"), poly("x^3+y^3-b")}, s, {});
  EXPECT_FALSE(report.passed);
  ASSERT_FALSE(report.failures.empty());
  EXPECT_NE(report.failures.front().find("sample"), std::string::npos);
  EXPECT_NE(report.failures.front().find("equation"), std::string::npos);
}

TEST(Verify, EmptySetIsACountMismatch) {
  SolutionSet empty;
  const auto report = verify_solutions({poly("x^3-x+a")}, empty, {});
  EXPECT_FALSE(report.passed);
  bool count = false;
  for (const auto& f : report.failures) count |= f.find("expected 3") != std::string::npos;
  EXPECT_TRUE(count);
}

TEST(Verify, ToleranceBelowPrecisionFails) {
  VerifyOptions options;
  options.tol = 1e-30;
  const auto report = verify_solutions({poly("x^2+y^2-a"), poly("x^3+y^3-b")}, symmetric_solutions(), options);
  EXPECT_FALSE(report.passed);
}

TEST(Verify, Deterministic) {
  const auto a = verify_solutions({poly("x^2+y^2-a"), poly("x^3+y^3-b")}, symmetric_solutions(), {});
  const auto b = verify_solutions({poly("x^2+y^2-a"), poly("x^3+y^3-b")}, symmetric_solutions(), {});
  EXPECT_EQ(a.max_residual, b.max_residual);
}

TEST(MergeDuplicates, CombinesEqualValues) {
  SolutionSet s;
  s.add({sqrt(RadicalExpr(4) * RadicalExpr::param("a")), std::nullopt, 1, ""});
  s.add({RadicalExpr(2) * sqrt(RadicalExpr::param("a")), std::nullopt, 1, ""});
  s.add({RadicalExpr::param("a"), std::nullopt, 1, ""});
  merge_numeric_duplicates(s);
  EXPECT_EQ(s.entries.size(), 2u);
  EXPECT_EQ(s.total_multiplicity(), 3u);
}

}  // namespace
}  // namespace symrad
