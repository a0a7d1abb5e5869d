#include <gtest/gtest.h>

#include "support.hpp"
#include "symrad/errors.hpp"

namespace symrad {
namespace {

using test::poly;

TEST(Parse, SingleEquationClassification) {
  const ProblemStatement s = parse("(a-x^2)^3=(b-x^3)^2");
  ASSERT_EQ(s.equations.size(), 1u);
  EXPECT_EQ(s.unknowns, (std::vector<std::string>{"x"}));
  EXPECT_EQ(s.parameters, (std::vector<std::string>{"a", "b"}));
}

TEST(Parse, SystemClassification) {
  const ProblemStatement s = parse("x^2+y^2=a; x^3+y^3=b");
  EXPECT_EQ(s.equations.size(), 2u);
  EXPECT_EQ(s.unknowns, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(s.parameters, (std::vector<std::string>{"a", "b"}));
}

TEST(Parse, ExplicitUnknowns) {
  const ProblemStatement s = parse("t^2 = x", std::vector<std::string>{"t"});
  EXPECT_EQ(s.unknowns, (std::vector<std::string>{"t"}));
  EXPECT_EQ(s.parameters, (std::vector<std::string>{"x"}));
  const auto p = to_bipoly(s).front();
  EXPECT_EQ(p.names()[0], "t");
  EXPECT_EQ(p.degree_in(0), 2u);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse("x^(-1)=a"), ParseError);
  EXPECT_THROW(parse("2x=1"), ParseError);
  EXPECT_THROW(parse("x^2"), ParseError);
  EXPECT_THROW(parse("x+=1"), ParseError);
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("x=1; y=2; x+y=3"), UnsupportedShape);
  EXPECT_THROW(parse("a=1"), UnsupportedShape);
  EXPECT_THROW(parse("x+y+z=1", std::vector<std::string>{"x", "y", "z"}), UnsupportedShape);
}

TEST(Parse, ErrorPosition) {
  try {
    parse("x^2+\n  *y=1");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
  }
}

TEST(Parse, Precedence) {
  // Unary minus binds looser than '^'; '^' is right-associative.
  EXPECT_EQ(poly("-x^2"), -poly("x*x"));
  EXPECT_EQ(poly("2^3^2"), BiPoly(ParamPoly(512)));
  EXPECT_EQ(poly("a1*x"), BiPoly::monomial(1, 0, ParamPoly::symbol("a1")));
}

TEST(ToBiPoly, SexticCanonicalForm) {
  const auto p = to_bipoly(parse("(a-x^2)^3=(b-x^3)^2")).front();
  EXPECT_EQ(-p, poly("2*x^6-3*a*x^4-2*b*x^3+3*a^2*x^2+b^2-a^3"));
}

TEST(ToBiPoly, Identity) { EXPECT_TRUE(to_bipoly(parse("x=x")).front().is_zero()); }

TEST(ToBiPoly, NinthDegreeFactorization) {
  const auto p = to_bipoly(parse("(x^3+x+b)^3+x^3+2*b=0")).front();
  EXPECT_EQ(p.degree_in(0), 9u);
  EXPECT_EQ(p, poly("(x^3+b)*(x^6+2*b*x^3+3*x^4+b^2+3*b*x+3*x^2+2)"));
}

TEST(Render, CanonicalOrder) {
  EXPECT_EQ(to_string(poly("y^2+x^2+2*y*x")), "x^2+2*x*y+y^2");
  EXPECT_EQ(to_string(poly("-x+3*a*x^2-(a-b)^2")), "3*a*x^2-x+(-a^2+2*a*b-b^2)");
}

TEST(Render, RoundTripProperty) {
  test::PolyGen gen(2024);
  for (int i = 0; i < 200; ++i) {
    const BiPoly p = gen.bivariate(5, 6, true, true);
    const std::string text = to_string(p);
    EXPECT_EQ(poly(text), p) << text;
  }
}

TEST(Subtrees, RootFirst) {
  const AstPtr e = parse_expression("(x^3+a)^3+a");
  const auto all = subtrees(e);
  ASSERT_FALSE(all.empty());
  EXPECT_EQ(all.front(), e);
  bool found_inner = false;
  for (const auto& s : all) found_inner |= ast_to_bipoly(s, kXY) == poly("x^3+a");
  EXPECT_TRUE(found_inner);
}

}  // namespace
}  // namespace symrad
