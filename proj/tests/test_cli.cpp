#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "symrad/errors.hpp"
#include "symrad_tools/driver.hpp"

namespace symrad::cli {
namespace {

SolveOptions with_params(std::vector<Binding> params) {
  SolveOptions o;
  o.params = std::move(params);
  return o;
}

TEST(Bindings, Parse) {
  const Binding b = parse_binding(" a = -3/2 ");
  EXPECT_EQ(b.name, "a");
  EXPECT_EQ(b.value, "-3/2");
  EXPECT_NO_THROW(parse_binding("b=2.5e-1"));
  EXPECT_THROW(parse_binding("a"), DomainError);
  EXPECT_THROW(parse_binding("a=two"), DomainError);
}

TEST(Solve, ProblemOneUsesHiddenSymmetry) {
  const SolveReport r = cmd_solve("(a-x^2)^3=(b-x^3)^2", {});
  EXPECT_EQ(r.root_count(), 6u);
  EXPECT_TRUE(r.radical);
  EXPECT_NE(r.structure.find("hidden symmetry"), std::string::npos);
  ASSERT_TRUE(r.verification.has_value());
  EXPECT_TRUE(r.verification->passed);
  EXPECT_EQ(exit_status(r), kExitVerified);
}

TEST(Solve, ProblemTwoUsesTheIterate) {
  const SolveReport r = cmd_solve("(x^3+a)^3+a=x", {});
  EXPECT_EQ(r.root_count(), 9u);
  EXPECT_NE(r.structure.find("iterate"), std::string::npos);
  EXPECT_TRUE(r.verification->passed);
}

TEST(Solve, ProblemThreeIsAnIterate) {
  const SolveReport r = cmd_solve("(x^3+x+b)^3+x^3+2*b=0", {});
  EXPECT_EQ(r.root_count(), 9u);
  // f(f(x)) - x for f = x^3 + x + b, so the plain iterate check fires first.
  EXPECT_NE(r.structure.find("iterate"), std::string::npos);
  EXPECT_TRUE(r.verification->passed);
}

TEST(Solve, ExplicitIterate) {
  SolveOptions o;
  o.as_iterate = "x^2+a";
  const SolveReport r = cmd_solve("x^4+2*a*x^2-x+a^2+a=0", o);
  EXPECT_EQ(r.root_count(), 4u);
  EXPECT_TRUE(r.verification->passed);
  o.as_iterate = "x^2";
  EXPECT_THROW(cmd_solve("x^4+2*a*x^2-x+a^2+a=0", o), UnsupportedStructure);
}

TEST(Solve, SystemPipelines) {
  EXPECT_NE(cmd_solve("x^2+y^2=a; x^3+y^3=b", {}).structure.find("classical"), std::string::npos);
  EXPECT_NE(cmd_solve("x^2+y^2=a; x^3+b*y=y^3+b*x", {}).structure.find("mixed"), std::string::npos);
  const SolveReport swapped = cmd_solve("x=a*x^2+b*y^2+c; y=a*y^2+b*x^2+c", {});
  EXPECT_NE(swapped.structure.find("swapped"), std::string::npos);
  EXPECT_TRUE(swapped.verification->passed);
  const SolveReport split = cmd_solve("a*x^2+b*y^2+x+c=0; (a+b)*x^2-y+c=0", {});
  EXPECT_NE(split.structure.find("split"), std::string::npos);
  EXPECT_EQ(split.root_count(), 4u);
  EXPECT_TRUE(split.verification->passed);
}

TEST(Solve, DegreeFourDirect) {
  const SolveReport r = cmd_solve("x^4+a*x+1=0", {});
  EXPECT_EQ(r.root_count(), 4u);
  EXPECT_TRUE(r.verification->passed);
}

TEST(Solve, NotSolvableAndNumericFallback) {
  try {
    cmd_solve("x^5-x+a=0", {});
    FAIL() << "expected NotSolvableHere";
  } catch (const NotSolvableHere& e) {
    EXPECT_EQ(error_status(e), kExitNotSolvable);
  }
  const SolveReport r = cmd_solve("x^5-x+a=0", with_params({{"a", "1.0"}}));
  EXPECT_FALSE(r.radical);
  EXPECT_EQ(r.root_count(), 5u);
  EXPECT_TRUE(r.verification->passed);
}

TEST(Solve, ErrorsMapToExitCodes) {
  try {
    cmd_solve("x^^2=1", {});
    FAIL();
  } catch (const std::exception& e) {
    EXPECT_EQ(error_status(e), kExitParseError);
  }
  try {
    cmd_solve("x+y=1", {});
    FAIL();
  } catch (const std::exception& e) {
    EXPECT_EQ(error_status(e), kExitNotSolvable);
  }
  EXPECT_THROW(cmd_solve("x^2=a", with_params({{"q", "1"}})), DomainError);
}

TEST(Solve, SkippedVerification) {
  SolveOptions o;
  o.verify = false;
  EXPECT_EQ(exit_status(cmd_solve("x^2=a", o)), kExitUnverified);
}

TEST(Solve, BindingsAtFiveTwo) {
  const SolveReport r = cmd_solve("(a-x^2)^3=(b-x^3)^2", with_params({{"a", "5"}, {"b", "2"}}));
  EXPECT_EQ(r.root_count(), 6u);
  int real = 0;
  for (const auto& row : r.roots) {
    ASSERT_TRUE(row.numeric.has_value());
    if (row.numeric->imag() == 0) real += static_cast<int>(row.multiplicity);
  }
  EXPECT_EQ(real, 2);
}

TEST(Machine, SchemaAndDeterminism) {
  const std::string a = render_machine(cmd_solve("(x^3+a)^3+a=x", with_params({{"a", "3"}})));
  const std::string b = render_machine(cmd_solve("(x^3+a)^3+a=x", with_params({{"a", "3"}})));
  EXPECT_EQ(a, b);
  const auto j = nlohmann::json::parse(a);
  for (const char* key : {"input", "structure", "assumptions", "roots", "verification", "versions"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  ASSERT_EQ(j["roots"].size(), 9u);
  const auto& root = j["roots"][0];
  EXPECT_TRUE(root["expr"].is_string());
  EXPECT_TRUE(root["multiplicity"].is_number_integer());
  EXPECT_TRUE(root["numeric"].contains("re"));
  EXPECT_TRUE(root["numeric"].contains("im"));
  for (const char* key : {"samples", "max_residual", "passed"}) EXPECT_TRUE(j["verification"].contains(key));
  EXPECT_TRUE(j["versions"].contains("gmp"));
}

TEST(Machine, NullNumericWithoutBindings) {
  const auto j = nlohmann::json::parse(render_machine(cmd_solve("x^2=a", {})));
  EXPECT_TRUE(j["roots"][0]["numeric"].is_null());
}

TEST(Verify, ReportRoundTrip) {
  const std::string report = render_machine(cmd_solve("(a-x^2)^3=(b-x^3)^2", {}));
  const VerifyOutcome ok = cmd_verify_report(report, {});
  EXPECT_EQ(ok.status, kExitVerified);

  SolveOptions tight;
  tight.tol = 1e-30;
  EXPECT_EQ(cmd_verify_report(report, tight).status, kExitFailed);

  auto j = nlohmann::json::parse(report);
  j["roots"].erase(j["roots"].begin());
  const VerifyOutcome truncated = cmd_verify_report(j.dump(), {});
  EXPECT_EQ(truncated.status, kExitFailed);
  bool count = false;
  for (const auto& f : truncated.report.failures) count |= f.find("expected 6") != std::string::npos;
  EXPECT_TRUE(count);
}

TEST(Verify, PairReport) {
  const std::string report = render_machine(cmd_solve("x^2+y^2=a; x^3+b*y=y^3+b*x", {}));
  EXPECT_EQ(cmd_verify_report(report, {}).status, kExitVerified);
}

TEST(Verify, Input) { EXPECT_EQ(cmd_verify_input("(x^3+a)^3+a=x", {}).status, kExitVerified); }

TEST(TestProblems, Grid) {
  const auto rows = cmd_testproblems({1, 2, 3}, 15, 5, 1);
  ASSERT_EQ(rows.size(), 14u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.error.empty()) << r.label << ": " << r.error;
    EXPECT_EQ(r.roots, r.problem == 1 ? 6u : 9u) << r.label;
    EXPECT_TRUE(r.radical) << r.label;
    EXPECT_TRUE(r.verified.value_or(false)) << r.label;
  }
  EXPECT_EQ(rows[0].maple, "0");
  EXPECT_EQ(rows[9].mathematica, "5");
  const std::string text = render_testproblems_text(rows);
  EXPECT_NE(text.find("a = 5, b = 2"), std::string::npos);
}

}  // namespace
}  // namespace symrad::cli
