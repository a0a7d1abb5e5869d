#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symrad/numverify.hpp"
#include "symrad/parse.hpp"
#include "symrad/solution.hpp"

namespace symrad::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitVerified = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUnverified = 2;
inline constexpr int kExitNotSolvable = 3;
inline constexpr int kExitParseError = 4;

struct Binding {
  std::string name;
  std::string value;  // "5", "-3/2" (exact) or "7.0", "2.5e-1" (numeric)
};

// "a=5" -> {a, 5}; throws DomainError on malformed text.
Binding parse_binding(std::string_view text);

struct SolveOptions {
  std::optional<std::vector<std::string>> unknowns;
  std::vector<Binding> params;
  int precision = 15;
  // Body of --as-iterate f=<expr>.
  std::optional<std::string> as_iterate;
  std::uint64_t seed = kDefaultSeed;
  int samples = 20;
  double tol = 1e-9;
  bool verify = true;
};

// Result of structure detection on a parsed statement.
struct Detection {
  std::string structure;
  SolutionSet solutions;
  // Equations the solutions must satisfy, after exact bindings.
  std::vector<BiPoly> equations;
  std::vector<std::string> notes;
};

// Tries, in order: classical symmetric system, mixed symmetric and
// anti-symmetric system, swapped pair, lambda/mu split, iterate and
// shifted-iterate shapes, the (alpha - x^k)^n = (beta - x^n)^k shape, and
// direct radicals for degree <= 4. Exact bindings are substituted into the
// derived system. Throws NotSolvableHere when nothing applies.
Detection detect_and_solve(const ProblemStatement& stmt, const std::map<std::string, Rational>& exact,
                           const std::optional<std::string>& as_iterate = std::nullopt);

struct RootRow {
  std::string expr;
  unsigned multiplicity = 1;
  std::optional<Complex> numeric;
  std::optional<Complex> numeric_y;
  std::string provenance;
};

struct SolveReport {
  std::string input;
  std::string structure;
  UnknownNames unknowns = kXY;
  bool pairs = false;
  bool radical = true;  // false when only numeric roots were produced
  std::vector<Binding> params;
  std::vector<std::string> assumptions;
  std::vector<std::string> notes;
  std::vector<std::string> flags;
  std::vector<BiPoly> equations;
  SolutionSet solutions;
  std::vector<RootRow> roots;
  std::optional<VerifyReport> verification;
  int precision = 15;
  std::uint64_t seed = kDefaultSeed;
  double seconds = 0;

  unsigned root_count() const;
};

SolveReport cmd_solve(const std::string& text, const SolveOptions& options);

// 0 verified, 1 verification failed, 2 verification skipped.
int exit_status(const SolveReport& report);

// Exit code for an exception escaping a command.
int error_status(const std::exception& e);

std::string render_text(const SolveReport& report);
// Single JSON document; identical inputs give byte-identical output.
std::string render_machine(const SolveReport& report);

struct TestProblemRow {
  int problem = 0;
  std::string statement;
  std::string label;
  std::vector<Binding> params;
  unsigned roots = 0;
  bool radical = true;
  std::optional<bool> verified;
  std::string maple;
  std::string mathematica;
  std::string error;
};

// The three built-in problems on the parameter grid of the reference
// comparison, with the published Maple and Mathematica root counts.
std::vector<TestProblemRow> cmd_testproblems(const std::vector<int>& which, int precision, int samples,
                                             std::uint64_t seed = kDefaultSeed);
std::string render_testproblems_text(const std::vector<TestProblemRow>& rows);
std::string render_testproblems_machine(const std::vector<TestProblemRow>& rows);

struct VerifyOutcome {
  int status = kExitFailed;
  VerifyReport report;
  std::string text;
};

// Re-solves `text` and verifies the result.
VerifyOutcome cmd_verify_input(const std::string& text, const SolveOptions& options);
// Verifies the roots listed in a machine-format report.
VerifyOutcome cmd_verify_report(const std::string& json_text, const SolveOptions& options);

}  // namespace symrad::cli
