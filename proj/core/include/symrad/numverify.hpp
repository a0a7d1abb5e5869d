#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symrad/bipoly.hpp"
#include "symrad/errors.hpp"
#include "symrad/numeric.hpp"
#include "symrad/solution.hpp"

namespace symrad {

// Polynomial with complex coefficients in ascending degree. Construction
// trims leading coefficients of magnitude <= 1e-30.
class NumPoly {
 public:
  NumPoly() = default;
  explicit NumPoly(std::vector<Complex> coefficients);
  // Univariate BiPoly with every parameter bound.
  static NumPoly from_bipoly(const BiPoly& p, const std::map<std::string, Complex>& params);

  const std::vector<Complex>& coefficients() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Complex operator()(const Complex& z) const;

 private:
  std::vector<Complex> c_;
};

class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& message, std::vector<Complex> best)
      : Error(message), best_(std::move(best)) {}
  const std::vector<Complex>& best_iterate() const noexcept { return best_; }

 private:
  std::vector<Complex> best_;
};

inline constexpr int kMaxAberthSweeps = 500;

// All degree() roots by Aberth-Ehrlich iteration. Multiple roots come back
// as clusters of nearby values. DegreeError for constants.
std::vector<Complex> numeric_roots(const NumPoly& p, int precision);

struct RootCluster {
  Complex value;
  unsigned multiplicity = 1;
};

// Merges roots closer than 10^(-precision/2); the cluster value is the mean.
std::vector<RootCluster> cluster_roots(const std::vector<Complex>& roots, int precision);

struct MatchReport {
  // (index in found, index in expected)
  std::vector<std::pair<std::size_t, std::size_t>> pairing;
  Real max_distance = 0;
  std::vector<std::size_t> unmatched_found;
  std::vector<std::size_t> unmatched_expected;
  bool success = false;
};

// Greedy minimum-distance pairing. Succeeds iff the lists have the same
// length and every matched distance is below tol.
MatchReport match_roots(const std::vector<Complex>& found, const std::vector<Complex>& expected,
                        const Real& tol);

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct VerifyOptions {
  int samples = 20;
  double tol = 1e-9;
  int precision = 15;
  std::uint64_t seed = kDefaultSeed;
  // Parameters held fixed instead of sampled.
  std::map<std::string, Rational> fixed;
  bool check_counts = true;
};

struct VerifyReport {
  int samples = 0;
  Real max_residual = 0;
  bool passed = false;
  std::uint64_t seed = 0;
  std::vector<std::string> failures;
};

// Evaluates every solution at random rational parameter points (numerator
// and denominator drawn from [-10, 10] and [1, 10]) and checks each
// original equation's residual relative to its absolute term sum. Points
// where an assumption vanishes, or where a solution expression divides by
// zero numerically, are redrawn. Root counts are cross-checked against the
// Aberth roots of the univariate equation, or of the resultant for a
// system.
VerifyReport verify_solutions(const std::vector<BiPoly>& original, const SolutionSet& solutions,
                              const VerifyOptions& options);

// Numeric value of every entry (first coordinate, then second when present).
struct NumericEntry {
  Complex x;
  std::optional<Complex> y;
};
std::vector<NumericEntry> evaluate_solutions(const SolutionSet& s,
                                             const std::map<std::string, Complex>& params,
                                             int precision);

// Merges entries whose values agree to 1e-20 at 40 digits on five random
// parameter points; multiplicities add up.
void merge_numeric_duplicates(SolutionSet& s, std::uint64_t seed = kDefaultSeed);

// Imaginary parts below 10^-(precision-5) are reported as real.
bool is_numerically_real(const Complex& z, int precision);

}  // namespace symrad
