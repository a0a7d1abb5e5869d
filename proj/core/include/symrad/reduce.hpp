#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symrad/bipoly.hpp"
#include "symrad/solution.hpp"
#include "symrad/symmetry.hpp"

namespace symrad {

// y = slope * x + offset
struct LinearTie {
  ParamPoly slope;
  ParamPoly offset;
};

std::string to_string(const LinearTie& tie, const UnknownNames& names = kXY);

struct Subsystem {
  std::vector<BiPoly> equations;  // each read as "= 0"
  std::optional<LinearTie> constraint;
  std::string provenance;
  bool degenerate = false;
};

struct ReductionResult {
  std::vector<Subsystem> subsystems;
  std::vector<ParamPoly> assumptions;
  // Set by pipelines whose second branch is a classical symmetric system.
  std::optional<std::pair<SigmaPoly, SigmaPoly>> sigma_equations;
  std::vector<std::string> flags;
};

struct SplitConstants {
  Rational lambda;
  Rational mu;
};

// Intermediate data of the sigma elimination: the chosen equation
// A(s1) s2 + B(s1) = 0, and the eliminated polynomial in s1 alone.
struct SigmaElimination {
  SigmaPoly first;
  SigmaPoly second;
  SigmaPoly linear;       // the equation used to eliminate s2
  SigmaPoly s2_numerator; // -B
  SigmaPoly s2_denominator;  // A
  SigmaPoly s1_equation;  // normalised univariate result
};

// Classical symmetric system p = q = 0 through s1 = x + y, s2 = x*y.
// Throws UnsupportedStructure when neither sigma equation is linear in s2
// and NotSolvableHere when the s1 equation has degree above 4.
SolutionSet solve_symmetric_system(const BiPoly& p, const BiPoly& q, SigmaElimination* info = nullptr);

// Symmetric p_s with anti-symmetric q_a.
ReductionResult split_mixed(const BiPoly& p_s, const BiPoly& q_a);

// The pair p + q_s = 0, swap(p) + q_s = 0 with symmetric q_s.
ReductionResult split_nonclassical(const BiPoly& p, const BiPoly& q_s);

// f(f(x)) = x as y = f(x), x = f(y).
ReductionResult reduce_iterate(const BiPoly& f);
BiPoly iterate_equation(const BiPoly& f);

// f(a f(x) + x + a b) + f(x) + 2b = 0 as y = a f(x) + x + a b and its swap.
ReductionResult reduce_shifted_iterate(const BiPoly& f, const ParamPoly& a, const ParamPoly& b);
BiPoly shifted_iterate_equation(const BiPoly& f, const ParamPoly& a, const ParamPoly& b);

// lambda, mu in {-3..3} with denominators up to 2, mu != 0.
std::vector<std::pair<Rational, Rational>> default_split_candidates();

// All (lambda, mu) with p(x, lambda x) == mu q(x, lambda x) identically,
// from the candidate list and from an exact proportionality solve at each
// candidate lambda. mu = 0 is never returned.
std::vector<SplitConstants> find_split_constants(
    const BiPoly& p, const BiPoly& q,
    const std::vector<std::pair<Rational, Rational>>& candidates = default_split_candidates());

// {p = 0, y = lambda x} and {p = 0, R = 0} with p - mu q = (y - lambda x) R.
ReductionResult split_lambda_mu(const BiPoly& p, const BiPoly& q, const SplitConstants& c);

struct KnabProblem {
  BiPoly first;     // x^k + y^k - a
  BiPoly second;    // x^n + y^n - b
  BiPoly equation;  // (a - x^k)^n - (b - x^n)^k
};

KnabProblem generate_knab(unsigned k, unsigned n);

// Univariate polynomial in x whose roots are the branch's first
// coordinates: the tied equation for a constrained branch, otherwise the
// resultant with respect to y.
BiPoly branch_polynomial(const Subsystem& s);

// Solves one branch: tie substitution, classical symmetric system, or
// elimination of y from an equation linear in y.
SolutionSet solve_subsystem(const Subsystem& s);

// Union of the branch solutions with the reduction's assumptions.
SolutionSet solve_reduction(const ReductionResult& r);

}  // namespace symrad
