#include "symrad/reduce.hpp"

#include <algorithm>

#include "symrad/errors.hpp"

namespace symrad {

namespace {

BiPoly tie_poly(const LinearTie& tie, const UnknownNames& names) {
  return BiPoly(tie.slope, names) * BiPoly::x(names) + BiPoly(tie.offset, names);
}

// p with y replaced by the tie, as a polynomial in x alone.
BiPoly apply_tie(const BiPoly& p, const LinearTie& tie) {
  return substitute(p, {{p.names()[1], tie_poly(tie, p.names())}});
}

BiPoly on_diagonal(const BiPoly& p) { return apply_tie(p, {ParamPoly(1), ParamPoly(0)}); }

bool is_symmetric_or_zero(const BiPoly& p) {
  const SymmetryClass c = classify(p);
  return c == SymmetryClass::Symmetric || c == SymmetryClass::Zero;
}

// Records a nonzero constant equation: the branch is empty, generically.
SolutionSet empty_branch(const UnknownNames& names, const ParamPoly& constant) {
  SolutionSet out;
  out.unknowns = names;
  out.pairs = true;
  out.add_assumption(constant);
  return out;
}

SolutionSet degenerate_branch(const UnknownNames& names) {
  SolutionSet out;
  out.unknowns = names;
  out.pairs = true;
  out.add_flag("Degenerate");
  return out;
}

// Rank of the s2 coefficient for choosing the elimination equation:
// rational constant, then parameter polynomial, then anything with s1.
int linear_rank(const BiPoly& a) {
  if (!a.is_constant()) return 2;
  return a.constant_term().is_constant() ? 0 : 1;
}

// Divides out a non-constant parameter factor c from p as often as exact.
BiPoly strip_factor(BiPoly p, const ParamPoly& c) {
  if (c.is_constant() || p.is_zero()) return p;
  const BiPoly d(c, p.names());
  for (;;) {
    try {
      p = divide_exact(p, d);
    } catch (const NotDivisible&) {
      return p;
    }
  }
}

void add_pairs(SolutionSet& out, const RadicalExpr& s1, const RadicalExpr& s2, unsigned multiplicity,
               const std::string& provenance) {
  const auto roots = solve_monic_quadratic(s1, s2);
  if (roots.size() == 1) {
    out.add({roots[0].value, roots[0].value, 2 * multiplicity, provenance});
    return;
  }
  out.add({roots[0].value, roots[1].value, multiplicity, provenance});
  out.add({roots[1].value, roots[0].value, multiplicity, provenance});
}

}  // namespace

std::string to_string(const LinearTie& tie, const UnknownNames& names) {
  return names[1] + " = " + to_string(tie_poly(tie, names));
}

SolutionSet solve_symmetric_system(const BiPoly& p, const BiPoly& q, SigmaElimination* info) {
  if (!is_symmetric_or_zero(p) || !is_symmetric_or_zero(q)) {
    throw ClassError("classical symmetric system needs two symmetric equations");
  }
  const UnknownNames& names = p.names();
  const std::vector<SigmaPoly> sigma{to_elementary(p), to_elementary(q)};
  if (info) {
    info->first = sigma[0];
    info->second = sigma[1];
  }

  for (const auto& s : sigma) {
    if (s.poly().is_constant() && !s.poly().is_zero()) return empty_branch(names, s.poly().constant_term());
  }
  for (const auto& s : sigma) {
    if (s.poly().is_zero()) return degenerate_branch(names);
  }

  int chosen = -1;
  int best_rank = 3;
  for (int i = 0; i < 2; ++i) {
    if (sigma[i].degree_in_s2() != 1) continue;
    const int rank = linear_rank(sigma[i].poly().coefficient_in(1, 1));
    if (rank < best_rank) {
      best_rank = rank;
      chosen = i;
    }
  }
  if (chosen < 0) {
    throw UnsupportedStructure("neither equation is linear in s2: " + to_string(sigma[0]) + " = 0, " +
                               to_string(sigma[1]) + " = 0");
  }
  const BiPoly& linear = sigma[chosen].poly();
  const BiPoly& other = sigma[1 - chosen].poly();
  const BiPoly A = linear.coefficient_in(1, 1);
  const BiPoly minus_B = -linear.coefficient_in(1, 0);

  // Clear the denominator A^d after substituting s2 = -B/A.
  const unsigned d = other.degree_in(1);
  BiPoly H(kSigmaNames);
  for (unsigned j = 0; j <= d; ++j) {
    H += other.coefficient_in(1, j) * pow(minus_B, j) * pow(A, d - j);
  }
  H = normalize_leading(H);
  if (info) {
    info->linear = sigma[chosen];
    info->s2_numerator = SigmaPoly(minus_B);
    info->s2_denominator = SigmaPoly(A);
    info->s1_equation = SigmaPoly(H);
  }
  if (H.is_zero()) throw UnsupportedStructure("the sigma equations are dependent");
  if (H.is_constant()) return empty_branch(names, H.constant_term());
  if (H.degree_in(0) > 4) {
    throw NotSolvableHere("the s1 equation " + to_string(SigmaPoly(H)) + " = 0 has degree " +
                          std::to_string(H.degree_in(0)) + " (s2 from " + to_string(sigma[chosen]) + " = 0)");
  }

  SolutionSet out;
  out.unknowns = names;
  out.pairs = true;
  const RootSet s1_roots = solve_univariate_radicals(H.univariate_coefficients());
  for (const auto& a : s1_roots.assumptions) out.add_assumption(a);
  if (best_rank == 1) out.add_assumption(A.constant_term());

  const auto a_coefficients = A.univariate_coefficients();
  const auto b_coefficients = minus_B.univariate_coefficients();
  for (const auto& root : s1_roots.roots) {
    const RadicalExpr s2 = evaluate_at(b_coefficients, root.value) / evaluate_at(a_coefficients, root.value);
    add_pairs(out, root.value, s2, root.multiplicity, "symmetric system in s1, s2");
  }
  return out;
}

ReductionResult split_mixed(const BiPoly& p_s, const BiPoly& q_a) {
  if (classify(p_s) != SymmetryClass::Symmetric) throw ClassError("first equation is not symmetric");
  if (classify(q_a) != SymmetryClass::AntiSymmetric) throw ClassError("second equation is not anti-symmetric");
  ReductionResult out;
  Subsystem diagonal{{normalize_leading(on_diagonal(p_s))}, LinearTie{ParamPoly(1), ParamPoly(0)},
                     "diagonal branch y = x", false};
  diagonal.degenerate = diagonal.equations.front().is_zero();
  const BiPoly r = antisym_factor(q_a);
  Subsystem symmetric{{p_s, r}, std::nullopt, "symmetric branch", false};
  out.subsystems = {diagonal, symmetric};
  out.sigma_equations = std::make_pair(to_elementary(p_s), to_elementary(r));
  if (diagonal.degenerate) out.flags.push_back("Degenerate");
  return out;
}

ReductionResult split_nonclassical(const BiPoly& p, const BiPoly& q_s) {
  if (!is_symmetric_or_zero(q_s)) throw ClassError("the shared part of a swapped pair must be symmetric");
  const BiPoly swapped = swap_unknowns(p);
  const BiPoly S = p + swapped + BiPoly(ParamPoly(2), p.names()) * q_s;
  const BiPoly D = p - swapped;
  ReductionResult out;
  Subsystem diagonal{{normalize_leading(on_diagonal(p + q_s))}, LinearTie{ParamPoly(1), ParamPoly(0)},
                     "diagonal branch y = x", false};
  diagonal.degenerate = diagonal.equations.front().is_zero();
  if (D.is_zero()) {
    // Both equations coincide; only the diagonal description is left.
    Subsystem whole{{p + q_s}, std::nullopt, "coincident equations", true};
    out.subsystems = {whole};
    out.flags.push_back("Degenerate");
    return out;
  }
  const BiPoly r = antisym_factor(D);
  Subsystem symmetric{{S, r}, std::nullopt, "symmetric branch", false};
  out.subsystems = {diagonal, symmetric};
  out.sigma_equations = std::make_pair(to_elementary(S), to_elementary(r));
  if (diagonal.degenerate) out.flags.push_back("Degenerate");
  return out;
}

namespace {

void require_univariate(const BiPoly& f) {
  if (!f.is_univariate()) throw DegreeError("the iterated map must be univariate in x");
  if (f.degree_in(0) == 0) throw DegreeError("the iterated map must have degree at least 1");
}

}  // namespace

BiPoly iterate_equation(const BiPoly& f) {
  require_univariate(f);
  return substitute(f, {{f.names()[0], f}}) - BiPoly::x(f.names());
}

ReductionResult reduce_iterate(const BiPoly& f) {
  require_univariate(f);
  const BiPoly p = BiPoly::y(f.names()) - f;
  ReductionResult out = split_nonclassical(p, BiPoly(f.names()));
  if (f == BiPoly::x(f.names())) out.flags.push_back("Degenerate");
  return out;
}

BiPoly shifted_iterate_equation(const BiPoly& f, const ParamPoly& a, const ParamPoly& b) {
  require_univariate(f);
  const UnknownNames& names = f.names();
  const BiPoly inner = BiPoly(a, names) * f + BiPoly::x(names) + BiPoly(a * b, names);
  return substitute(f, {{names[0], inner}}) + f + BiPoly(ParamPoly(2) * b, names);
}

ReductionResult reduce_shifted_iterate(const BiPoly& f, const ParamPoly& a, const ParamPoly& b) {
  require_univariate(f);
  const UnknownNames& names = f.names();
  const BiPoly p = BiPoly::y(names) - BiPoly(a, names) * f - BiPoly::x(names) - BiPoly(a * b, names);
  ReductionResult out = split_nonclassical(p, BiPoly(names));
  // Dividing y - x = a f(x) + a b by a needs a != 0.
  if (!a.is_constant()) out.assumptions.push_back(a);
  // The diagonal branch is a (f(x) + b); keep f(x) + b.
  if (!out.subsystems.empty() && !a.is_zero()) {
    for (auto& e : out.subsystems.front().equations) {
      try {
        e = divide_exact(e, BiPoly(a, names));
      } catch (const NotDivisible&) {
      }
    }
  }
  return out;
}

std::vector<std::pair<Rational, Rational>> default_split_candidates() {
  std::vector<Rational> values;
  for (long num = -6; num <= 6; ++num) {
    for (long den = 1; den <= 2; ++den) {
      const Rational r = make_rational(num, den);
      if (abs(r) > 3) continue;
      if (std::find(values.begin(), values.end(), r) == values.end()) values.push_back(r);
    }
  }
  std::sort(values.begin(), values.end());
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& lambda : values) {
    for (const auto& mu : values) {
      if (mu != 0) out.emplace_back(lambda, mu);
    }
  }
  return out;
}

namespace {

bool satisfies_split(const BiPoly& p, const BiPoly& q, const Rational& lambda, const Rational& mu) {
  const LinearTie tie{ParamPoly(lambda), ParamPoly(0)};
  return (apply_tie(p, tie) - BiPoly(ParamPoly(mu), p.names()) * apply_tie(q, tie)).is_zero();
}

}  // namespace

std::vector<SplitConstants> find_split_constants(const BiPoly& p, const BiPoly& q,
                                                 const std::vector<std::pair<Rational, Rational>>& candidates) {
  std::vector<SplitConstants> out;
  auto add = [&](const Rational& lambda, const Rational& mu) {
    const bool known = std::any_of(out.begin(), out.end(),
                                   [&](const SplitConstants& c) { return c.lambda == lambda && c.mu == mu; });
    if (!known) out.push_back({lambda, mu});
  };
  std::vector<Rational> lambdas;
  for (const auto& [lambda, mu] : candidates) {
    if (mu != 0 && satisfies_split(p, q, lambda, mu)) add(lambda, mu);
    if (std::find(lambdas.begin(), lambdas.end(), lambda) == lambdas.end()) lambdas.push_back(lambda);
  }
  // Exact proportionality at each candidate lambda, for mu outside the grid.
  for (const auto& lambda : lambdas) {
    const LinearTie tie{ParamPoly(lambda), ParamPoly(0)};
    const BiPoly pl = apply_tie(p, tie);
    const BiPoly ql = apply_tie(q, tie);
    if (ql.is_zero() || pl.is_zero()) continue;
    const auto& [e, qc] = *ql.terms().rbegin();
    auto it = pl.terms().find(e);
    if (it == pl.terms().end()) continue;
    ParamPoly ratio;
    try {
      ratio = divide_exact(it->second, qc);
    } catch (const NotDivisible&) {
      continue;
    }
    const auto mu = ratio.constant_value();
    if (!mu || *mu == 0) continue;
    if (satisfies_split(p, q, lambda, *mu)) add(lambda, *mu);
  }
  return out;
}

ReductionResult split_lambda_mu(const BiPoly& p, const BiPoly& q, const SplitConstants& c) {
  if (c.mu == 0) throw ClassError("mu = 0 makes the split independent of the second equation");
  if (!satisfies_split(p, q, c.lambda, c.mu)) {
    throw ClassError("p(x, " + to_string(c.lambda) + " x) is not " + to_string(c.mu) + " q(x, " +
                     to_string(c.lambda) + " x)");
  }
  const UnknownNames& names = p.names();
  const LinearTie tie{ParamPoly(c.lambda), ParamPoly(0)};
  const BiPoly diff = p - BiPoly(ParamPoly(c.mu), names) * q;
  ReductionResult out;
  Subsystem on_line{{p}, tie, to_string(tie, names) + " branch", false};
  if (diff.is_zero()) {
    Subsystem rest{{p}, std::nullopt, "coincident equations", true};
    out.subsystems = {on_line, rest};
    out.flags.push_back("CoincidentPair");
    return out;
  }
  const BiPoly line = BiPoly::y(names) - BiPoly(ParamPoly(c.lambda), names) * BiPoly::x(names);
  BiPoly r;
  try {
    r = divide_exact(diff, line);
  } catch (const NotDivisible&) {
    throw InvariantViolation("p - mu q is not divisible by y - lambda x although the split condition holds");
  }
  Subsystem rest{{p, r}, std::nullopt, "cofactor branch", false};
  out.subsystems = {on_line, rest};
  return out;
}

KnabProblem generate_knab(unsigned k, unsigned n) {
  if (k == 0 || n == 0) throw DomainError("exponents k and n must be positive");
  const BiPoly x = BiPoly::x();
  const BiPoly y = BiPoly::y();
  const BiPoly a(ParamPoly::symbol("a"));
  const BiPoly b(ParamPoly::symbol("b"));
  KnabProblem out;
  out.first = pow(x, k) + pow(y, k) - a;
  out.second = pow(x, n) + pow(y, n) - b;
  out.equation = pow(a - pow(x, k), n) - pow(b - pow(x, n), k);
  return out;
}

BiPoly branch_polynomial(const Subsystem& s) {
  if (s.equations.empty()) throw InvariantViolation("subsystem without equations");
  const UnknownNames& names = s.equations.front().names();
  if (s.constraint) {
    for (const auto& e : s.equations) {
      BiPoly u = apply_tie(e, *s.constraint);
      if (!u.is_zero()) return normalize_leading(u);
    }
    return BiPoly(names);
  }
  for (const auto& e : s.equations) {
    if (e.is_constant() && !e.is_zero()) return e;
  }
  if (s.equations.size() == 1) return normalize_leading(s.equations.front());
  try {
    return normalize_leading(resultant(s.equations[0], s.equations[1], names[1]));
  } catch (const DegreeError&) {
    throw UnsupportedStructure("branch equations do not both involve " + names[1]);
  }
}

SolutionSet solve_subsystem(const Subsystem& s) {
  if (s.equations.empty()) throw InvariantViolation("subsystem without equations");
  const UnknownNames& names = s.equations.front().names();
  if (s.degenerate) return degenerate_branch(names);

  std::vector<BiPoly> equations;
  for (const auto& e : s.equations) {
    if (e.is_constant() && !e.is_zero()) return empty_branch(names, e.constant_term());
    if (!e.is_zero()) equations.push_back(e);
  }
  if (equations.empty()) return degenerate_branch(names);

  SolutionSet out;
  out.unknowns = names;
  out.pairs = true;

  if (s.constraint) {
    const BiPoly u = branch_polynomial(s);
    if (u.is_zero()) return degenerate_branch(names);
    if (u.is_constant()) return empty_branch(names, u.constant_term());
    const RootSet roots = solve_univariate_radicals(u);
    for (const auto& a : roots.assumptions) out.add_assumption(a);
    const RadicalExpr slope = to_radical(s.constraint->slope);
    const RadicalExpr offset = to_radical(s.constraint->offset);
    for (const auto& r : roots.roots) out.add({r.value, slope * r.value + offset, r.multiplicity, s.provenance});
    return out;
  }

  if (equations.size() == 1) return degenerate_branch(names);

  if (is_symmetric_or_zero(equations[0]) && is_symmetric_or_zero(equations[1])) {
    SolutionSet sym = solve_symmetric_system(equations[0], equations[1]);
    for (auto& e : sym.entries) e.provenance = s.provenance;
    return sym;
  }

  // Eliminate y through an equation c y + rest(x) = 0 with c free of x.
  for (int i = 0; i < 2; ++i) {
    const BiPoly& linear = equations[i];
    if (linear.degree_in(1) != 1) continue;
    const BiPoly c = linear.coefficient_in(1, 1);
    if (!c.is_constant()) continue;
    const ParamPoly cp = c.constant_term();
    const BiPoly minus_rest = -linear.coefficient_in(1, 0);
    const BiPoly& other = equations[1 - i];
    const unsigned d = other.degree_in(1);
    BiPoly u(names);
    for (unsigned j = 0; j <= d; ++j) u += other.coefficient_in(1, j) * pow(minus_rest, j) * pow(c, d - j);
    u = normalize_leading(strip_factor(u, cp));
    if (u.is_zero()) return degenerate_branch(names);
    if (u.is_constant()) return empty_branch(names, u.constant_term());
    out.add_assumption(cp);
    const RootSet roots = solve_univariate_radicals(u);
    for (const auto& a : roots.assumptions) out.add_assumption(a);
    const auto rest_coefficients = minus_rest.univariate_coefficients();
    const RadicalExpr denominator = to_radical(cp);
    for (const auto& r : roots.roots) {
      out.add({r.value, evaluate_at(rest_coefficients, r.value) / denominator, r.multiplicity, s.provenance});
    }
    return out;
  }
  throw UnsupportedStructure("branch is neither tied, symmetric, nor linear in " + names[1]);
}

SolutionSet solve_reduction(const ReductionResult& r) {
  SolutionSet out;
  out.pairs = true;
  bool first = true;
  for (const auto& sub : r.subsystems) {
    SolutionSet part = solve_subsystem(sub);
    for (auto& e : part.entries) e.provenance = sub.provenance;
    if (first) {
      out.unknowns = part.unknowns;
      first = false;
    }
    out.append(part);
  }
  for (const auto& a : r.assumptions) out.add_assumption(a);
  for (const auto& f : r.flags) out.add_flag(f);
  return out;
}

}  // namespace symrad
