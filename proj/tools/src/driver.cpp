#include "symrad_tools/driver.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <boost/version.hpp>
#include <chrono>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "symrad/errors.hpp"
#include "symrad/reduce.hpp"
#include "symrad/symmetry.hpp"

#ifndef SYMRAD_VERSION
#define SYMRAD_VERSION "0.0.0"
#endif

namespace symrad::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

bool is_exact_literal(const std::string& text) {
  try {
    parse_rational(text);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

// Exact value of a decimal literal such as "-2.50" or "1e-3".
std::optional<Rational> parse_decimal(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) return std::nullopt;
  long exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    std::size_t used = 0;
    try {
      exponent = std::stol(text.substr(i), &used);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (used == 0 || std::abs(exponent) > 1000) return std::nullopt;
    i += used;
  }
  if (i != text.size()) return std::nullopt;
  mpz_class num(digits, 10);
  mpz_class ten_power;
  const long shift = exponent - scale;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(shift)));
  Rational r = shift >= 0 ? Rational(num * ten_power) : Rational(num, ten_power);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::map<std::string, ParamPoly> as_bindings(const std::map<std::string, Rational>& values) {
  std::map<std::string, ParamPoly> out;
  for (const auto& [n, v] : values) out.emplace(n, ParamPoly(v));
  return out;
}

BiPoly specialize(const BiPoly& p, const std::map<std::string, Rational>& exact) {
  return exact.empty() ? p : substitute_params(p, as_bindings(exact));
}

ParamPoly specialize(const ParamPoly& p, const std::map<std::string, Rational>& exact) {
  return exact.empty() ? p : p.substitute(as_bindings(exact));
}

// r with p == r * q, for a nonzero rational r.
std::optional<Rational> proportion(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() || q.is_zero() || p.names() != q.names()) return std::nullopt;
  const auto& [e, qc] = *q.terms().rbegin();
  auto it = p.terms().find(e);
  if (it == p.terms().end()) return std::nullopt;
  ParamPoly r;
  try {
    r = divide_exact(it->second, qc);
  } catch (const NotDivisible&) {
    return std::nullopt;
  }
  auto value = r.constant_value();
  if (!value || *value == 0) return std::nullopt;
  if (p != BiPoly(ParamPoly(*value), p.names()) * q) return std::nullopt;
  return value;
}

SymmetryClass safe_classify(const BiPoly& p) {
  try {
    return classify(p);
  } catch (const ArityError&) {
    return SymmetryClass::Neither;
  }
}

std::string describe_map(const BiPoly& f) { return to_string(f); }

std::vector<BiPoly> distinct_univariate_subtrees(const EquationAst& eq, const UnknownNames& names,
                                                 unsigned min_degree) {
  std::vector<BiPoly> out;
  for (const auto& side : {eq.lhs, eq.rhs}) {
    for (const auto& node : subtrees(side)) {
      BiPoly p = ast_to_bipoly(node, names);
      if (!p.is_univariate() || p.degree_in(0) < min_degree) continue;
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
      if (out.size() >= 256) return out;
    }
  }
  return out;
}

struct KnabCandidate {
  unsigned m;      // power of x inside the base
  unsigned e;      // outer exponent
  ParamPoly alpha; // base = +-(alpha - x^m)
};

std::vector<KnabCandidate> knab_candidates(const EquationAst& eq, const UnknownNames& names) {
  std::vector<KnabCandidate> out;
  for (const auto& side : {eq.lhs, eq.rhs}) {
    for (const auto& node : subtrees(side)) {
      if (node->kind != AstNode::Kind::Pow || node->exponent < 1) continue;
      const BiPoly base = ast_to_bipoly(node->children.front(), names);
      if (!base.is_univariate()) continue;
      const unsigned m = base.degree_in(0);
      if (m == 0) continue;
      bool shape = true;
      Rational sign(0);
      ParamPoly constant;
      for (const auto& [exps, c] : base.terms()) {
        if (exps.first == m) {
          auto v = c.constant_value();
          if (!v || (*v != 1 && *v != -1)) shape = false;
          else sign = -*v;
        } else if (exps.first == 0) {
          constant = c;
        } else {
          shape = false;
        }
      }
      if (!shape || sign == 0) continue;
      out.push_back({m, node->exponent, ParamPoly(sign) * constant});
    }
  }
  return out;
}

SolutionSet from_roots(const RootSet& roots, const UnknownNames& names, const std::string& provenance) {
  SolutionSet out;
  out.unknowns = names;
  for (const auto& r : roots.roots) out.add({r.value, std::nullopt, r.multiplicity, provenance});
  for (const auto& a : roots.assumptions) out.add_assumption(a);
  return out;
}

std::optional<Detection> try_iterate(const BiPoly& e_sym, const EquationAst& eq, const UnknownNames& names,
                                     const std::map<std::string, Rational>& exact,
                                     const std::optional<std::string>& as_iterate) {
  std::vector<BiPoly> candidates;
  if (as_iterate) {
    candidates.push_back(ast_to_bipoly(parse_expression(*as_iterate), names));
  } else {
    candidates = distinct_univariate_subtrees(eq, names, 2);
  }
  const unsigned degree = e_sym.degree_in(0);
  for (const auto& f : candidates) {
    if (!f.is_univariate() || f.degree_in(0) == 0) continue;
    if (f.degree_in(0) * f.degree_in(0) != degree) continue;
    if (!proportion(e_sym, iterate_equation(f))) continue;
    const BiPoly fb = specialize(f, exact);
    const ReductionResult r = reduce_iterate(fb);
    Detection d;
    d.structure = "iterate f(f(x)) = x with f = " + describe_map(f);
    d.solutions = project_first(solve_reduction(r));
    d.equations = {specialize(e_sym, exact)};
    for (const auto& s : r.subsystems) d.notes.push_back(s.provenance + ": " + to_string(branch_polynomial(s)) + " = 0");
    return d;
  }
  if (as_iterate) throw UnsupportedStructure("the equation is not f(f(x)) = x for the given f");
  return std::nullopt;
}

std::optional<Detection> try_shifted_iterate(const BiPoly& e_sym, const EquationAst& eq, const UnknownNames& names,
                                             const std::map<std::string, Rational>& exact) {
  const auto candidates = distinct_univariate_subtrees(eq, names, 1);
  const unsigned degree = e_sym.degree_in(0);
  const BiPoly x = BiPoly::x(names);
  for (const auto& f : candidates) {
    const unsigned df = f.degree_in(0);
    if (df < 2 || df * df != degree) continue;
    const ParamPoly f_lead = f.coefficient_in(0, df).constant_term();
    for (const auto& inner : candidates) {
      if (inner.degree_in(0) != df) continue;
      const BiPoly shift = inner - x;
      if (shift.degree_in(0) != df) continue;
      ParamPoly a;
      try {
        a = divide_exact(shift.coefficient_in(0, df).constant_term(), f_lead);
      } catch (const NotDivisible&) {
        continue;
      }
      const BiPoly rest = shift - BiPoly(a, names) * f;
      if (!rest.is_constant()) continue;
      ParamPoly b;
      try {
        b = divide_exact(rest.constant_term(), a);
      } catch (const NotDivisible&) {
        continue;
      }
      if (!proportion(e_sym, shifted_iterate_equation(f, a, b))) continue;
      const ReductionResult r = reduce_shifted_iterate(specialize(f, exact), specialize(a, exact), specialize(b, exact));
      Detection d;
      d.structure = "shifted iterate f(a f(x) + x + a b) + f(x) + 2 b = 0 with f = " + describe_map(f) +
                    ", a = " + to_string(a) + ", b = " + to_string(b);
      d.solutions = project_first(solve_reduction(r));
      d.equations = {specialize(e_sym, exact)};
      for (const auto& s : r.subsystems) {
        d.notes.push_back(s.provenance + ": " + to_string(branch_polynomial(s)) + " = 0");
      }
      return d;
    }
  }
  return std::nullopt;
}

std::optional<Detection> try_power_pair(const BiPoly& e_sym, const EquationAst& eq, const UnknownNames& names,
                                        const std::map<std::string, Rational>& exact) {
  const auto candidates = knab_candidates(eq, names);
  const unsigned degree = e_sym.degree_in(0);
  const BiPoly x = BiPoly::x(names);
  const BiPoly y = BiPoly::y(names);
  for (const auto& p : candidates) {
    for (const auto& q : candidates) {
      const unsigned k = p.m;
      const unsigned n = q.m;
      if (k == n || p.e != n || q.e != k || k * n != degree) continue;
      const BiPoly alpha(p.alpha, names);
      const BiPoly beta(q.alpha, names);
      const BiPoly assembled = pow(alpha - pow(x, k), n) - pow(beta - pow(x, n), k);
      if (!proportion(e_sym, assembled)) continue;
      const BiPoly first = pow(x, k) + pow(y, k) - alpha;
      const BiPoly second = pow(x, n) + pow(y, n) - beta;
      // The auxiliary system must eliminate back to the equation.
      if (!proportion(resultant(first, second, names[1]), e_sym)) continue;
      Detection d;
      d.structure = "hidden symmetry: x^" + std::to_string(k) + " + y^" + std::to_string(k) + " = " +
                    to_string(p.alpha) + ", x^" + std::to_string(n) + " + y^" + std::to_string(n) + " = " +
                    to_string(q.alpha);
      SigmaElimination info;
      d.solutions = project_first(solve_symmetric_system(specialize(first, exact), specialize(second, exact), &info));
      d.equations = {specialize(e_sym, exact)};
      d.notes.push_back("s1 equation: " + to_string(info.s1_equation) + " = 0");
      return d;
    }
  }
  return std::nullopt;
}

Detection solve_single(const ProblemStatement& stmt, const std::map<std::string, Rational>& exact,
                       const std::optional<std::string>& as_iterate) {
  const UnknownNames names = unknown_names(stmt);
  const BiPoly e_sym = to_bipoly(stmt).front();
  const BiPoly e = specialize(e_sym, exact);
  if (e.is_zero()) throw UnsupportedStructure("the equation is an identity (every value solves it)");
  if (e.is_constant()) {
    Detection d;
    d.structure = "constant equation";
    d.solutions.unknowns = names;
    d.solutions.add_assumption(e.constant_term());
    d.equations = {e};
    return d;
  }
  const EquationAst& eq = stmt.equations.front();
  if (auto d = try_iterate(e_sym, eq, names, exact, as_iterate)) return *d;
  if (auto d = try_shifted_iterate(e_sym, eq, names, exact)) return *d;
  if (auto d = try_power_pair(e_sym, eq, names, exact)) return *d;
  const unsigned degree = e.degree_in(0);
  if (degree <= 4) {
    Detection d;
    d.structure = "closed-form radicals (degree " + std::to_string(degree) + ")";
    d.solutions = from_roots(solve_univariate_radicals(e), names, "closed form");
    d.equations = {e};
    return d;
  }
  throw NotSolvableHere("degree " + std::to_string(degree) +
                        " equation matches no iterate, shifted-iterate or (alpha - x^k)^n = (beta - x^n)^k "
                        "shape, and exceeds the closed-form degree 4");
}

Detection from_reduction(const std::string& structure, const ReductionResult& r, const BiPoly& e1,
                         const BiPoly& e2) {
  Detection d;
  d.structure = structure;
  d.solutions = solve_reduction(r);
  d.equations = {e1, e2};
  for (const auto& s : r.subsystems) {
    std::string eqs;
    for (const auto& e : s.equations) eqs += (eqs.empty() ? "" : ", ") + to_string(e) + " = 0";
    if (s.constraint) eqs += ", " + to_string(*s.constraint, e1.names());
    d.notes.push_back(s.provenance + ": " + eqs + (s.degenerate ? " (degenerate)" : ""));
  }
  return d;
}

Detection solve_pair(const ProblemStatement& stmt, const std::map<std::string, Rational>& exact) {
  const auto polys = to_bipoly(stmt);
  const BiPoly e1 = specialize(polys[0], exact);
  const BiPoly e2 = specialize(polys[1], exact);
  const SymmetryClass c1 = safe_classify(e1);
  const SymmetryClass c2 = safe_classify(e2);
  using SC = SymmetryClass;
  if (c1 == SC::Symmetric && c2 == SC::Symmetric) {
    Detection d;
    d.structure = "classical symmetric system";
    SigmaElimination info;
    d.solutions = solve_symmetric_system(e1, e2, &info);
    d.equations = {e1, e2};
    d.notes.push_back("s1 equation: " + to_string(info.s1_equation) + " = 0");
    return d;
  }
  if (c1 == SC::Symmetric && c2 == SC::AntiSymmetric) {
    return from_reduction("mixed symmetric / anti-symmetric system", split_mixed(e1, e2), e1, e2);
  }
  if (c1 == SC::AntiSymmetric && c2 == SC::Symmetric) {
    return from_reduction("mixed symmetric / anti-symmetric system", split_mixed(e2, e1), e1, e2);
  }
  if (auto r = proportion(swap_unknowns(e1), e2)) {
    return from_reduction("swapped pair (equations exchange under x <-> y)", split_nonclassical(e1, BiPoly(e1.names())),
                          e1, e2);
  }
  for (int order = 0; order < 2; ++order) {
    const BiPoly& p = order == 0 ? e1 : e2;
    const BiPoly& q = order == 0 ? e2 : e1;
    const auto constants = find_split_constants(p, q);
    if (constants.empty()) continue;
    const auto& c = constants.front();
    return from_reduction("split along y = " + to_string(c.lambda) + " x with mu = " + to_string(c.mu),
                          split_lambda_mu(p, q, c), e1, e2);
  }
  try {
    Detection d;
    d.structure = "elimination of a linear unknown";
    d.solutions = solve_subsystem({{e1, e2}, std::nullopt, "linear elimination", false});
    d.equations = {e1, e2};
    return d;
  } catch (const UnsupportedStructure& e) {
    throw NotSolvableHere(std::string("no supported structure: ") + e.what());
  }
}

std::string format_complex(const Complex& z, int precision) {
  const Real re = z.real();
  const Real im = z.imag();
  std::string out = format_real(re, precision);
  if (is_numerically_real(z, precision)) return out;
  out += im < 0 ? " - " : " + ";
  out += format_real(abs(im), precision) + "i";
  return out;
}

Complex clamp(const Complex& z, int precision) {
  return is_numerically_real(z, precision) ? Complex(z.real(), Real(0)) : z;
}

Json numeric_json(const std::optional<Complex>& z, int precision) {
  if (!z) return nullptr;
  Json out;
  out["re"] = format_real(z->real(), precision);
  out["im"] = format_real(is_numerically_real(*z, precision) ? Real(0) : Real(z->imag()), precision);
  return out;
}

}  // namespace

Binding parse_binding(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw DomainError("parameter binding must look like name=value");
  Binding b{trim(text.substr(0, eq)), trim(text.substr(eq + 1))};
  if (b.name.empty() || b.value.empty()) throw DomainError("parameter binding must look like name=value");
  if (!is_exact_literal(b.value) && !parse_decimal(b.value)) {
    throw DomainError("parameter value '" + b.value + "' is not a number");
  }
  return b;
}

Detection detect_and_solve(const ProblemStatement& stmt, const std::map<std::string, Rational>& exact,
                           const std::optional<std::string>& as_iterate) {
  if (stmt.equations.size() == 2) {
    if (stmt.unknowns.size() != 2) throw UnsupportedShape("a two-equation system needs two unknowns");
    if (as_iterate) throw UnsupportedShape("--as-iterate applies to a single equation");
    return solve_pair(stmt, exact);
  }
  if (stmt.unknowns.size() != 1) {
    throw UnsupportedShape("a single equation must have one unknown (found " + std::to_string(stmt.unknowns.size()) +
                           ")");
  }
  return solve_single(stmt, exact, as_iterate);
}

unsigned SolveReport::root_count() const {
  unsigned n = 0;
  for (const auto& r : roots) n += r.multiplicity;
  return n;
}

SolveReport cmd_solve(const std::string& text, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  check_precision(options.precision);
  SolveReport report;
  report.input = text;
  report.precision = options.precision;
  report.seed = options.seed;
  report.params = options.params;

  const ProblemStatement stmt = parse(text, options.unknowns);
  std::map<std::string, Rational> exact;
  std::map<std::string, Rational> decimal;
  std::map<std::string, Complex> numeric;
  for (const auto& b : options.params) {
    if (std::find(stmt.parameters.begin(), stmt.parameters.end(), b.name) == stmt.parameters.end()) {
      throw DomainError("'" + b.name + "' is not a parameter of the input");
    }
    if (is_exact_literal(b.value)) {
      exact[b.name] = parse_rational(b.value);
      numeric[b.name] = to_complex(exact[b.name]);
    } else {
      decimal[b.name] = *parse_decimal(b.value);
      numeric[b.name] = Complex(Real(b.value));
    }
  }
  const bool all_bound = std::all_of(stmt.parameters.begin(), stmt.parameters.end(),
                                     [&](const std::string& p) { return numeric.count(p) > 0; });

  report.unknowns = unknown_names(stmt);
  Detection d;
  try {
    d = detect_and_solve(stmt, exact, options.as_iterate);
  } catch (const NotSolvableHere& e) {
    if (decimal.empty() || !all_bound || stmt.equations.size() != 1) throw;
    // Decimal bindings with every parameter bound: fall back to the numeric oracle.
    const BiPoly eq = specialize(to_bipoly(stmt).front(), exact);
    const NumPoly np = NumPoly::from_bipoly(eq, numeric);
    report.structure = "numeric roots (Aberth)";
    report.radical = false;
    report.notes.push_back(e.what());
    report.equations = {eq};
    std::map<std::string, Complex> point;
    Real worst = 0;
    bool ok = true;
    for (const auto& c : cluster_roots(numeric_roots(np, options.precision), options.precision)) {
      RootRow row;
      row.expr = format_complex(c.value, options.precision);
      row.multiplicity = c.multiplicity;
      row.numeric = clamp(c.value, options.precision);
      row.provenance = "numeric";
      report.roots.push_back(row);
      point[report.unknowns[0]] = c.value;
      point[report.unknowns[1]] = Complex(0);
      Real scale = absolute_term_sum(eq, point, numeric);
      if (scale == 0) scale = 1;
      const Real residual = abs(evaluate_numeric(eq, point, numeric, options.precision)) / scale;
      worst = std::max(worst, residual);
      if (!(residual < Real(options.tol))) ok = false;
    }
    if (options.verify) {
      VerifyReport v;
      v.samples = 1;
      v.seed = options.seed;
      v.max_residual = worst;
      v.passed = ok && report.root_count() == static_cast<unsigned>(np.degree());
      if (!ok) v.failures.push_back("numeric root residual above tolerance");
      report.verification = v;
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }

  merge_numeric_duplicates(d.solutions, options.seed);
  report.structure = d.structure;
  report.notes = d.notes;
  report.equations = d.equations;
  report.solutions = d.solutions;
  report.pairs = d.solutions.pairs;
  report.flags = d.solutions.flags;
  for (const auto& a : d.solutions.assumptions) report.assumptions.push_back(render_assumption(a));

  for (const auto& e : d.solutions.entries) {
    RootRow row;
    row.expr = e.y ? "(" + render(e.x) + ", " + render(*e.y) + ")" : render(e.x);
    row.multiplicity = e.multiplicity;
    row.provenance = e.provenance;
    if (all_bound) {
      try {
        row.numeric = clamp(eval_radical(e.x, numeric, options.precision), options.precision);
        if (e.y) row.numeric_y = clamp(eval_radical(*e.y, numeric, options.precision), options.precision);
      } catch (const NumericSingularity&) {
        row.numeric.reset();
        row.numeric_y.reset();
      }
    }
    report.roots.push_back(row);
  }

  if (options.verify) {
    VerifyOptions v;
    v.samples = options.samples;
    v.tol = options.tol;
    v.precision = options.precision;
    v.seed = options.seed;
    v.fixed = decimal;
    report.verification = verify_solutions(d.equations, d.solutions, v);
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

int exit_status(const SolveReport& report) {
  if (!report.verification) return kExitUnverified;
  return report.verification->passed ? kExitVerified : kExitFailed;
}

int error_status(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kExitParseError;
  if (dynamic_cast<const NotSolvableHere*>(&e) || dynamic_cast<const UnsupportedShape*>(&e) ||
      dynamic_cast<const UnsupportedStructure*>(&e)) {
    return kExitNotSolvable;
  }
  return kExitFailed;
}

std::string render_text(const SolveReport& report) {
  std::ostringstream out;
  out << "input: " << report.input << "\n";
  if (!report.params.empty()) {
    out << "parameters:";
    for (const auto& b : report.params) out << " " << b.name << "=" << b.value;
    out << "\n";
  }
  out << "structure: " << report.structure << "\n";
  for (const auto& n : report.notes) out << "  " << n << "\n";
  out << (report.radical ? "radical roots" : "numeric roots") << " (" << report.root_count()
      << " counted with multiplicity):\n";
  const std::string lhs = report.pairs ? "(" + report.unknowns[0] + ", " + report.unknowns[1] + ")"
                                       : report.unknowns[0];
  for (const auto& r : report.roots) {
    out << "  " << lhs << " = " << r.expr;
    if (r.multiplicity > 1) out << "  [multiplicity " << r.multiplicity << "]";
    out << "\n";
    if (r.numeric && report.radical) {
      out << "      ~ " << format_complex(*r.numeric, report.precision);
      if (r.numeric_y) out << ", " << format_complex(*r.numeric_y, report.precision);
      out << "\n";
    }
  }
  for (const auto& a : report.assumptions) out << "assuming " << a << "\n";
  for (const auto& f : report.flags) out << "flag: " << f << "\n";
  if (report.verification) {
    const auto& v = *report.verification;
    out << "verification: " << (v.passed ? "passed" : "FAILED") << ", " << v.samples
        << " samples, max relative residual " << format_real(v.max_residual, 3) << " (seed " << v.seed << ")\n";
    for (const auto& f : v.failures) out << "  " << f << "\n";
  } else {
    out << "verification: skipped\n";
  }
  out << "time: " << format_real(Real(report.seconds), 3) << " s\n";
  return out.str();
}

namespace {

Json versions_json() {
  Json v;
  v["symrad"] = SYMRAD_VERSION;
  v["gmp"] = gmp_version;
  v["mpfr"] = mpfr_get_version();
  v["boost"] = BOOST_LIB_VERSION;
  return v;
}

}  // namespace

std::string render_machine(const SolveReport& report) {
  Json j;
  j["input"] = report.input;
  j["unknowns"] = report.pairs ? Json::array({report.unknowns[0], report.unknowns[1]})
                               : Json::array({report.unknowns[0]});
  Json params = Json::object();
  for (const auto& b : report.params) params[b.name] = b.value;
  j["params"] = params;
  j["structure"] = report.structure;
  j["pairs"] = report.pairs;
  j["radical"] = report.radical;
  j["assumptions"] = report.assumptions;
  j["notes"] = report.notes;
  j["flags"] = report.flags;
  Json roots = Json::array();
  for (const auto& r : report.roots) {
    Json row;
    row["expr"] = r.expr;
    row["multiplicity"] = r.multiplicity;
    row["numeric"] = numeric_json(r.numeric, report.precision);
    if (report.pairs) row["numeric_y"] = numeric_json(r.numeric_y, report.precision);
    row["provenance"] = r.provenance;
    roots.push_back(row);
  }
  j["roots"] = roots;
  j["root_count"] = report.root_count();
  if (report.verification) {
    const auto& v = *report.verification;
    Json vj;
    vj["samples"] = v.samples;
    vj["max_residual"] = static_cast<double>(v.max_residual);
    vj["passed"] = v.passed;
    vj["seed"] = v.seed;
    vj["failures"] = v.failures;
    j["verification"] = vj;
  } else {
    j["verification"] = nullptr;
  }
  j["precision"] = report.precision;
  j["versions"] = versions_json();
  return j.dump(2) + "\n";
}

namespace {

struct GridEntry {
  int problem;
  const char* statement;
  const char* label;
  std::vector<Binding> params;
  const char* maple;
  const char* mathematica;
};

const std::vector<GridEntry>& grid() {
  static const std::vector<GridEntry> rows{
      {1, "(a-x^2)^3=(b-x^3)^2", "a, b any", {}, "0", "0"},
      {1, "(a-x^2)^3=(b-x^3)^2", "a = 0, b any", {{"a", "0"}}, "6", "6"},
      {1, "(a-x^2)^3=(b-x^3)^2", "a any, b = 0", {{"b", "0"}}, "6", "6"},
      {1, "(a-x^2)^3=(b-x^3)^2", "a = 2, b any", {{"a", "2"}}, "0", "0"},
      {1, "(a-x^2)^3=(b-x^3)^2", "a any, b = 2", {{"b", "2"}}, "0", "0"},
      {1, "(a-x^2)^3=(b-x^3)^2", "a = 5, b = 2", {{"a", "5"}, {"b", "2"}}, "6", "2"},
      {1, "(a-x^2)^3=(b-x^3)^2", "a = 7, b = 2", {{"a", "7"}, {"b", "2"}}, "0", "0"},
      {1, "(a-x^2)^3=(b-x^3)^2", "a = 7.0, b = 2.0", {{"a", "7.0"}, {"b", "2.0"}}, "6", "6"},
      {2, "(x^3+a)^3+a=x", "a any", {}, "3", "3"},
      {2, "(x^3+a)^3+a=x", "a = 3", {{"a", "3"}}, "9", "5"},
      {2, "(x^3+a)^3+a=x", "a = 3.0", {{"a", "3.0"}}, "9", "9"},
      {3, "(x^3+x+b)^3+x^3+2*b=0", "b any", {}, "3", "3"},
      {3, "(x^3+x+b)^3+x^3+2*b=0", "b = 4", {{"b", "4"}}, "9", "5"},
      {3, "(x^3+x+b)^3+x^3+2*b=0", "b = 4.0", {{"b", "4.0"}}, "9", "9"},
  };
  return rows;
}

}  // namespace

std::vector<TestProblemRow> cmd_testproblems(const std::vector<int>& which, int precision, int samples,
                                             std::uint64_t seed) {
  std::vector<TestProblemRow> out;
  for (const auto& g : grid()) {
    if (std::find(which.begin(), which.end(), g.problem) == which.end()) continue;
    TestProblemRow row;
    row.problem = g.problem;
    row.statement = g.statement;
    row.label = g.label;
    row.params = g.params;
    row.maple = g.maple;
    row.mathematica = g.mathematica;
    SolveOptions options;
    options.params = g.params;
    options.precision = precision;
    options.samples = samples;
    options.seed = seed;
    options.verify = samples > 0;
    try {
      const SolveReport r = cmd_solve(g.statement, options);
      row.roots = r.root_count();
      row.radical = r.radical;
      if (r.verification) row.verified = r.verification->passed;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    out.push_back(row);
  }
  return out;
}

std::string render_testproblems_text(const std::vector<TestProblemRow>& rows) {
  std::ostringstream out;
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };
  out << pad("No.", 4) << pad("Problem", 26) << pad("Parameters", 20) << pad("symrad", 16) << pad("verified", 10)
      << pad("Maple", 7) << "Mathematica\n";
  for (const auto& r : rows) {
    std::string found = r.error.empty() ? std::to_string(r.roots) + (r.radical ? " radical" : " numeric") : "error";
    std::string verified = r.verified ? (*r.verified ? "yes" : "NO") : "-";
    out << pad(std::to_string(r.problem), 4) << pad(r.statement, 26) << pad(r.label, 20) << pad(found, 16)
        << pad(verified, 10) << pad(r.maple, 7) << r.mathematica << "\n";
    if (!r.error.empty()) out << "    " << r.error << "\n";
  }
  out << "Maple and Mathematica columns quote the published root counts for reference.\n";
  return out.str();
}

std::string render_testproblems_machine(const std::vector<TestProblemRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["problem"] = r.problem;
    j["statement"] = r.statement;
    j["parameters"] = r.label;
    j["roots"] = r.roots;
    j["radical"] = r.radical;
    j["verified"] = r.verified ? Json(*r.verified) : Json(nullptr);
    j["reference"] = {{"maple", r.maple}, {"mathematica", r.mathematica}};
    if (!r.error.empty()) j["error"] = r.error;
    arr.push_back(j);
  }
  Json doc;
  doc["rows"] = arr;
  doc["versions"] = versions_json();
  return doc.dump(2) + "\n";
}

namespace {

std::string verification_text(const VerifyReport& v) {
  std::ostringstream out;
  out << "verification: " << (v.passed ? "passed" : "FAILED") << ", " << v.samples << " samples, max relative residual "
      << format_real(v.max_residual, 3) << " (seed " << v.seed << ")\n";
  for (const auto& f : v.failures) out << "  " << f << "\n";
  return out.str();
}

// Splits "(x-expr, y-expr)" at its top-level comma.
std::pair<std::string, std::string> split_pair(const std::string& text) {
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw DomainError("expected a root pair: " + text);
  int depth = 0;
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    if (t[i] == '(') ++depth;
    if (t[i] == ')') --depth;
    if (t[i] == ',' && depth == 0) return {t.substr(1, i - 1), t.substr(i + 1, t.size() - i - 2)};
  }
  throw DomainError("expected a root pair: " + text);
}

}  // namespace

VerifyOutcome cmd_verify_input(const std::string& text, const SolveOptions& options) {
  SolveOptions o = options;
  o.verify = true;
  const SolveReport r = cmd_solve(text, o);
  VerifyOutcome out;
  out.report = *r.verification;
  out.status = exit_status(r);
  out.text = verification_text(out.report);
  return out;
}

VerifyOutcome cmd_verify_report(const std::string& json_text, const SolveOptions& options) {
  check_precision(options.precision);
  const Json j = Json::parse(json_text);
  const std::string input = j.at("input").get<std::string>();
  std::optional<std::vector<std::string>> unknowns = options.unknowns;
  const bool pairs = j.value("pairs", false);
  if (!unknowns && pairs && j.contains("unknowns")) unknowns = j.at("unknowns").get<std::vector<std::string>>();

  std::map<std::string, std::string> values;
  if (j.contains("params")) {
    for (const auto& [name, v] : j.at("params").items()) values[name] = v.get<std::string>();
  }
  for (const auto& b : options.params) values[b.name] = b.value;

  const ProblemStatement stmt = parse(input, unknowns);
  std::map<std::string, Rational> exact;
  std::map<std::string, Rational> decimal;
  for (const auto& [name, v] : values) {
    if (is_exact_literal(v)) {
      exact[name] = parse_rational(v);
    } else if (auto d = parse_decimal(v)) {
      decimal[name] = *d;
    } else {
      throw DomainError("parameter value '" + v + "' is not a number");
    }
  }
  std::vector<BiPoly> equations;
  for (const auto& e : to_bipoly(stmt)) equations.push_back(specialize(e, exact));

  VerifyOutcome out;
  if (!j.value("radical", true)) {
    out.report.failures.push_back("the report lists numeric roots only; re-solve the input instead");
    out.text = verification_text(out.report);
    return out;
  }
  const UnknownNames names = unknown_names(stmt);
  SolutionSet set;
  set.unknowns = names;
  set.pairs = pairs;
  for (const auto& row : j.at("roots")) {
    SolutionEntry e;
    const std::string expr = row.at("expr").get<std::string>();
    if (pairs) {
      auto [xs, ys] = split_pair(expr);
      e.x = parse_radical(xs);
      e.y = parse_radical(ys);
    } else {
      e.x = parse_radical(expr);
    }
    e.multiplicity = row.value("multiplicity", 1u);
    set.entries.push_back(e);
  }
  for (const auto& a : j.value("assumptions", std::vector<std::string>{})) {
    const auto cut = a.find("!=");
    const BiPoly p = ast_to_bipoly(parse_expression(a.substr(0, cut)), names);
    set.add_assumption(specialize(p, exact).constant_term());
  }

  VerifyOptions v;
  v.samples = options.samples;
  v.tol = options.tol;
  v.precision = options.precision;
  v.seed = options.seed;
  v.fixed = decimal;
  out.report = verify_solutions(equations, set, v);
  out.status = out.report.passed ? kExitVerified : kExitFailed;
  out.text = verification_text(out.report);
  return out;
}

}  // namespace symrad::cli
