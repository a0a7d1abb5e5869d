#include "symrad/numverify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace symrad {

NumPoly::NumPoly(std::vector<Complex> coefficients) : c_(std::move(coefficients)) {
  const Real floor("1e-30");
  while (!c_.empty() && abs(c_.back()) <= floor) c_.pop_back();
}

NumPoly NumPoly::from_bipoly(const BiPoly& p, const std::map<std::string, Complex>& params) {
  std::vector<Complex> c;
  for (const auto& coefficient : p.univariate_coefficients()) c.push_back(coefficient.evaluate(params));
  return NumPoly(std::move(c));
}

Complex NumPoly::operator()(const Complex& z) const {
  Complex v(0);
  for (std::size_t i = c_.size(); i-- > 0;) v = v * z + c_[i];
  return v;
}

namespace {

// Value, derivative and noise floor of the Horner evaluation at z.
void horner(const std::vector<Complex>& c, const Complex& z, Complex& value, Complex& derivative,
            Real& magnitude) {
  value = 0;
  derivative = 0;
  magnitude = 0;
  const Real az = abs(z);
  for (std::size_t i = c.size(); i-- > 0;) {
    derivative = derivative * z + value;
    value = value * z + c[i];
    magnitude = magnitude * az + abs(c[i]);
  }
}

}  // namespace

std::vector<Complex> numeric_roots(const NumPoly& p, int precision) {
  check_precision(precision);
  if (p.degree() < 1) throw DegreeError("numeric_roots needs a polynomial of degree at least 1");
  std::vector<Complex> c = p.coefficients();
  std::vector<Complex> roots;
  while (c.front() == Complex(0)) {
    roots.emplace_back(0);
    c.erase(c.begin());
  }
  const std::size_t n = c.size() - 1;
  if (n == 0) return roots;
  if (n == 1) {
    roots.push_back(-c[0] / c[1]);
    return roots;
  }

  Real radius = 0;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, Real(abs(c[i] / c[n])));
  radius += 1;
  const Real golden = pi() * (Real(3) - sqrt(Real(5)));
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Real angle = Real("0.5") + golden * static_cast<long>(k);
    z[k] = Complex(radius * cos(angle), radius * sin(angle));
  }

  const Real step_tol = ten_to_minus(precision - 1);
  const Real noise = ten_to_minus(kWorkingDigits - 5);
  std::vector<bool> done(n, false);
  for (int sweep = 0; sweep < kMaxAberthSweeps; ++sweep) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      Complex value;
      Complex derivative;
      Real magnitude;
      horner(c, z[i], value, derivative, magnitude);
      if (abs(value) <= noise * magnitude) {
        done[i] = true;
        continue;
      }
      all_done = false;
      if (derivative == Complex(0)) {
        z[i] *= Complex(Real(1) + noise, noise);
        continue;
      }
      const Complex w = value / derivative;
      Complex repulsion(0);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i && z[i] != z[j]) repulsion += Complex(1) / (z[i] - z[j]);
      }
      const Complex update = w / (Complex(1) - w * repulsion);
      z[i] -= update;
      if (abs(update) < step_tol * std::max(Real(1), Real(abs(z[i])))) done[i] = true;
    }
    if (all_done || std::all_of(done.begin(), done.end(), [](bool b) { return b; })) {
      roots.insert(roots.end(), z.begin(), z.end());
      return roots;
    }
  }
  roots.insert(roots.end(), z.begin(), z.end());
  throw NoConvergence("Aberth iteration did not converge in " + std::to_string(kMaxAberthSweeps) + " sweeps",
                      roots);
}

std::vector<RootCluster> cluster_roots(const std::vector<Complex>& roots, int precision) {
  check_precision(precision);
  const Real threshold = ten_to_minus(precision / 2);
  std::vector<bool> used(roots.size(), false);
  std::vector<RootCluster> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::vector<std::size_t> members{i};
    // Single linkage: grow while any member is near an unused root.
    for (std::size_t m = 0; m < members.size(); ++m) {
      for (std::size_t j = 0; j < roots.size(); ++j) {
        if (!used[j] && abs(roots[members[m]] - roots[j]) < threshold) {
          used[j] = true;
          members.push_back(j);
        }
      }
    }
    Complex sum(0);
    for (auto k : members) sum += roots[k];
    out.push_back({sum / Complex(static_cast<long>(members.size())), static_cast<unsigned>(members.size())});
  }
  return out;
}

MatchReport match_roots(const std::vector<Complex>& found, const std::vector<Complex>& expected,
                        const Real& tol) {
  if (tol <= 0) throw DomainError("match_roots needs a positive tolerance");
  struct Candidate {
    Real distance;
    std::size_t i;
    std::size_t j;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(found.size() * expected.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < expected.size(); ++j) candidates.push_back({abs(found[i] - expected[j]), i, j});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.distance < b.distance; });
  std::vector<bool> used_found(found.size(), false);
  std::vector<bool> used_expected(expected.size(), false);
  MatchReport report;
  for (const auto& cand : candidates) {
    if (used_found[cand.i] || used_expected[cand.j]) continue;
    used_found[cand.i] = true;
    used_expected[cand.j] = true;
    report.pairing.emplace_back(cand.i, cand.j);
    report.max_distance = std::max(report.max_distance, cand.distance);
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (!used_found[i]) report.unmatched_found.push_back(i);
  }
  for (std::size_t j = 0; j < expected.size(); ++j) {
    if (!used_expected[j]) report.unmatched_expected.push_back(j);
  }
  std::sort(report.pairing.begin(), report.pairing.end());
  report.success = found.size() == expected.size() && report.max_distance < tol;
  return report;
}

std::vector<NumericEntry> evaluate_solutions(const SolutionSet& s,
                                             const std::map<std::string, Complex>& params,
                                             int precision) {
  std::vector<NumericEntry> out;
  out.reserve(s.entries.size());
  for (const auto& e : s.entries) {
    NumericEntry v{eval_radical(e.x, params, precision), std::nullopt};
    if (e.y) v.y = eval_radical(*e.y, params, precision);
    out.push_back(std::move(v));
  }
  return out;
}

bool is_numerically_real(const Complex& z, int precision) {
  return abs(z.imag()) < ten_to_minus(precision - 5);
}

namespace {

class ParamSampler {
 public:
  ParamSampler(std::vector<std::string> names, std::uint64_t seed) : names_(std::move(names)), rng_(seed) {}

  std::map<std::string, Rational> draw() {
    std::uniform_int_distribution<long> num(-10, 10);
    std::uniform_int_distribution<long> den(1, 10);
    std::map<std::string, Rational> out;
    for (const auto& name : names_) {
      const long n = num(rng_);
      const long d = den(rng_);
      out.emplace(name, make_rational(n, d));
    }
    return out;
  }

 private:
  std::vector<std::string> names_;
  std::mt19937_64 rng_;
};

std::map<std::string, Complex> to_complex_map(const std::map<std::string, Rational>& values) {
  std::map<std::string, Complex> out;
  for (const auto& [name, v] : values) out.emplace(name, to_complex(v));
  return out;
}

std::map<std::string, ParamPoly> to_poly_map(const std::map<std::string, Rational>& values) {
  std::map<std::string, ParamPoly> out;
  for (const auto& [name, v] : values) out.emplace(name, ParamPoly(v));
  return out;
}

std::string describe(const std::map<std::string, Rational>& values) {
  std::string out;
  for (const auto& [name, v] : values) {
    if (!out.empty()) out += ", ";
    out += name + "=" + to_string(v);
  }
  return out;
}

bool assumptions_hold(const std::vector<ParamPoly>& assumptions, const std::map<std::string, ParamPoly>& at) {
  return std::none_of(assumptions.begin(), assumptions.end(),
                      [&](const ParamPoly& a) { return a.substitute(at).is_zero(); });
}

std::vector<std::string> sampled_names(const std::vector<BiPoly>& original, const SolutionSet& s,
                                       const std::map<std::string, Rational>& fixed) {
  std::set<std::string> names;
  for (const auto& p : original) {
    for (const auto& [e, c] : p.terms()) {
      for (const auto& n : c.symbols()) names.insert(n);
    }
  }
  for (const auto& n : parameters_of(s)) names.insert(n);
  for (const auto& [n, v] : fixed) names.erase(n);
  return {names.begin(), names.end()};
}

}  // namespace

VerifyReport verify_solutions(const std::vector<BiPoly>& original, const SolutionSet& solutions,
                              const VerifyOptions& options) {
  check_precision(options.precision);
  if (options.samples < 1) throw DomainError("verification needs at least one sample");
  VerifyReport report;
  report.seed = options.seed;
  const Real tol(options.tol);
  if (!(tol > 0) || tol < ten_to_minus(options.precision)) {
    std::ostringstream msg;
    msg << "tolerance " << options.tol << " is tighter than the working precision of " << options.precision
        << " digits";
    report.failures.push_back(msg.str());
    return report;
  }

  // Polynomial whose roots are the first coordinates of all solutions.
  std::optional<BiPoly> count_poly;
  if (options.check_counts) {
    if (original.size() == 1 && original.front().is_univariate()) {
      count_poly = original.front();
    } else if (original.size() == 2) {
      try {
        BiPoly r = resultant(original[0], original[1], original[0].names()[1]);
        if (!r.is_zero() && r.is_univariate()) count_poly = r;
      } catch (const DegreeError&) {
      }
    }
  }

  std::vector<ParamPoly> guards = solutions.assumptions;
  if (count_poly) {
    const auto coefficients = count_poly->univariate_coefficients();
    if (!coefficients.empty()) guards.push_back(coefficients.back());
  }

  ParamSampler sampler(sampled_names(original, solutions, options.fixed), options.seed);
  const UnknownNames& names = original.front().names();
  constexpr int kMaxDraws = 200;
  for (int k = 0; k < options.samples; ++k) {
    bool sampled = false;
    for (int attempt = 0; attempt < kMaxDraws && !sampled; ++attempt) {
      std::map<std::string, Rational> values = sampler.draw();
      for (const auto& [n, v] : options.fixed) values[n] = v;
      const auto at = to_poly_map(values);
      if (!assumptions_hold(guards, at)) continue;
      const auto params = to_complex_map(values);
      std::vector<NumericEntry> numeric;
      try {
        numeric = evaluate_solutions(solutions, params, options.precision);
      } catch (const NumericSingularity&) {
        continue;
      }
      sampled = true;
      ++report.samples;

      for (std::size_t r = 0; r < numeric.size(); ++r) {
        std::map<std::string, Complex> point{{names[0], numeric[r].x},
                                             {names[1], numeric[r].y.value_or(Complex(0))}};
        for (std::size_t i = 0; i < original.size(); ++i) {
          const Complex value = evaluate_numeric(original[i], point, params, options.precision);
          Real scale = absolute_term_sum(original[i], point, params);
          if (scale == 0) scale = 1;
          const Real residual = abs(value) / scale;
          report.max_residual = std::max(report.max_residual, residual);
          if (!(residual < tol)) {
            std::ostringstream msg;
            msg << "sample " << k + 1 << " (" << describe(values) << "): equation " << i + 1
                << " residual " << format_real(residual, 6) << " at root " << r + 1;
            report.failures.push_back(msg.str());
          }
        }
      }

      if (count_poly) {
        const BiPoly instance = substitute_params(*count_poly, to_poly_map(values));
        const NumPoly np = NumPoly::from_bipoly(instance, {});
        const unsigned expected = static_cast<unsigned>(std::max(np.degree(), 0));
        if (solutions.total_multiplicity() != expected) {
          std::ostringstream msg;
          msg << "sample " << k + 1 << " (" << describe(values) << "): " << solutions.total_multiplicity()
              << " roots counted with multiplicity, expected " << expected;
          report.failures.push_back(msg.str());
        } else if (expected > 0) {
          std::vector<Complex> found;
          for (std::size_t r = 0; r < numeric.size(); ++r) {
            for (unsigned m = 0; m < solutions.entries[r].multiplicity; ++m) found.push_back(numeric[r].x);
          }
          std::vector<Complex> oracle;
          try {
            oracle = numeric_roots(np, options.precision);
          } catch (const NoConvergence& e) {
            oracle = e.best_iterate();
          }
          Real scale = 1;
          for (const auto& z : oracle) scale = std::max(scale, Real(abs(z)));
          const MatchReport match = match_roots(found, oracle, Real("1e-6") * scale);
          if (!match.success) {
            std::ostringstream msg;
            msg << "sample " << k + 1 << " (" << describe(values)
                << "): roots disagree with the numeric oracle by " << format_real(match.max_distance, 6);
            report.failures.push_back(msg.str());
          }
        }
      }
    }
    if (!sampled) {
      report.failures.push_back("could not draw a parameter point satisfying the assumptions");
      break;
    }
  }
  report.passed = report.failures.empty() && report.samples == options.samples;
  return report;
}

void merge_numeric_duplicates(SolutionSet& s, std::uint64_t seed) {
  if (s.entries.size() < 2) return;
  constexpr int kPoints = 5;
  constexpr int kDigits = 40;
  const Real tol("1e-20");
  ParamSampler sampler(parameters_of(s), seed);
  std::vector<std::vector<NumericEntry>> values;
  for (int attempt = 0; attempt < 100 && values.size() < kPoints; ++attempt) {
    const auto point = sampler.draw();
    if (!assumptions_hold(s.assumptions, to_poly_map(point))) continue;
    try {
      values.push_back(evaluate_solutions(s, to_complex_map(point), kDigits));
    } catch (const NumericSingularity&) {
    }
  }
  if (values.size() < kPoints) return;
  auto close = [&](const NumericEntry& a, const NumericEntry& b) {
    if (abs(a.x - b.x) >= tol) return false;
    if (a.y && b.y) return abs(*a.y - *b.y) < tol;
    return true;
  };
  std::vector<bool> removed(s.entries.size(), false);
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    if (removed[i]) continue;
    for (std::size_t j = i + 1; j < s.entries.size(); ++j) {
      if (removed[j]) continue;
      const bool same = std::all_of(values.begin(), values.end(),
                                    [&](const auto& v) { return close(v[i], v[j]); });
      if (same) {
        s.entries[i].multiplicity += s.entries[j].multiplicity;
        removed[j] = true;
      }
    }
  }
  std::vector<SolutionEntry> kept;
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    if (!removed[i]) kept.push_back(std::move(s.entries[i]));
  }
  s.entries = std::move(kept);
}

}  // namespace symrad
