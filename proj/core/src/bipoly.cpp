#include "symrad/bipoly.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "symrad/errors.hpp"

namespace symrad {

BiPoly::BiPoly(const ParamPoly& constant, UnknownNames names) : names_(std::move(names)) {
  add_term({0, 0}, constant);
}

BiPoly::BiPoly(Terms terms, UnknownNames names) : names_(std::move(names)) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

BiPoly BiPoly::unknown(unsigned slot, UnknownNames names) {
  if (slot > 1) throw DomainError("unknown slot must be 0 or 1");
  return monomial(slot == 0 ? 1 : 0, slot == 1 ? 1 : 0, ParamPoly(1), std::move(names));
}

BiPoly BiPoly::monomial(unsigned dx, unsigned dy, const ParamPoly& c, UnknownNames names) {
  BiPoly p(std::move(names));
  p.add_term({dx, dy}, c);
  return p;
}

unsigned BiPoly::slot_of(const std::string& name) const {
  if (name == names_[0]) return 0;
  if (name == names_[1]) return 1;
  throw SymbolMismatch("'" + name + "' is not an unknown of this polynomial (unknowns " +
                       names_[0] + ", " + names_[1] + ")");
}

void BiPoly::add_term(const Exponents& e, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool BiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

ParamPoly BiPoly::constant_term() const {
  auto it = terms_.find({0, 0});
  return it == terms_.end() ? ParamPoly() : it->second;
}

unsigned BiPoly::degree() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first.first + terms_.rbegin()->first.second;
}

unsigned BiPoly::degree_in(unsigned slot) const noexcept {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, slot == 0 ? e.first : e.second);
  return d;
}

BiPoly BiPoly::coefficient_in(unsigned slot, unsigned k) const {
  BiPoly out(names_);
  for (const auto& [e, c] : terms_) {
    if ((slot == 0 ? e.first : e.second) != k) continue;
    out.add_term(slot == 0 ? Exponents{0, e.second} : Exponents{e.first, 0}, c);
  }
  return out;
}

std::vector<ParamPoly> BiPoly::univariate_coefficients() const {
  if (!is_univariate()) {
    throw ArityError("expected a polynomial in " + names_[0] + " alone: " + to_string(*this));
  }
  std::vector<ParamPoly> out(degree_in(0) + 1);
  for (const auto& [e, c] : terms_) out[e.first] = c;
  return out;
}

BiPoly BiPoly::renamed(UnknownNames names) const {
  BiPoly out = *this;
  out.names_ = std::move(names);
  return out;
}

void BiPoly::require_same_names(const BiPoly& other) const {
  if (names_ != other.names_) {
    throw SymbolMismatch("unknown tables differ: (" + names_[0] + ", " + names_[1] +
                         ") vs (" + other.names_[0] + ", " + other.names_[1] + ")");
  }
}

BiPoly BiPoly::operator-() const {
  BiPoly out(names_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  require_same_names(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  require_same_names(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
  lhs.require_same_names(rhs);
  BiPoly out(lhs.names_);
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    }
  }
  return out;
}

BiPoly& BiPoly::operator*=(const BiPoly& other) {
  *this = *this * other;
  return *this;
}

BiPoly pow(const BiPoly& base, unsigned exponent) {
  BiPoly result(ParamPoly(1), base.names());
  BiPoly b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

BiPoly substitute(const BiPoly& p, const std::map<std::string, BiPoly>& bindings) {
  if (bindings.empty()) return p;
  const UnknownNames* target = nullptr;
  for (const auto& [name, value] : bindings) {
    p.slot_of(name);  // validates the name
    if (target == nullptr) {
      target = &value.names();
    } else if (*target != value.names()) {
      throw SymbolMismatch("substitution values use different unknown tables");
    }
  }
  std::array<std::optional<BiPoly>, 2> replacement;
  for (unsigned slot = 0; slot < 2; ++slot) {
    if (auto it = bindings.find(p.names()[slot]); it != bindings.end()) {
      replacement[slot] = it->second;
    } else if (p.degree_in(slot) > 0) {
      if (*target != p.names()) {
        throw SymbolMismatch("partial substitution must stay within the unknown table (" +
                             p.names()[0] + ", " + p.names()[1] + ")");
      }
      replacement[slot] = BiPoly::unknown(slot, p.names());
    } else {
      replacement[slot] = BiPoly(ParamPoly(1), *target);
    }
  }
  // Cache powers of each replacement.
  std::array<std::vector<BiPoly>, 2> powers;
  for (unsigned slot = 0; slot < 2; ++slot) {
    powers[slot].push_back(BiPoly(ParamPoly(1), *target));
    for (unsigned k = 1; k <= p.degree_in(slot); ++k) {
      powers[slot].push_back(powers[slot].back() * *replacement[slot]);
    }
  }
  BiPoly out(*target);
  for (const auto& [e, c] : p.terms()) {
    out += BiPoly(c, *target) * powers[0][e.first] * powers[1][e.second];
  }
  return out;
}

BiPoly swap_unknowns(const BiPoly& p) {
  BiPoly out(p.names());
  for (const auto& [e, c] : p.terms()) out.add_term({e.second, e.first}, c);
  return out;
}

BiPoly substitute_params(const BiPoly& p, const std::map<std::string, ParamPoly>& bindings) {
  return p.map_coefficients([&](const ParamPoly& c) { return c.substitute(bindings); });
}

BiPoly divide_exact(const BiPoly& p, const BiPoly& d) {
  if (p.names() != d.names()) throw SymbolMismatch("divide_exact: unknown tables differ");
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  // Block order: unknown exponents first (grlex), then the parameter
  // monomial (grlex). Leading terms multiply, so the quotient is peeled off
  // one leading term at a time and any failure proves non-divisibility.
  const auto& [de, dcoef] = *d.terms().rbegin();
  const auto [dm, dr] = dcoef.leading_term();
  BiPoly remainder = p;
  BiPoly quotient(p.names());
  while (!remainder.is_zero()) {
    const auto [re, rcoef] = *remainder.terms().rbegin();
    const auto [rm, rr] = rcoef.leading_term();
    auto qm = rm.divide(dm);
    if (re.first < de.first || re.second < de.second || !qm) {
      throw NotDivisible("'" + to_string(p) + "' is not divisible by '" + to_string(d) + "'");
    }
    BiPoly step = BiPoly::monomial(re.first - de.first, re.second - de.second,
                                   ParamPoly(ParamPoly::Terms{{*qm, rr / dr}}), p.names());
    quotient += step;
    remainder -= step * d;
  }
  return quotient;
}

BiPoly resultant(const BiPoly& p, const BiPoly& q, const std::string& eliminate) {
  if (p.names() != q.names()) throw SymbolMismatch("resultant: unknown tables differ");
  const unsigned slot = p.slot_of(eliminate);
  const unsigned m = p.degree_in(slot);
  const unsigned n = q.degree_in(slot);
  if (m == 0 || n == 0) {
    throw DegreeError("resultant needs positive degree in " + eliminate + " for both inputs");
  }
  const unsigned size = m + n;
  const BiPoly zero(p.names());
  std::vector<std::vector<BiPoly>> mat(size, std::vector<BiPoly>(size, zero));
  // Rows 0..n-1 hold shifted coefficients of p, rows n..n+m-1 those of q,
  // highest power first.
  for (unsigned row = 0; row < n; ++row) {
    for (unsigned k = 0; k <= m; ++k) mat[row][row + k] = p.coefficient_in(slot, m - k);
  }
  for (unsigned row = 0; row < m; ++row) {
    for (unsigned k = 0; k <= n; ++k) mat[n + row][row + k] = q.coefficient_in(slot, n - k);
  }

  bool negate = false;
  BiPoly previous(ParamPoly(1), p.names());
  for (unsigned k = 0; k + 1 < size; ++k) {
    if (mat[k][k].is_zero()) {
      unsigned pivot = k + 1;
      while (pivot < size && mat[pivot][k].is_zero()) ++pivot;
      if (pivot == size) return zero;
      std::swap(mat[k], mat[pivot]);
      negate = !negate;
    }
    for (unsigned i = k + 1; i < size; ++i) {
      for (unsigned j = k + 1; j < size; ++j) {
        mat[i][j] = divide_exact(mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j], previous);
      }
      mat[i][k] = zero;
    }
    previous = mat[k][k];
  }
  return negate ? -mat[size - 1][size - 1] : mat[size - 1][size - 1];
}

Complex evaluate_numeric(const BiPoly& p, const std::map<std::string, Complex>& point,
                         const std::map<std::string, Complex>& params, int precision) {
  check_precision(precision);
  std::array<Complex, 2> value{Complex(0), Complex(0)};
  for (unsigned slot = 0; slot < 2; ++slot) {
    if (p.degree_in(slot) == 0) continue;
    auto it = point.find(p.names()[slot]);
    if (it == point.end()) {
      throw UnboundSymbol("no value bound for unknown '" + p.names()[slot] + "'");
    }
    value[slot] = it->second;
  }
  Complex sum(0);
  for (const auto& [e, c] : p.terms()) {
    sum += c.evaluate(params) * int_pow(value[0], e.first) * int_pow(value[1], e.second);
  }
  return sum;
}

Real absolute_term_sum(const BiPoly& p, const std::map<std::string, Complex>& point,
                       const std::map<std::string, Complex>& params) {
  std::array<Complex, 2> value{Complex(0), Complex(0)};
  for (unsigned slot = 0; slot < 2; ++slot) {
    if (p.degree_in(slot) == 0) continue;
    auto it = point.find(p.names()[slot]);
    if (it == point.end()) {
      throw UnboundSymbol("no value bound for unknown '" + p.names()[slot] + "'");
    }
    value[slot] = it->second;
  }
  std::array<Real, 2> magnitude;
  for (unsigned slot = 0; slot < 2; ++slot) {
    const Real m = abs(value[slot]);
    magnitude[slot] = m > 1 ? m : Real(1);
  }
  Real sum(0);
  for (const auto& [e, c] : p.terms()) {
    Real term = abs(c.evaluate(params));
    for (unsigned k = 0; k < e.first; ++k) term *= magnitude[0];
    for (unsigned k = 0; k < e.second; ++k) term *= magnitude[1];
    sum += term;
  }
  return sum;
}

BiPoly normalize_leading(const BiPoly& p) {
  if (p.is_zero()) return p;
  const ParamPoly& lead = p.terms().rbegin()->second;
  const Rational scale = lead.leading_term().second;
  if (scale == 1) return p;
  const ParamPoly inverse(Rational(1) / scale);
  return p.map_coefficients([&](const ParamPoly& c) { return c * inverse; });
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    auto append = [&mono](const std::string& name, unsigned k) {
      if (k == 0) return;
      if (!mono.empty()) mono += '*';
      mono += name;
      if (k > 1) mono += '^' + std::to_string(k);
    };
    append(p.names()[0], e.first);
    append(p.names()[1], e.second);

    std::string coeff;
    bool negative = false;
    if (c.terms().size() == 1) {
      const Rational& r = c.terms().begin()->second;
      negative = r < 0;
      ParamPoly magnitude = negative ? -c : c;
      coeff = to_string(magnitude);
    } else {
      coeff = "(" + to_string(c) + ")";
    }
    if (!out.empty() || negative) out += negative ? '-' : '+';
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

}  // namespace symrad
