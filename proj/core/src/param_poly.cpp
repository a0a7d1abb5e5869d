#include "symrad/param_poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "symrad/errors.hpp"

namespace symrad {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  auto digits_only = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits_only(num) || !digits_only(den) || den.front() == '-' || den.front() == '+') {
    throw DomainError("not a rational literal: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (!n.empty() && n.front() == '+') n.erase(0, 1);
  mpz_class numerator(n, 10);
  mpz_class denominator(std::string(den), 10);
  if (denominator == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Complex to_complex(const Rational& r) {
  return Complex(Real(r.get_num().get_str()) / Real(r.get_den().get_str()));
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

// ---------------------------------------------------------------------------

Monomial Monomial::variable(std::string name, unsigned exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(std::move(name), exponent);
  return m;
}

unsigned Monomial::degree() const noexcept {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

unsigned Monomial::exponent(std::string_view name) const noexcept {
  for (const auto& f : factors_) {
    if (f.first == name) return f.second;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& divisor) const {
  Monomial out;
  auto a = factors_.begin();
  auto b = divisor.factors_.begin();
  while (a != factors_.end()) {
    if (b == divisor.factors_.end() || a->first < b->first) {
      out.factors_.push_back(*a++);
    } else if (b->first < a->first) {
      return std::nullopt;
    } else {
      if (a->second < b->second) return std::nullopt;
      if (a->second > b->second) out.factors_.emplace_back(a->first, a->second - b->second);
      ++a;
      ++b;
    }
  }
  if (b != divisor.factors_.end()) return std::nullopt;
  return out;
}

Monomial Monomial::without(std::string_view name) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (f.first != name) out.factors_.push_back(f);
  }
  return out;
}

bool GrlexLess::operator()(const Monomial& lhs, const Monomial& rhs) const {
  const unsigned dl = lhs.degree();
  const unsigned dr = rhs.degree();
  if (dl != dr) return dl < dr;
  // Equal degree: the first variable (alphabetically) whose exponents
  // differ decides; the larger exponent is the larger monomial.
  auto a = lhs.factors().begin();
  auto b = rhs.factors().begin();
  while (a != lhs.factors().end() || b != rhs.factors().end()) {
    if (b == rhs.factors().end() || (a != lhs.factors().end() && a->first < b->first)) {
      return false;  // lhs has a variable rhs lacks
    }
    if (a == lhs.factors().end() || b->first < a->first) return true;
    if (a->second != b->second) return a->second < b->second;
    ++a;
    ++b;
  }
  return false;
}

// ---------------------------------------------------------------------------

ParamPoly::ParamPoly(const Rational& constant) { add_term(Monomial(), constant); }

ParamPoly::ParamPoly(long constant) : ParamPoly(Rational(constant)) {}

ParamPoly::ParamPoly(Terms terms) {
  for (auto& [m, c] : terms) add_term(m, c);
}

ParamPoly ParamPoly::symbol(std::string name) {
  if (name.empty()) throw DomainError("empty parameter name");
  ParamPoly p;
  p.terms_.emplace(Monomial::variable(std::move(name)), Rational(1));
  return p;
}

void ParamPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool ParamPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Rational> ParamPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) return std::nullopt;
  return terms_.begin()->second;
}

unsigned ParamPoly::degree() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

std::vector<std::string> ParamPoly::symbols() const {
  std::set<std::string> names;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) names.insert(f.first);
  }
  return {names.begin(), names.end()};
}

std::pair<Monomial, Rational> ParamPoly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return *terms_.rbegin();
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& lhs, const ParamPoly& rhs) {
  ParamPoly out;
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& other) {
  *this = *this * other;
  return *this;
}

ParamPoly ParamPoly::substitute(const std::map<std::string, ParamPoly>& bindings) const {
  ParamPoly out;
  for (const auto& [m, c] : terms_) {
    ParamPoly term(c);
    Monomial rest;
    for (const auto& [name, e] : m.factors()) {
      if (auto it = bindings.find(name); it != bindings.end()) {
        term *= pow(it->second, e);
      } else {
        rest = rest * Monomial::variable(name, e);
      }
    }
    out += term * ParamPoly(Terms{{rest, Rational(1)}});
  }
  return out;
}

Complex ParamPoly::evaluate(const std::map<std::string, Complex>& values) const {
  Complex sum(0);
  for (const auto& [m, c] : terms_) {
    Complex term = to_complex(c);
    for (const auto& [name, e] : m.factors()) {
      auto it = values.find(name);
      if (it == values.end()) throw UnboundSymbol("no value bound for parameter '" + name + "'");
      term *= int_pow(it->second, e);
    }
    sum += term;
  }
  return sum;
}

Rational ParamPoly::max_abs_coefficient() const {
  Rational best(0);
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (a > best) best = a;
  }
  return best;
}

ParamPoly pow(const ParamPoly& base, unsigned exponent) {
  ParamPoly result(1);
  ParamPoly b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

ParamPoly divide_exact(const ParamPoly& dividend, const ParamPoly& divisor) {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  // In any monomial order lt(q * d) = lt(q) * lt(d), so an exact quotient
  // can be peeled off one leading term at a time.
  const auto [dm, dc] = divisor.leading_term();
  ParamPoly remainder = dividend;
  ParamPoly quotient;
  while (!remainder.is_zero()) {
    const auto [rm, rc] = remainder.leading_term();
    auto qm = rm.divide(dm);
    if (!qm) {
      throw NotDivisible("'" + to_string(dividend) + "' is not divisible by '" +
                         to_string(divisor) + "'");
    }
    ParamPoly step(ParamPoly::Terms{{*qm, rc / dc}});
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (const auto& [name, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += name;
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string to_string(const ParamPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    std::string coeff = is_integer(magnitude) ? magnitude.get_str()
                                              : "(" + magnitude.get_str() + ")";
    if (m.is_one()) {
      out += coeff;
    } else if (magnitude == 1) {
      out += monomial_text(m);
    } else {
      out += coeff + "*" + monomial_text(m);
    }
  }
  return out;
}

}  // namespace symrad
