#include "symrad/radical.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

#include "symrad/errors.hpp"

namespace symrad {

struct RadicalExpr::Node {
  Kind kind = Kind::Rational;
  Rational value;
  std::string name;
  std::vector<RadicalExpr> args;
  long exponent = 0;
  unsigned n = 0;
  unsigned j = 0;
};

namespace {

std::shared_ptr<RadicalExpr::Node> make_node(RadicalExpr::Kind kind) {
  auto node = std::make_shared<RadicalExpr::Node>();
  node->kind = kind;
  return node;
}

}  // namespace

RadicalExpr::RadicalExpr() : RadicalExpr(Rational(0)) {}

RadicalExpr::RadicalExpr(const Rational& r) {
  auto node = make_node(Kind::Rational);
  node->value = r;
  node_ = std::move(node);
}

RadicalExpr::RadicalExpr(long r) : RadicalExpr(Rational(r)) {}

RadicalExpr RadicalExpr::param(std::string name) {
  auto node = make_node(Kind::Param);
  node->name = std::move(name);
  return RadicalExpr(std::shared_ptr<const Node>(std::move(node)));
}

RadicalExpr RadicalExpr::raw_add(std::vector<RadicalExpr> terms) {
  auto node = make_node(Kind::Add);
  node->args = std::move(terms);
  return RadicalExpr(std::shared_ptr<const Node>(std::move(node)));
}

RadicalExpr RadicalExpr::raw_mul(std::vector<RadicalExpr> factors) {
  auto node = make_node(Kind::Mul);
  node->args = std::move(factors);
  return RadicalExpr(std::shared_ptr<const Node>(std::move(node)));
}

RadicalExpr RadicalExpr::raw_neg(RadicalExpr e) {
  auto node = make_node(Kind::Neg);
  node->args = {std::move(e)};
  return RadicalExpr(std::shared_ptr<const Node>(std::move(node)));
}

RadicalExpr RadicalExpr::raw_div(RadicalExpr num, RadicalExpr den) {
  if (den.is_zero()) throw DomainError("division by the literal zero expression");
  auto node = make_node(Kind::Div);
  node->args = {std::move(num), std::move(den)};
  return RadicalExpr(std::shared_ptr<const Node>(std::move(node)));
}

RadicalExpr RadicalExpr::raw_pow(RadicalExpr base, long k) {
  auto node = make_node(Kind::IntPow);
  node->args = {std::move(base)};
  node->exponent = k;
  return RadicalExpr(std::shared_ptr<const Node>(std::move(node)));
}

RadicalExpr RadicalExpr::raw_root(RadicalExpr base, unsigned n) {
  if (n < 2) throw DomainError("root index must be at least 2");
  auto node = make_node(Kind::Root);
  node->args = {std::move(base)};
  node->n = n;
  return RadicalExpr(std::shared_ptr<const Node>(std::move(node)));
}

RadicalExpr RadicalExpr::raw_unity(unsigned n, unsigned j) {
  if (n == 0) throw DomainError("unity root order must be positive");
  auto node = make_node(Kind::UnityRoot);
  node->n = n;
  node->j = j % n;
  return RadicalExpr(std::shared_ptr<const Node>(std::move(node)));
}

RadicalExpr RadicalExpr::raw_select(RadicalExpr guard, RadicalExpr primary, RadicalExpr fallback) {
  auto node = make_node(Kind::Select);
  node->args = {std::move(guard), std::move(primary), std::move(fallback)};
  return RadicalExpr(std::shared_ptr<const Node>(std::move(node)));
}

RadicalExpr::Kind RadicalExpr::kind() const noexcept { return node_->kind; }
const Rational& RadicalExpr::rational() const { return node_->value; }
const std::string& RadicalExpr::name() const { return node_->name; }
const std::vector<RadicalExpr>& RadicalExpr::args() const noexcept { return node_->args; }
long RadicalExpr::exponent() const noexcept { return node_->exponent; }
unsigned RadicalExpr::index() const noexcept { return node_->n; }
unsigned RadicalExpr::unity_power() const noexcept { return node_->j; }

bool RadicalExpr::is_zero() const noexcept {
  return node_->kind == Kind::Rational && node_->value == 0;
}

bool RadicalExpr::is_one() const noexcept {
  return node_->kind == Kind::Rational && node_->value == 1;
}

bool structurally_equal(const RadicalExpr& a, const RadicalExpr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.exponent != y.exponent || x.n != y.n || x.j != y.j ||
      x.args.size() != y.args.size()) {
    return false;
  }
  if (x.kind == RadicalExpr::Kind::Rational && x.value != y.value) return false;
  if (x.kind == RadicalExpr::Kind::Param && x.name != y.name) return false;
  for (std::size_t i = 0; i < x.args.size(); ++i) {
    if (!structurally_equal(x.args[i], y.args[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Simplification

namespace {

using Kind = RadicalExpr::Kind;

RadicalExpr simplify_node(const RadicalExpr& e);

// Exact n-th root of a non-negative rational, if it exists.
std::optional<Rational> exact_root(const Rational& r, unsigned n) {
  if (r < 0) return std::nullopt;
  mpz_class num;
  mpz_class den;
  if (mpz_root(num.get_mpz_t(), r.get_num().get_mpz_t(), n) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), r.get_den().get_mpz_t(), n) == 0) return std::nullopt;
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational rational_pow(const Rational& base, long k) {
  if (k < 0) {
    if (base == 0) throw DomainError("zero raised to a negative power");
    return Rational(1) / rational_pow(base, -k);
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(k));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

// Splits a term into rational coefficient and the remaining product.
std::pair<Rational, std::optional<RadicalExpr>> split_coefficient(const RadicalExpr& t) {
  if (t.is_rational()) return {t.rational(), std::nullopt};
  if (t.kind() == Kind::Mul && !t.args().empty() && t.args().front().is_rational()) {
    std::vector<RadicalExpr> rest(t.args().begin() + 1, t.args().end());
    if (rest.size() == 1) return {t.args().front().rational(), rest.front()};
    return {t.args().front().rational(), RadicalExpr::raw_mul(std::move(rest))};
  }
  if (t.kind() == Kind::Div && t.args()[0].is_rational()) {
    return {t.args()[0].rational(), RadicalExpr::raw_div(RadicalExpr(1), t.args()[1])};
  }
  return {Rational(1), t};
}

RadicalExpr scaled(const Rational& c, const RadicalExpr& rest) {
  if (c == 0) return RadicalExpr(0);
  if (c == 1) return rest;
  if (rest.kind() == Kind::Div && rest.args()[0].is_one()) return RadicalExpr::raw_div(RadicalExpr(c), rest.args()[1]);
  std::vector<RadicalExpr> factors{RadicalExpr(c)};
  if (rest.kind() == Kind::Mul) {
    factors.insert(factors.end(), rest.args().begin(), rest.args().end());
  } else {
    factors.push_back(rest);
  }
  return RadicalExpr::raw_mul(std::move(factors));
}

RadicalExpr scale_add(const RadicalExpr& add, const Rational& k) {
  std::vector<RadicalExpr> terms;
  for (const auto& t : add.args()) {
    auto [c, rest] = split_coefficient(t);
    terms.push_back(rest ? scaled(c * k, *rest) : RadicalExpr(c * k));
  }
  return RadicalExpr::raw_add(std::move(terms));
}

RadicalExpr simplify_add(const RadicalExpr& e) {
  std::vector<RadicalExpr> flat;
  for (const auto& t : e.args()) {
    if (t.kind() == Kind::Add) {
      flat.insert(flat.end(), t.args().begin(), t.args().end());
    } else {
      flat.push_back(t);
    }
  }
  Rational constant(0);
  std::vector<std::pair<Rational, RadicalExpr>> terms;
  for (const auto& t : flat) {
    auto [c, rest] = split_coefficient(t);
    if (!rest) {
      constant += c;
      continue;
    }
    auto it = std::find_if(terms.begin(), terms.end(),
                           [&](const auto& existing) { return structurally_equal(existing.second, *rest); });
    if (it == terms.end()) {
      terms.emplace_back(c, *rest);
    } else {
      it->first += c;
    }
  }
  std::vector<RadicalExpr> out;
  if (constant != 0) out.emplace_back(constant);
  for (const auto& [c, rest] : terms) {
    if (c != 0) out.push_back(scaled(c, rest));
  }
  if (out.empty()) return RadicalExpr(0);
  if (out.size() == 1) return out.front();
  return RadicalExpr::raw_add(std::move(out));
}

RadicalExpr simplify_mul(const RadicalExpr& e, int round = 0) {
  Rational coeff(1);
  unsigned unity_order = 1;
  unsigned unity_power = 0;
  std::vector<std::pair<RadicalExpr, long>> bases;

  std::function<void(const RadicalExpr&)> absorb = [&](const RadicalExpr& f) {
    switch (f.kind()) {
      case Kind::Mul:
        for (const auto& g : f.args()) absorb(g);
        return;
      case Kind::Rational:
        coeff *= f.rational();
        return;
      case Kind::UnityRoot: {
        const unsigned l = std::lcm(unity_order, f.index());
        unity_power = (unity_power * (l / unity_order) + f.unity_power() * (l / f.index())) % l;
        unity_order = l;
        return;
      }
      default:
        break;
    }
    RadicalExpr base = f;
    long k = 1;
    if (f.kind() == Kind::Div && f.args()[0].is_rational() && !f.args()[0].is_one()) {
      coeff *= f.args()[0].rational();
      base = RadicalExpr::raw_div(RadicalExpr(1), f.args()[1]);
    } else if (f.kind() == Kind::IntPow) {
      base = f.args().front();
      k = f.exponent();
    }
    auto it = std::find_if(bases.begin(), bases.end(),
                           [&](const auto& b) { return structurally_equal(b.first, base); });
    if (it == bases.end()) {
      bases.emplace_back(base, k);
    } else {
      it->second += k;
    }
  };
  for (const auto& f : e.args()) absorb(f);
  if (coeff == 0) return RadicalExpr(0);

  std::vector<RadicalExpr> powered;
  bool needs_another_round = false;
  for (const auto& [base, k] : bases) {
    if (k == 0) continue;
    RadicalExpr p = k == 1 ? base : simplify_node(RadicalExpr::raw_pow(base, k));
    if (k != 1 && (p.kind() == Kind::Rational || p.kind() == Kind::UnityRoot || p.kind() == Kind::Mul)) {
      needs_another_round = true;
    }
    powered.push_back(p);
  }
  RadicalExpr unity = simplify_node(RadicalExpr::raw_unity(unity_order, unity_power));
  if (needs_another_round && round < 4) {
    std::vector<RadicalExpr> again{RadicalExpr(coeff)};
    again.insert(again.end(), powered.begin(), powered.end());
    again.push_back(unity);
    return simplify_mul(RadicalExpr::raw_mul(std::move(again)), round + 1);
  }
  if (unity.is_rational()) {
    coeff *= unity.rational();
  } else {
    powered.push_back(unity);
  }
  if (powered.empty()) return RadicalExpr(coeff);
  if (coeff == 1 && powered.size() == 1) return powered.front();
  // A rational multiple of a single sum is distributed over its terms.
  if (powered.size() == 1 && powered.front().kind() == Kind::Add) {
    return simplify_add(scale_add(powered.front(), coeff));
  }
  if (powered.size() == 1 && powered.front().kind() == Kind::Div && powered.front().args()[0].is_one()) {
    return RadicalExpr::raw_div(RadicalExpr(coeff), powered.front().args()[1]);
  }
  std::vector<RadicalExpr> out;
  if (coeff != 1) out.emplace_back(coeff);
  out.insert(out.end(), powered.begin(), powered.end());
  return RadicalExpr::raw_mul(std::move(out));
}

RadicalExpr simplify_pow(const RadicalExpr& e) {
  const RadicalExpr& base = e.args().front();
  const long k = e.exponent();
  if (k == 0) return RadicalExpr(1);
  if (k == 1) return base;
  switch (base.kind()) {
    case Kind::Rational:
      return RadicalExpr(rational_pow(base.rational(), k));
    case Kind::IntPow:
      return simplify_node(RadicalExpr::raw_pow(base.args().front(), base.exponent() * k));
    case Kind::Root:
      if (k % static_cast<long>(base.index()) == 0) {
        return simplify_node(RadicalExpr::raw_pow(base.args().front(), k / static_cast<long>(base.index())));
      }
      break;
    case Kind::UnityRoot: {
      const long n = base.index();
      const long j = ((static_cast<long>(base.unity_power()) * k) % n + n) % n;
      return simplify_node(RadicalExpr::raw_unity(static_cast<unsigned>(n), static_cast<unsigned>(j)));
    }
    case Kind::Mul: {
      auto [c, rest] = split_coefficient(base);
      if (c != 1 && rest) {
        return simplify_mul(RadicalExpr::raw_mul(
            {RadicalExpr(rational_pow(c, k)), simplify_node(RadicalExpr::raw_pow(*rest, k))}));
      }
      break;
    }
    default:
      break;
  }
  return e;
}

// Splits a positive integer m into o^n * rest, trying primes below 1000.
void extract_power(mpz_class& m, unsigned n, mpz_class& outside) {
  mpz_class pn;
  for (unsigned long p = 2; p < 1000; p += (p == 2 ? 1 : 2)) {
    mpz_ui_pow_ui(pn.get_mpz_t(), p, n);
    if (pn > m) break;
    while (mpz_divisible_p(m.get_mpz_t(), pn.get_mpz_t()) != 0) {
      m /= pn;
      outside *= p;
    }
  }
}

// Largest rational o with o^n dividing the positive rational g (up to the
// trial-division bound).
Rational power_part(const Rational& g, unsigned n) {
  mpz_class num = g.get_num();
  mpz_class den = g.get_den();
  mpz_class on = 1;
  mpz_class od = 1;
  extract_power(num, n, on);
  extract_power(den, n, od);
  Rational out(on, od);
  out.canonicalize();
  return out;
}

// Positive rational content of a sum: gcd of numerators over lcm of
// denominators.
Rational add_content(const RadicalExpr& add) {
  mpz_class g = 0;
  mpz_class l = 1;
  for (const auto& t : add.args()) {
    const Rational c = split_coefficient(t).first;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational out(g, l);
  out.canonicalize();
  return out;
}

RadicalExpr simplify_root(const RadicalExpr& e) {
  const RadicalExpr& base = e.args().front();
  const unsigned n = e.index();
  if (base.is_rational()) {
    if (auto r = exact_root(base.rational(), n)) return RadicalExpr(*r);
    if (base.rational() > 0) {
      const Rational o = power_part(base.rational(), n);
      if (o != 1) {
        const Rational inside = base.rational() / rational_pow(o, n);
        return simplify_mul(RadicalExpr::raw_mul({RadicalExpr(o), RadicalExpr::raw_root(RadicalExpr(inside), n)}));
      }
    }
    return e;
  }
  // Positive rational factors leave the principal root unchanged in
  // argument, so n-th power parts can move outside.
  Rational content(1);
  if (base.kind() == Kind::Mul) {
    content = split_coefficient(base).first;
  } else if (base.kind() == Kind::Add) {
    content = add_content(base);
  }
  if (content <= 0) return e;
  const Rational o = power_part(content, n);
  if (o == 1) return e;
  const Rational shrink = Rational(1) / rational_pow(o, n);
  RadicalExpr inner = base.kind() == Kind::Add ? scale_add(base, shrink)
                                               : simplify_mul(RadicalExpr::raw_mul({RadicalExpr(shrink), base}));
  return simplify_mul(RadicalExpr::raw_mul({RadicalExpr(o), RadicalExpr::raw_root(inner, n)}));
}

RadicalExpr simplify_unity(const RadicalExpr& e) {
  const unsigned n = e.index();
  const unsigned j = e.unity_power() % n;
  if (j == 0) return RadicalExpr(1);
  if (2 * j == n) return RadicalExpr(-1);
  const unsigned g = std::gcd(n, j);
  if (g == 1 && j == e.unity_power()) return e;
  return RadicalExpr::raw_unity(n / g, j / g);
}

RadicalExpr simplify_div(const RadicalExpr& e) {
  RadicalExpr num = e.args()[0];
  RadicalExpr den = e.args()[1];
  if (den.is_zero()) throw DomainError("division by the literal zero expression");
  if (num.is_zero()) return RadicalExpr(0);
  if (den.is_rational()) return simplify_mul(RadicalExpr::raw_mul({RadicalExpr(Rational(1) / den.rational()), num}));
  auto [dc, drest] = split_coefficient(den);
  auto [nc, nrest] = split_coefficient(num);
  const Rational c = nc / dc;
  if (!nrest) return RadicalExpr::raw_div(RadicalExpr(c), *drest);
  RadicalExpr quotient = RadicalExpr::raw_div(*nrest, *drest);
  if (c == 1) return quotient;
  return simplify_mul(RadicalExpr::raw_mul({RadicalExpr(c), quotient}));
}

RadicalExpr simplify_node(const RadicalExpr& e) {
  switch (e.kind()) {
    case Kind::Rational:
    case Kind::Param:
      return e;
    case Kind::Add:
      return simplify_add(e);
    case Kind::Mul:
      return simplify_mul(e);
    case Kind::Neg:
      return simplify_mul(RadicalExpr::raw_mul({RadicalExpr(-1), e.args().front()}));
    case Kind::Div:
      return simplify_div(e);
    case Kind::IntPow:
      return simplify_pow(e);
    case Kind::Root:
      return simplify_root(e);
    case Kind::UnityRoot:
      return simplify_unity(e);
    case Kind::Select: {
      const RadicalExpr& guard = e.args()[0];
      if (guard.is_rational()) return guard.is_zero() ? e.args()[2] : e.args()[1];
      return e;
    }
  }
  return e;
}

RadicalExpr rebuild(const RadicalExpr& e, std::vector<RadicalExpr> args) {
  switch (e.kind()) {
    case Kind::Add: return RadicalExpr::raw_add(std::move(args));
    case Kind::Mul: return RadicalExpr::raw_mul(std::move(args));
    case Kind::Neg: return RadicalExpr::raw_neg(std::move(args[0]));
    case Kind::Div: return RadicalExpr::raw_div(std::move(args[0]), std::move(args[1]));
    case Kind::IntPow: return RadicalExpr::raw_pow(std::move(args[0]), e.exponent());
    case Kind::Root: return RadicalExpr::raw_root(std::move(args[0]), e.index());
    case Kind::Select:
      return RadicalExpr::raw_select(std::move(args[0]), std::move(args[1]), std::move(args[2]));
    default: return e;
  }
}

// Bottom-up rewrite; shared subtrees are transformed once.
RadicalExpr transform(const RadicalExpr& e,
                      const std::function<RadicalExpr(const RadicalExpr&)>& leaf,
                      std::unordered_map<const void*, RadicalExpr>& memo) {
  if (auto it = memo.find(e.id()); it != memo.end()) return it->second;
  RadicalExpr out;
  if (e.args().empty()) {
    out = simplify_node(leaf(e));
  } else {
    std::vector<RadicalExpr> args;
    args.reserve(e.args().size());
    for (const auto& a : e.args()) args.push_back(transform(a, leaf, memo));
    out = simplify_node(rebuild(e, std::move(args)));
  }
  memo.emplace(e.id(), out);
  return out;
}

}  // namespace

RadicalExpr operator+(const RadicalExpr& a, const RadicalExpr& b) {
  return simplify_node(RadicalExpr::raw_add({a, b}));
}

RadicalExpr operator-(const RadicalExpr& a, const RadicalExpr& b) { return a + (-b); }

RadicalExpr operator-(const RadicalExpr& a) {
  return simplify_node(RadicalExpr::raw_mul({RadicalExpr(-1), a}));
}

RadicalExpr operator*(const RadicalExpr& a, const RadicalExpr& b) {
  return simplify_node(RadicalExpr::raw_mul({a, b}));
}

RadicalExpr operator/(const RadicalExpr& a, const RadicalExpr& b) {
  return simplify_node(RadicalExpr::raw_div(a, b));
}

RadicalExpr pow(const RadicalExpr& base, long k) {
  return simplify_node(RadicalExpr::raw_pow(base, k));
}

RadicalExpr root(const RadicalExpr& base, unsigned n) {
  return simplify_node(RadicalExpr::raw_root(base, n));
}

RadicalExpr sqrt(const RadicalExpr& base) { return root(base, 2); }
RadicalExpr cbrt(const RadicalExpr& base) { return root(base, 3); }

RadicalExpr omega(unsigned n, unsigned j) { return simplify_node(RadicalExpr::raw_unity(n, j)); }

RadicalExpr select(const RadicalExpr& guard, const RadicalExpr& primary, const RadicalExpr& fallback) {
  return simplify_node(RadicalExpr::raw_select(guard, primary, fallback));
}

RadicalExpr to_radical(const ParamPoly& p) {
  std::vector<RadicalExpr> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::vector<RadicalExpr> factors{RadicalExpr(c)};
    for (const auto& [name, e] : m.factors()) {
      factors.push_back(pow(RadicalExpr::param(name), static_cast<long>(e)));
    }
    terms.push_back(simplify_node(RadicalExpr::raw_mul(std::move(factors))));
  }
  if (terms.empty()) return RadicalExpr(0);
  return simplify_node(RadicalExpr::raw_add(std::move(terms)));
}

RadicalExpr evaluate_at(const std::vector<ParamPoly>& coefficients, const RadicalExpr& value) {
  std::vector<RadicalExpr> terms;
  for (std::size_t i = coefficients.size(); i-- > 0;) {
    if (coefficients[i].is_zero()) continue;
    terms.push_back(to_radical(coefficients[i]) * pow(value, static_cast<long>(i)));
  }
  if (terms.empty()) return RadicalExpr(0);
  return simplify_node(RadicalExpr::raw_add(std::move(terms)));
}

RadicalExpr simplify_radical(const RadicalExpr& e) {
  std::unordered_map<const void*, RadicalExpr> memo;
  return transform(e, [](const RadicalExpr& leaf) { return leaf; }, memo);
}

RadicalExpr substitute_params(const RadicalExpr& e, const std::map<std::string, Rational>& values) {
  std::unordered_map<const void*, RadicalExpr> memo;
  return transform(
      e,
      [&](const RadicalExpr& leaf) {
        if (leaf.kind() == Kind::Param) {
          if (auto it = values.find(leaf.name()); it != values.end()) return RadicalExpr(it->second);
        }
        return leaf;
      },
      memo);
}

std::vector<std::string> parameters_of(const RadicalExpr& e) {
  std::set<std::string> names;
  std::set<const void*> visited;
  std::function<void(const RadicalExpr&)> walk = [&](const RadicalExpr& node) {
    if (!visited.insert(node.id()).second) return;
    if (node.kind() == Kind::Param) names.insert(node.name());
    for (const auto& a : node.args()) walk(a);
  };
  walk(e);
  return {names.begin(), names.end()};
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

class Evaluator {
 public:
  Evaluator(const std::map<std::string, Complex>& params, int precision)
      : params_(params),
        singular_(ten_to_minus(precision)),
        guard_(ten_to_minus(precision / 2)) {}

  Complex operator()(const RadicalExpr& e) {
    if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
    Complex v = compute(e);
    memo_.emplace(e.id(), v);
    return v;
  }

 private:
  Complex compute(const RadicalExpr& e) {
    switch (e.kind()) {
      case Kind::Rational:
        return to_complex(e.rational());
      case Kind::Param: {
        auto it = params_.find(e.name());
        if (it == params_.end()) throw UnboundSymbol("no value bound for parameter '" + e.name() + "'");
        return it->second;
      }
      case Kind::Add: {
        Complex sum(0);
        for (const auto& a : e.args()) sum += (*this)(a);
        return sum;
      }
      case Kind::Mul: {
        Complex product(1);
        for (const auto& a : e.args()) product *= (*this)(a);
        return product;
      }
      case Kind::Neg:
        return -(*this)(e.args().front());
      case Kind::Div: {
        const Complex den = (*this)(e.args()[1]);
        if (abs(den) < singular_) throw NumericSingularity("divisor vanishes numerically in " + render(e));
        return (*this)(e.args()[0]) / den;
      }
      case Kind::IntPow: {
        const Complex base = (*this)(e.args().front());
        if (e.exponent() < 0 && abs(base) < singular_) {
          throw NumericSingularity("negative power of a vanishing value in " + render(e));
        }
        return int_pow(base, e.exponent());
      }
      case Kind::Root:
        return principal_root((*this)(e.args().front()), e.index());
      case Kind::UnityRoot:
        return unity_root(e.index(), e.unity_power());
      case Kind::Select: {
        const Complex guard = (*this)(e.args()[0]);
        return abs(guard) < guard_ ? (*this)(e.args()[2]) : (*this)(e.args()[1]);
      }
    }
    throw InvariantViolation("unknown radical node");
  }

  const std::map<std::string, Complex>& params_;
  Real singular_;
  Real guard_;
  std::unordered_map<const void*, Complex> memo_;
};

}  // namespace

Complex eval_radical(const RadicalExpr& e, const std::map<std::string, Complex>& params, int precision) {
  check_precision(precision);
  Evaluator eval(params, precision);
  return eval(e);
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

bool is_negative_term(const RadicalExpr& e) {
  if (e.is_rational()) return e.rational() < 0;
  if (e.kind() == Kind::Neg) return true;
  if (e.kind() == Kind::Div) return is_negative_term(e.args()[0]);
  if (e.kind() == Kind::Mul && !e.args().empty() && e.args().front().is_rational()) {
    return e.args().front().rational() < 0;
  }
  return false;
}

RadicalExpr negated_term(const RadicalExpr& e) {
  if (e.is_rational()) return RadicalExpr(-e.rational());
  if (e.kind() == Kind::Neg) return e.args().front();
  if (e.kind() == Kind::Div) return RadicalExpr::raw_div(negated_term(e.args()[0]), e.args()[1]);
  std::vector<RadicalExpr> factors = e.args();
  const Rational c = -factors.front().rational();
  if (c == 1) {
    factors.erase(factors.begin());
    if (factors.size() == 1) return factors.front();
  } else {
    factors.front() = RadicalExpr(c);
  }
  return RadicalExpr::raw_mul(std::move(factors));
}

std::string render_rational(const Rational& r) {
  const Rational magnitude = abs(r);
  std::string text = is_integer(magnitude) ? magnitude.get_str() : "(" + magnitude.get_str() + ")";
  return r < 0 ? "-" + text : text;
}

bool is_atomic(const RadicalExpr& e) {
  switch (e.kind()) {
    case Kind::Param:
    case Kind::Root:
    case Kind::UnityRoot:
      return true;
    case Kind::Rational:
      return e.rational() >= 0;
    case Kind::Select:
      return is_atomic(e.args()[1]);
    default:
      return false;
  }
}

std::string wrapped(const RadicalExpr& e) {
  std::string text = render(e);
  return is_atomic(e) ? text : "(" + text + ")";
}

}  // namespace

std::string render(const RadicalExpr& e) {
  switch (e.kind()) {
    case Kind::Rational:
      return render_rational(e.rational());
    case Kind::Param:
      return e.name();
    case Kind::Add: {
      std::string out;
      for (const auto& t : e.args()) {
        if (out.empty()) {
          out = render(t);
        } else if (is_negative_term(t)) {
          out += "-" + render(negated_term(t));
        } else {
          out += "+" + render(t);
        }
      }
      return out;
    }
    case Kind::Mul: {
      std::string out;
      auto factors = e.args();
      if (!factors.empty() && factors.front().is_rational() && factors.size() > 1) {
        const Rational c = factors.front().rational();
        factors.erase(factors.begin());
        if (c == -1) {
          out = "-";
        } else if (c != 1) {
          out = render_rational(c) + "*";
        }
      }
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) out += "*";
        const auto& f = factors[i];
        const bool bare = is_atomic(f) || f.kind() == Kind::IntPow;
        out += bare ? render(f) : "(" + render(f) + ")";
      }
      return out;
    }
    case Kind::Neg:
      return "-" + wrapped(e.args().front());
    case Kind::Div: {
      const auto& num = e.args()[0];
      const auto& den = e.args()[1];
      const bool num_bare = num.kind() != Kind::Add && num.kind() != Kind::Neg &&
                            num.kind() != Kind::Div && !(num.is_rational() && num.rational() < 0);
      const bool den_bare = is_atomic(den) || den.kind() == Kind::IntPow;
      return (num_bare ? render(num) : "(" + render(num) + ")") + "/" +
             (den_bare ? render(den) : "(" + render(den) + ")");
    }
    case Kind::IntPow: {
      std::string base = wrapped(e.args().front());
      if (e.exponent() < 0) return base + "^(" + std::to_string(e.exponent()) + ")";
      return base + "^" + std::to_string(e.exponent());
    }
    case Kind::Root: {
      const std::string inner = render(e.args().front());
      if (e.index() == 2) return "sqrt(" + inner + ")";
      if (e.index() == 3) return "cbrt(" + inner + ")";
      return "root(" + inner + ", " + std::to_string(e.index()) + ")";
    }
    case Kind::UnityRoot:
      return "omega(" + std::to_string(e.index()) + ", " + std::to_string(e.unity_power()) + ")";
    case Kind::Select:
      return render(e.args()[1]);
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Parsing of rendered text

namespace {

class RadicalParser {
 public:
  explicit RadicalParser(std::string_view text) : text_(text) {}

  RadicalExpr parse() {
    RadicalExpr e = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected trailing input");
    // Built raw so that simplification sees the same shape render produced.
    try {
      return simplify_radical(e);
    } catch (const DomainError& err) {
      fail(err.what());
    }
  }

 private:
  // Sums and products are collected flat, matching the n-ary nodes render prints.
  RadicalExpr expr() {
    std::vector<RadicalExpr> terms{term()};
    for (;;) {
      if (accept('+')) {
        terms.push_back(term());
      } else if (accept('-')) {
        terms.push_back(RadicalExpr::raw_neg(term()));
      } else {
        return terms.size() == 1 ? terms.front() : RadicalExpr::raw_add(std::move(terms));
      }
    }
  }

  RadicalExpr term() {
    std::vector<RadicalExpr> factors{unary()};
    const auto product = [&factors] {
      return factors.size() == 1 ? factors.front() : RadicalExpr::raw_mul(factors);
    };
    for (;;) {
      if (accept('*')) {
        factors.push_back(unary());
      } else if (accept('/')) {
        RadicalExpr den = unary();
        if (den.is_zero()) fail("division by zero");
        factors = {RadicalExpr::raw_div(product(), den)};
      } else {
        return product();
      }
    }
  }

  RadicalExpr unary() {
    if (accept('-')) return RadicalExpr::raw_neg(unary());
    return power();
  }

  RadicalExpr power() {
    RadicalExpr base = primary();
    if (!accept('^')) return base;
    long k = 0;
    if (accept('(')) {
      const bool negative = accept('-');
      k = static_cast<long>(natural());
      if (negative) k = -k;
      if (!accept(')')) fail("expected ')'");
    } else {
      k = static_cast<long>(natural());
    }
    return RadicalExpr::raw_pow(base, k);
  }

  RadicalExpr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (accept('(')) {
      RadicalExpr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += text_[pos_++];
      return RadicalExpr(Rational(mpz_class(digits, 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        word += text_[pos_++];
      }
      skip_space();
      const bool call = pos_ < text_.size() && text_[pos_] == '(';
      if (call && (word == "sqrt" || word == "cbrt")) {
        accept('(');
        RadicalExpr arg = expr();
        if (!accept(')')) fail("expected ')'");
        return RadicalExpr::raw_root(arg, word == "sqrt" ? 2 : 3);
      }
      if (call && word == "root") {
        accept('(');
        RadicalExpr arg = expr();
        if (!accept(',')) fail("expected ','");
        const unsigned n = natural();
        if (!accept(')')) fail("expected ')'");
        if (n < 2) fail("root index must be at least 2");
        return RadicalExpr::raw_root(arg, n);
      }
      if (call && word == "omega") {
        accept('(');
        const unsigned n = natural();
        if (!accept(',')) fail("expected ','");
        const unsigned j = natural();
        if (!accept(')')) fail("expected ')'");
        if (n == 0) fail("omega order must be positive");
        return RadicalExpr::raw_unity(n, j);
      }
      return RadicalExpr::param(word);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  unsigned natural() {
    skip_space();
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += text_[pos_++];
    if (digits.empty() || digits.size() > 6) fail("expected a small natural number");
    return static_cast<unsigned>(std::stoul(digits));
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, 1, static_cast<int>(pos_) + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RadicalExpr parse_radical(std::string_view text) { return RadicalParser(text).parse(); }

}  // namespace symrad
