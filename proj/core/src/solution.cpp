#include "symrad/solution.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace symrad {

namespace {

bool same_value(const SolutionEntry& a, const SolutionEntry& b) {
  if (!structurally_equal(a.x, b.x)) return false;
  if (a.y.has_value() != b.y.has_value()) return false;
  return !a.y || structurally_equal(*a.y, *b.y);
}

}  // namespace

unsigned SolutionSet::total_multiplicity() const {
  unsigned n = 0;
  for (const auto& e : entries) n += e.multiplicity;
  return n;
}

void SolutionSet::add(SolutionEntry entry) {
  for (auto& e : entries) {
    if (same_value(e, entry)) {
      e.multiplicity += entry.multiplicity;
      return;
    }
  }
  entries.push_back(std::move(entry));
}

void SolutionSet::add_assumption(const ParamPoly& p) {
  if (p.is_constant()) return;
  // p != 0 is unchanged by scaling, so store the monic form.
  const ParamPoly monic = p * ParamPoly(Rational(1 / p.leading_term().second));
  if (std::find(assumptions.begin(), assumptions.end(), monic) == assumptions.end()) assumptions.push_back(monic);
}

void SolutionSet::add_flag(const std::string& flag) {
  if (std::find(flags.begin(), flags.end(), flag) == flags.end()) flags.push_back(flag);
}

void SolutionSet::append(const SolutionSet& other) {
  pairs = pairs || other.pairs;
  for (const auto& e : other.entries) add(e);
  for (const auto& a : other.assumptions) add_assumption(a);
  for (const auto& f : other.flags) add_flag(f);
}

SolutionSet project_first(const SolutionSet& s) {
  SolutionSet out;
  out.unknowns = s.unknowns;
  out.assumptions = s.assumptions;
  out.flags = s.flags;
  for (const auto& e : s.entries) out.add({e.x, std::nullopt, e.multiplicity, e.provenance});
  return out;
}

SolutionSet substitute_params(const SolutionSet& s, const std::map<std::string, Rational>& values) {
  SolutionSet out;
  out.unknowns = s.unknowns;
  out.pairs = s.pairs;
  out.flags = s.flags;
  std::map<std::string, ParamPoly> bindings;
  for (const auto& [name, v] : values) bindings.emplace(name, ParamPoly(v));
  for (const auto& a : s.assumptions) out.add_assumption(a.substitute(bindings));
  for (const auto& e : s.entries) {
    SolutionEntry copy = e;
    copy.x = substitute_params(e.x, values);
    if (e.y) copy.y = substitute_params(*e.y, values);
    out.add(std::move(copy));
  }
  return out;
}

std::vector<std::string> parameters_of(const SolutionSet& s) {
  std::set<std::string> names;
  for (const auto& e : s.entries) {
    for (const auto& n : parameters_of(e.x)) names.insert(n);
    if (e.y) {
      for (const auto& n : parameters_of(*e.y)) names.insert(n);
    }
  }
  for (const auto& a : s.assumptions) {
    for (const auto& n : a.symbols()) names.insert(n);
  }
  return {names.begin(), names.end()};
}

std::string render_assumption(const ParamPoly& p) { return to_string(p) + " != 0"; }

std::string render_text(const SolutionSet& s) {
  std::ostringstream out;
  for (const auto& e : s.entries) {
    if (e.y) {
      out << "(" << s.unknowns[0] << ", " << s.unknowns[1] << ") = (" << render(e.x) << ", "
          << render(*e.y) << ")";
    } else {
      out << s.unknowns[0] << " = " << render(e.x);
    }
    if (e.multiplicity > 1) out << "  [multiplicity " << e.multiplicity << "]";
    if (!e.provenance.empty()) out << "  <" << e.provenance << ">";
    out << "\n";
  }
  for (const auto& a : s.assumptions) out << "assuming " << render_assumption(a) << "\n";
  for (const auto& f : s.flags) out << "flag: " << f << "\n";
  return out.str();
}

}  // namespace symrad
