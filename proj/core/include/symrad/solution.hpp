#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symrad/bipoly.hpp"
#include "symrad/radical.hpp"

namespace symrad {

// One root (single unknown) or root pair (two unknowns).
struct SolutionEntry {
  RadicalExpr x;
  std::optional<RadicalExpr> y;
  unsigned multiplicity = 1;
  std::string provenance;
};

struct SolutionSet {
  UnknownNames unknowns = kXY;
  bool pairs = false;
  std::vector<SolutionEntry> entries;
  // Parameter expressions assumed nonzero.
  std::vector<ParamPoly> assumptions;
  // Degeneracy markers such as "Degenerate" or "CoincidentPair".
  std::vector<std::string> flags;

  unsigned total_multiplicity() const;
  // Adds an entry, merging with a structurally identical one.
  void add(SolutionEntry entry);
  void add_assumption(const ParamPoly& p);
  void add_flag(const std::string& flag);
  // Entries, assumptions and flags of `other` (same unknown table).
  void append(const SolutionSet& other);
};

// Keeps only the first coordinate: the roots of a single equation that was
// solved through an auxiliary second unknown.
SolutionSet project_first(const SolutionSet& s);

SolutionSet substitute_params(const SolutionSet& s, const std::map<std::string, Rational>& values);

std::vector<std::string> parameters_of(const SolutionSet& s);

std::string render_assumption(const ParamPoly& p);

// Human-readable listing, one root per line.
std::string render_text(const SolutionSet& s);

}  // namespace symrad
