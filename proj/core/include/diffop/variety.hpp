#pragma once

#include <string>
#include <vector>

#include "diffop/quotient.hpp"

namespace diffop {

// On-disk description of a variety: named variables, defining polynomials as
// text, and a monomial order name ("degrevlex", "deglex" or "lex").
struct VarietyFile {
  std::string name;
  std::vector<std::string> variables;
  std::vector<std::string> generators;
  std::string order = "degrevlex";
};

// Builds the quotient ring; polynomial syntax errors surface as ParseError,
// an unknown order name as Error.
RingPtr ring_from_variety(const VarietyFile& vf);

struct CatalogExpected {
  int r;
  int dim;
  bool smooth;
  int generator_count;
};

struct CatalogEntry {
  VarietyFile variety;
  CatalogExpected expected;
};

// Built-in worked examples, usable anywhere a variety file is accepted.
const std::vector<CatalogEntry>& catalog();

// Null when no entry has that name.
const CatalogEntry* catalog_find(const std::string& name);

}  // namespace diffop
