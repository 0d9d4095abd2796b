#pragma once

// Polynomial text format.
//
// Grammar (whitespace allowed between tokens, no implicit multiplication):
//
//   poly     := [ sign ] term { sign term }
//   term     := factor { "*" factor }
//   factor   := rational | ident [ "^" nat ] | "(" poly ")"
//   rational := [ "-" ] nat [ "/" nat ]
//   sign     := "+" | "-"
//   ident    := letter-or-underscore { letter-or-digit-or-underscore }
//
// Printing is canonical: terms descend in degrevlex order, coefficients are
// reduced rationals, exponent 1 and coefficient 1 are left implicit, so
// parse(to_string(p)) == p.

#include <string>
#include <vector>

#include "diffop/polynomial.hpp"

namespace diffop {

bool valid_variable_name(const std::string& name);

// Throws ParseError with a 0-based position for syntax errors and unknown
// identifiers.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables,
                            MonomialOrder order);

std::string to_string(const Polynomial& p, const std::vector<std::string>& variables);

}  // namespace diffop
