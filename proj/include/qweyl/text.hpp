#pragma once

// Text syntax for polynomials:
//
//   poly   := term (('+' | '-') term)*      (a leading sign is allowed)
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := ('x' | 'y') ['^' nat]
//   coeff  := field literal (e.g. 3, 1/2 over Q; residues over F_p)
//
// Factors are multiplied in written order, so "y*x" parses to q*x*y + 1.

#include <string>
#include <string_view>

#include "qweyl/weyl.hpp"

namespace qweyl {

WeylPoly parse_poly(const Context& ctx, std::string_view text);

// Canonical text: descending degree-lex terms, "*" products, "^" powers.
std::string render(const WeylPoly& f);

}  // namespace qweyl
