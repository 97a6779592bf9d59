#pragma once

#include <string_view>
#include <vector>

#include "zarcons/bivar.hpp"
#include "zarcons/quad.hpp"

namespace zarcons {

/// Side information gathered while parsing: polynomials wrapped in irr(...)
/// are asserted irreducible; in bivariate contexts the numerator of every sum
/// is also recorded as a factoring atom.
struct ParseHints {
  std::vector<Poly> irreducible;
  std::vector<BivarPoly> atoms;
};

// Grammar: integers, a/b, the context's variables, sqrt(n), irr(e), + - * / ^
// (integer exponents, negative allowed), parentheses and implicit products like 2X.

Rat parse_rational(std::string_view text);
QuadElem parse_quad(std::string_view text);

/// Univariate element; `var` is accepted in either case.
RatFunc parse_ratfunc(std::string_view text, const Field& field, char var = 'X', ParseHints* hints = nullptr);
/// As parse_ratfunc, but the result must be a polynomial.
Poly parse_poly(std::string_view text, const Field& field, char var = 'X', ParseHints* hints = nullptr);

/// Bivariate element; x/X is the first variable and y/Y the second.
BivarRatFunc parse_bivar(std::string_view text, const Field& field, ParseHints* hints = nullptr);
BivarPoly parse_bivar_poly(std::string_view text, const Field& field, ParseHints* hints = nullptr);

}  // namespace zarcons
