#pragma once

#include <vector>

#include "zarcons/poly.hpp"

namespace zarcons {

struct Factor {
  Poly f;  // monic irreducible
  long mult = 1;
};

/// Factorization into monic irreducibles, sorted canonically. The unit is dropped.
///
/// Complete over F_p and over Q. Over Q: squarefree decomposition, division by
/// the caller's asserted irreducibles, rational roots, and for degree >= 4
/// remainders a modular factorization lifted p-adically past the coefficient
/// bound and recombined. UnsupportedFactorization only when more than 16
/// modular factors would have to be recombined.
std::vector<Factor> factor(const Poly& f, const std::vector<Poly>& asserted = {});

/// Irreducibility test under the same policy as factor().
bool is_irreducible(const Poly& f, const std::vector<Poly>& asserted = {});

/// All monic irreducibles of exactly the given degree over F_p, canonically sorted.
std::vector<Poly> irreducibles_of_degree(const Field& fp, int degree);

/// All monic irreducibles of degree 1..bound over F_p, canonically sorted.
std::vector<Poly> irreducibles_up_to(const Field& fp, int bound);

/// Rational roots of a nonzero polynomial over Q, ascending, without multiplicity.
std::vector<Rat> rational_roots(const Poly& f);

}  // namespace zarcons
