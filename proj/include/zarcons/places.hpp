#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "zarcons/bivar.hpp"
#include "zarcons/quad.hpp"

namespace zarcons {

/// An element of one of the ambient fields: Q, K(X), or k(x, y).
using FieldElem = std::variant<Rat, RatFunc, BivarRatFunc>;

/// The ambient field itself.
struct FieldPoint {
  friend bool operator==(const FieldPoint&, const FieldPoint&) = default;
};

/// Z_(p) inside Q.
struct PAdicPlace {
  Int p;
  friend bool operator==(const PAdicPlace&, const PAdicPlace&) = default;
};

/// K[X]_(f) for a monic irreducible f.
struct FinitePlace {
  Poly f;
  friend bool operator==(const FinitePlace&, const FinitePlace&) = default;
};

/// K[1/X]_(1/X), the degree valuation.
struct InfinitePlace {
  friend bool operator==(const InfinitePlace&, const InfinitePlace&) = default;
};

/// The order valuation of k(x, y) along an irreducible curve f through the origin.
struct OrdPlace {
  BivarPoly f;
  friend bool operator==(const OrdPlace&, const OrdPlace&) = default;
};

/// A place of F(Y) over F, or F(Y) itself.
using ResiduePoint = std::variant<FieldPoint, FinitePlace, InfinitePlace>;

/// W + X·F(Y)[[X]] for a residue point W; with W = F(Y) this is F(Y)[[X]].
/// Elements are taken from F(Y)(X) with x = X and y = Y.
struct CompositePlace {
  ResiduePoint residue;
  friend bool operator==(const CompositePlace&, const CompositePlace&) = default;
};

/// {φ ∈ Q(X) : φ(s) ∈ U} where U extends Z_(p) to Q(s). For split quadratic s
/// the root sign selects the embedding (see quad_half_val); otherwise it is +1.
struct EvalPlace {
  Int p;
  QuadElem s;
  int root = 1;
  friend bool operator==(const EvalPlace&, const EvalPlace&) = default;
};

using ValuationPoint =
    std::variant<FieldPoint, PAdicPlace, FinitePlace, InfinitePlace, OrdPlace, CompositePlace, EvalPlace>;

// Checked constructors; they reject non-canonical or invalid generators.
PAdicPlace make_padic(const Int& p);
FinitePlace make_finite(const Poly& f, const std::vector<Poly>& asserted = {});
OrdPlace make_ord(const BivarPoly& f, const std::vector<BivarPoly>& atoms = {});
EvalPlace make_eval(const Int& p, const QuadElem& s, int root = 1);

/// Parses the place grammar: field, p:<prime>, fin:<poly>, inf, ordf:<bivar>,
/// comp:<place over Y>, eval:p=<prime>,s=<elem>[,root=+|-]. `field` supplies
/// the coefficient field of fin/ordf/comp generators.
ValuationPoint parse_place(std::string_view text, const Field& field = Field::rationals());

std::string to_string(const ValuationPoint& v);
std::string to_string(const FieldElem& e, bool capital_vars = false);

/// Total order: by kind (field, p, fin, inf, ordf, comp, eval), then by generator.
bool place_less(const ValuationPoint& a, const ValuationPoint& b);

/// Exact membership of φ in V. Throws InvalidInput when φ's field does not
/// match the kind of V.
bool contains(const ValuationPoint& v, const FieldElem& phi);

/// The residue point of a composite place, as a place of F(Y).
ValuationPoint residue_descent(const ValuationPoint& v);

/// Order of φ ∈ K(X) at a finite or infinite place.
Valuation ord_place(const RatFunc& phi, const ValuationPoint& v);

const char* kind_name(const ValuationPoint& v);

}  // namespace zarcons
