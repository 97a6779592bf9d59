#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "zarcons/consets.hpp"

namespace zarcons {

/// A rational or quadratic algebraic number.
using Algebraic = QuadElem;

/// Monic minimal polynomial over Q of a rational or quadratic element.
Poly minimal_polynomial(const Algebraic& s);

/// Whether V_s and V_t restrict to the same ring of Q(X). Same minimal
/// polynomial is required; when p splits in Q(√d) the two conjugates give
/// different rings (the fixed embedding tells them apart), so they must
/// also coincide.
bool restricted_equal(const Algebraic& s, const Algebraic& t, const Int& p);

/// The common quadratic radicand, 0 when both are rational.
Int common_radicand(const Algebraic& s, const Algebraic& t);

struct SeparatorResult {
  RatFunc q;
  Rat c;                 // q = p_s / c, or the split-conjugate form (X - a) / c
  long half_val_s = 0;   // twice the extended valuation of q(s), or +inf
  bool s_zero = false;   // q(s) = 0
  long half_val_t = 0;   // twice the extended valuation of q(t)
};

/// q with q ∈ V_s and q ∉ V_t, both taken with the embedding `root`. Throws
/// ConjugateInputs when V_s and V_t agree.
SeparatorResult build_separator(const Algebraic& s, const Algebraic& t, const Int& p, int root = 1);

struct RefutationResult {
  Rat t;
  long modulus_exponent = 0;  // t ≡ s mod p^N
  long k = 0;                 // t = s + k·p^N
  std::vector<bool> in_s, in_t;    // memberships of the in-generators
  std::vector<bool> out_s, out_t;  // memberships of the out-generators
};

/// A second member V_t of S next to V_s, t = s + k·p^N for the least N ≤ max_n
/// and then the least k in 1..p-1. Throws PreconditionViolated when V_s ∉ S and
/// BudgetExceeded when the search runs out.
RefutationResult refute_isolation(const BasicSet& s, const Rat& center, const Int& p, long max_n = 40);

}  // namespace zarcons
