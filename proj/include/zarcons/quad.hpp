#pragma once

#include <optional>
#include <string>

#include "zarcons/ratfunc.hpp"

namespace zarcons {

/// a + b·sqrt(d) with d squarefree, d ∉ {0, 1}. A rational value has b = 0 and
/// may carry d = 0, meaning no radical has been fixed yet.
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(const Rat& a) : a_(a) {}  // NOLINT: rationals embed
  QuadElem(const Int& d, const Rat& a, const Rat& b);

  /// sqrt(n) for a nonzero integer n, reduced to k·sqrt(d).
  static QuadElem sqrt_of(const Int& n);

  const Int& d() const { return d_; }
  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadElem conj() const { return QuadElem(d_, a_, -b_, true); }
  Rat norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }
  Rat trace() const { return a_ + a_; }

  QuadElem operator-() const { return QuadElem(d_, -a_, -b_, true); }
  friend QuadElem operator+(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator-(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator/(const QuadElem& x, const QuadElem& y);
  QuadElem inverse() const;

  /// Minimal polynomial over Q (degree 1 or 2).
  Poly min_poly() const;

  std::string to_string() const;

  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
  }

 private:
  QuadElem(const Int& d, const Rat& a, const Rat& b, bool /*trusted*/) : d_(d), a_(a), b_(b) {}
  static Int common_d(const QuadElem& x, const QuadElem& y);

  Int d_ = 0;
  Rat a_;
  Rat b_;
};

/// Exact evaluation of φ ∈ Q(X) at s; nullopt marks a pole.
std::optional<QuadElem> eval_at(const RatFunc& phi, const QuadElem& s);

enum class PrimeBehavior { Split, Inert, Ramified };

/// Decomposition of p in Q(sqrt(d)).
PrimeBehavior prime_behavior(const Int& d, const Int& p);

/// Twice the value of z under the chosen extension of v_p to Q(sqrt(d)).
/// Non-split primes have a unique extension, given by v_p of the norm. For split
/// primes sqrt(d) is sent to a p-adic root r: the smaller residue root for odd p,
/// the root with r ≡ 1 mod 4 for p = 2, and its negative when root_sign < 0.
Valuation quad_half_val(const QuadElem& z, const Int& p, int root_sign = 1);

/// The chosen p-adic square root of d modulo p^k (split primes only).
Int padic_sqrt(const Int& d, const Int& p, long k, int root_sign = 1);

}  // namespace zarcons
