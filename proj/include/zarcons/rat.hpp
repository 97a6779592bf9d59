#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace zarcons {

using Int = mpz_class;

/// An element of Z ∪ {+∞}; the value of a valuation or an order function.
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr Valuation(long v) : value_(v) {}  // NOLINT: implicit by design of the arithmetic
  static constexpr Valuation infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const { return infinite_; }
  long value() const;

  friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend Valuation operator+(const Valuation& a, const Valuation& b);
  friend Valuation operator-(const Valuation& a, const Valuation& b);

  std::string to_string() const;

 private:
  long value_ = 0;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// Exact rational number in lowest terms with positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}  // NOLINT
  Rat(const Int& n) : q_(n) {}  // NOLINT
  Rat(const Int& n, const Int& d);
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "a" or "a/b" with optional sign.
  static Rat parse(const std::string& text);

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rat inverse() const;
  Rat pow(long e) const;
  Rat abs() const { return Rat(mpq_class(::abs(q_))); }

  std::string to_string() const { return q_.get_str(); }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Primality for the integers used as residue characteristics and p-adic primes.
bool is_prime(const Int& n);

/// Requires a prime; throws InvalidInput otherwise.
void require_prime(const Int& p, const char* what = "p");

/// Exponent of p in n (n ≠ 0).
long multiplicity_of(const Int& p, const Int& n);

/// v_p(q) = v_p(num) − v_p(den); +∞ exactly for q = 0.
Valuation padic_val(const Rat& q, const Int& p);

/// Nonnegative residue of n modulo m.
Int mod_floor(const Int& n, const Int& m);

/// Squarefree test for nonzero integers.
bool is_squarefree(const Int& n);

/// Distinct prime divisors of a nonzero integer by trial division; throws
/// Unsupported when a composite cofactor beyond the trial bound remains.
std::vector<Int> prime_divisors(const Int& n);

/// Primes in [2, bound].
std::vector<long> primes_up_to(long bound);

}  // namespace zarcons
