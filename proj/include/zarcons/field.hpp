#pragma once

#include <string>
#include <string_view>

#include "zarcons/rat.hpp"

namespace zarcons {

/// Coefficient field tag: Q, or F_p for a prime p < 2^31.
/// Elements of F_p are stored as integral Rats in [0, p).
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(long p);
  /// Accepts "Q", "F5", "F_5", "F<5>".
  static Field parse(std::string_view tag);

  bool is_rational() const { return p_ == 0; }
  long characteristic() const { return p_; }

  Rat normalize(const Rat& a) const;
  Rat add(const Rat& a, const Rat& b) const { return normalize(a + b); }
  Rat sub(const Rat& a, const Rat& b) const { return normalize(a - b); }
  Rat mul(const Rat& a, const Rat& b) const { return normalize(a * b); }
  Rat inv(const Rat& a) const;
  Rat div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }

  /// Printable coefficient; F_p residues use the symmetric range.
  std::string format(const Rat& a) const;
  std::string tag() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(long p) : p_(p) {}
  long p_ = 0;
};

/// Modular inverse of a in Z/m (a invertible).
long inverse_mod(long a, long m);

}  // namespace zarcons
