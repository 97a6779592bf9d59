#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zarcons/field.hpp"

namespace zarcons {

/// Univariate polynomial over Q or F_p, ascending coefficients, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Field f) : field_(f) {}
  Poly(Field f, std::vector<Rat> coeffs);

  static Poly constant(Field f, const Rat& c);
  static Poly variable(Field f) { return monomial(f, Rat(1), 1); }
  static Poly monomial(Field f, const Rat& c, int degree);
  /// Root factor X − a.
  static Poly linear(Field f, const Rat& a);

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const;
  const Rat& lead() const;

  Poly monic() const;
  bool is_monic() const { return !c_.empty() && c_.back() == Rat(1); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  Poly scaled(const Rat& c) const;

  /// Euclidean division; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
  bool divides(const Poly& g) const;

  Poly derivative() const;
  Poly pow(unsigned e) const;
  Poly compose(const Poly& inner) const;

  Rat eval(const Rat& x) const;
  /// Horner evaluation in any ring T constructible from Rat.
  template <class T>
  T eval_in(const T& x, const T& zero) const {
    T acc = zero;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  std::string to_string(std::string_view var = "X") const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  void trim();
  void require_same_field(const Poly& o) const;

  Field field_;
  std::vector<Rat> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// Largest k with f^k | g (g ≠ 0, deg f ≥ 1).
long multiplicity(const Poly& g, const Poly& f);

/// Canonical sort key: degree first, then printed form.
bool canonical_less(const Poly& a, const Poly& b);

}  // namespace zarcons
