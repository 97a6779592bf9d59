#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "zarcons/poly.hpp"

namespace zarcons {

/// Element of K(X): reduced fraction with monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(Field::rationals()), den_(Poly::constant(Field::rationals(), Rat(1))) {}
  explicit RatFunc(Field f) : num_(f), den_(Poly::constant(f, Rat(1))) {}
  RatFunc(Poly num);  // NOLINT: polynomials embed into K(X)
  RatFunc(Poly num, Poly den);

  static RatFunc constant(Field f, const Rat& c) { return RatFunc(Poly::constant(f, c)); }
  static RatFunc variable(Field f) { return RatFunc(Poly::variable(f)); }

  const Field& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
  /// Constant value; requires is_constant().
  Rat constant_value() const;

  RatFunc operator-() const { return RatFunc(-num_, den_, true); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc inverse() const;
  RatFunc pow(long e) const;

  std::string to_string(std::string_view var = "X") const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  RatFunc(Poly num, Poly den, bool /*already reduced*/) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

/// Order of φ at the place of the monic irreducible f (no irreducibility check).
Valuation ord_at(const RatFunc& phi, const Poly& f);

/// Degree valuation deg(den) − deg(num).
Valuation ord_infinity(const RatFunc& phi);

/// Order at the place of f; rejects reducible or non-monic-normalizable f.
Valuation ord_place(const RatFunc& phi, const Poly& f);

/// Exact evaluation at a rational; nullopt marks a pole.
std::optional<Rat> eval_at(const RatFunc& phi, const Rat& s);

/// Wraps a printed operand in parentheses unless it is a single signed atom.
std::string parenthesize(const std::string& s);

}  // namespace zarcons
