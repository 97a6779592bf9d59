#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zarcons/ratfunc.hpp"

namespace zarcons {

/// Polynomial in k[x, y], stored recursively: coefficient i is a polynomial in y
/// multiplying x^i. Canonical term order is lex with y > x.
class BivarPoly {
 public:
  BivarPoly() = default;
  explicit BivarPoly(Field f) : field_(f) {}
  BivarPoly(Field f, std::vector<Poly> coeffs_in_x);

  static BivarPoly constant(Field f, const Rat& c);
  static BivarPoly x(Field f);
  static BivarPoly y(Field f);
  static BivarPoly monomial(Field f, const Rat& c, int i, int j);
  /// Embeds a univariate polynomial as a polynomial in x (resp. y).
  static BivarPoly from_x(const Poly& p);
  static BivarPoly from_y(const Poly& p);

  const Field& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return deg_x() <= 0 && deg_y() <= 0; }
  int deg_x() const { return static_cast<int>(c_.size()) - 1; }
  int deg_y() const;
  int total_degree() const;
  const std::vector<Poly>& coeffs() const { return c_; }
  /// Coefficient of x^i as a polynomial in y.
  Poly coeff_x(int i) const;
  Rat coeff(int i, int j) const { return coeff_x(i).coeff(j); }
  /// Leading coefficient in lex order with y > x.
  Rat lead_coeff() const;

  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  BivarPoly scaled(const Rat& c) const;
  BivarPoly times_y_poly(const Poly& p) const;
  BivarPoly pow(unsigned e) const;

  Rat eval(const Rat& a, const Rat& b) const;
  /// f(a, y) as a polynomial in y.
  Poly eval_x(const Rat& a) const;
  /// f(x, b) as a polynomial in x.
  Poly eval_y(const Rat& b) const;
  /// f(x, u(x)).
  Poly substitute_y(const Poly& u) const;
  BivarPoly swapped() const;
  BivarPoly derivative_x() const;
  BivarPoly derivative_y() const;

  /// Scaled so the lex-leading coefficient is 1.
  BivarPoly normalized() const;

  std::string to_string(std::string_view vx = "x", std::string_view vy = "y") const;

  friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  void trim();
  Field field_;
  std::vector<Poly> c_;
};

/// a / b when b divides a exactly in k[x, y].
std::optional<BivarPoly> exact_div(const BivarPoly& a, const BivarPoly& b);

/// Normalized gcd; gcd(0, 0) = 0.
BivarPoly bivar_gcd(const BivarPoly& a, const BivarPoly& b);

/// Monic gcd of the y-polynomial coefficients (content with respect to x).
Poly content_x(const BivarPoly& f);

/// Largest k with f^k | g; g must be nonzero and f nonconstant.
long ord_bivar(const BivarPoly& g, const BivarPoly& f);

/// Element of k(x, y) as a reduced fraction with normalized denominator.
class BivarRatFunc {
 public:
  BivarRatFunc() : num_(Field::rationals()), den_(BivarPoly::constant(Field::rationals(), Rat(1))) {}
  explicit BivarRatFunc(Field f) : num_(f), den_(BivarPoly::constant(f, Rat(1))) {}
  BivarRatFunc(BivarPoly num);  // NOLINT: polynomials embed into k(x, y)
  BivarRatFunc(BivarPoly num, BivarPoly den);

  const Field& field() const { return num_.field(); }
  const BivarPoly& num() const { return num_; }
  const BivarPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  BivarRatFunc operator-() const;
  friend BivarRatFunc operator+(const BivarRatFunc& a, const BivarRatFunc& b);
  friend BivarRatFunc operator-(const BivarRatFunc& a, const BivarRatFunc& b);
  friend BivarRatFunc operator*(const BivarRatFunc& a, const BivarRatFunc& b);
  friend BivarRatFunc operator/(const BivarRatFunc& a, const BivarRatFunc& b);
  BivarRatFunc inverse() const;
  BivarRatFunc pow(long e) const;

  std::string to_string(std::string_view vx = "x", std::string_view vy = "y") const;

  friend bool operator==(const BivarRatFunc& a, const BivarRatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  BivarPoly num_;
  BivarPoly den_;
};

/// Order of φ along the irreducible curve f.
Valuation ord_along(const BivarRatFunc& phi, const BivarPoly& f);

/// Order of φ in x, viewing k(x, y) inside k(y)((x)).
Valuation ord_x(const BivarRatFunc& phi);

/// Leading x-coefficient of φ (nonzero φ): (φ / x^ord_x(φ)) at x = 0, in k(y).
RatFunc leading_x_coefficient(const BivarRatFunc& phi);

enum class IrrStatus { Proven, Unconfirmed };

struct BivarFactor {
  BivarPoly f;  // normalized, nonconstant
  long mult = 1;
  IrrStatus status = IrrStatus::Proven;
};

/// Irreducibility evidence for a nonconstant polynomial. Proven comes from a
/// degree argument or an irreducible specialization; Unconfirmed means the
/// polynomial is accepted as irreducible by assertion. Throws
/// UnsupportedFactorization when a reducibility witness is found.
IrrStatus check_irreducible(const BivarPoly& f);

/// Factorization into normalized pieces: monomial and univariate contents are
/// factored exactly, the primitive part is split along the given atoms and by
/// squarefree decomposition, and every remaining piece goes through
/// check_irreducible(). Sorted canonically.
std::vector<BivarFactor> bivar_factor(const BivarPoly& f, const std::vector<BivarPoly>& atoms = {});

/// Degree then printed form.
bool canonical_less(const BivarPoly& a, const BivarPoly& b);

}  // namespace zarcons
