#include "zarcons/ratfunc.hpp"

#include "zarcons/error.hpp"
#include "zarcons/factor.hpp"

namespace zarcons {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), Rat(1))) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorKind::InvalidInput, "rational function with zero denominator");
  if (!(num_.field() == den_.field())) fail(ErrorKind::InvalidInput, "mixed coefficient fields");
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.field(), Rat(1));
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const Rat l = den_.lead();
  if (!(l == Rat(1))) {
    const Rat inv = num_.field().inv(l);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Rat RatFunc::constant_value() const {
  if (!is_constant()) fail(ErrorKind::InvalidInput, "not a constant: " + to_string());
  return num_.coeff(0);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) fail(ErrorKind::InvalidInput, "division by zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), true);
}

std::string parenthesize(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-' || s[i] == '*' || s[i] == '/') return "(" + s + ")";
  return s;
}

std::string RatFunc::to_string(std::string_view var) const {
  if (is_polynomial()) return num_.to_string(var);
  return parenthesize(num_.to_string(var)) + "/" + parenthesize(den_.to_string(var));
}

Valuation ord_at(const RatFunc& phi, const Poly& f) {
  if (phi.is_zero()) return Valuation::infinity();
  return Valuation(multiplicity(phi.num(), f) - multiplicity(phi.den(), f));
}

Valuation ord_infinity(const RatFunc& phi) {
  if (phi.is_zero()) return Valuation::infinity();
  return Valuation(static_cast<long>(phi.den().degree()) - phi.num().degree());
}

Valuation ord_place(const RatFunc& phi, const Poly& f) {
  if (!(f.field() == phi.field())) fail(ErrorKind::InvalidInput, "place and element over different fields");
  if (!f.is_monic() || !is_irreducible(f))
    fail(ErrorKind::InvalidInput, "place generator must be monic irreducible: " + f.to_string());
  return ord_at(phi, f);
}

std::optional<Rat> eval_at(const RatFunc& phi, const Rat& s) {
  const Rat d = phi.den().eval(s);
  if (d.is_zero()) return std::nullopt;
  return phi.field().div(phi.num().eval(s), d);
}

}  // namespace zarcons
