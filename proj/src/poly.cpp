#include "zarcons/poly.hpp"

#include <algorithm>

#include "fp_poly.hpp"
#include "zarcons/error.hpp"

namespace zarcons {

Poly::Poly(Field f, std::vector<Rat> coeffs) : field_(f), c_(std::move(coeffs)) {
  if (!field_.is_rational())
    for (Rat& r : c_) r = field_.normalize(r);
  trim();
}

Poly Poly::constant(Field f, const Rat& c) { return Poly(f, {c}); }

Poly Poly::monomial(Field f, const Rat& c, int degree) {
  std::vector<Rat> cs(static_cast<std::size_t>(degree) + 1, Rat(0));
  cs.back() = c;
  return Poly(f, std::move(cs));
}

Poly Poly::linear(Field f, const Rat& a) { return Poly(f, {-a, Rat(1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::require_same_field(const Poly& o) const {
  if (!(field_ == o.field_))
    fail(ErrorKind::InvalidInput, "mixed coefficient fields " + field_.tag() + " and " + o.field_.tag());
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rat(0);
  return c_[static_cast<std::size_t>(i)];
}

const Rat& Poly::lead() const {
  if (c_.empty()) fail(ErrorKind::InvalidInput, "leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(lead()));
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (Rat& r : out.c_) r = field_.normalize(-r);
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_field(o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_field(o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  require_same_field(o);
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  if (!field_.is_rational()) {
    *this = detail::to_poly(detail::fp_mul(detail::from_poly(*this), detail::from_poly(o)));
    return *this;
  }
  std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  trim();
  return *this;
}

Poly Poly::scaled(const Rat& c) const {
  Poly out = *this;
  for (Rat& r : out.c_) r = field_.mul(r, c);
  out.trim();
  return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  a.require_same_field(b);
  if (b.is_zero()) fail(ErrorKind::InvalidInput, "polynomial division by zero");
  if (!a.field_.is_rational()) {
    detail::FpPoly q, r;
    detail::fp_divmod(detail::from_poly(a), detail::from_poly(b), &q, &r);
    return {detail::to_poly(q), detail::to_poly(r)};
  }
  Poly rem = a;
  Poly quo(a.field_);
  if (rem.degree() < b.degree()) return {quo, rem};
  quo.c_.assign(static_cast<std::size_t>(rem.degree() - b.degree() + 1), Rat(0));
  const Rat inv_lead = b.lead().inverse();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const Rat factor = rem.lead() * inv_lead;
    quo.c_[static_cast<std::size_t>(shift)] = factor;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem.c_[j + static_cast<std::size_t>(shift)] -= factor * b.c_[j];
    rem.trim();
  }
  quo.trim();
  return {quo, rem};
}

bool Poly::divides(const Poly& g) const { return (g % *this).is_zero(); }

Poly Poly::derivative() const {
  std::vector<Rat> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * Rat(static_cast<long>(i)));
  return Poly(field_, std::move(out));
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(field_, Rat(1));
  Poly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

Poly Poly::compose(const Poly& inner) const {
  require_same_field(inner);
  Poly acc(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(field_, *it);
  return acc;
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  const Rat xx = field_.normalize(x);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, xx), *it);
  return acc;
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string num = field_.format(c);
    bool negative = !num.empty() && num[0] == '-';
    if (negative) num.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    if (i == 0) {
      out += num;
      continue;
    }
    if (num != "1") out += num + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Poly gcd(Poly a, Poly b) {
  if (!a.field().is_rational() || !b.field().is_rational()) {
    if (!(a.field() == b.field())) fail(ErrorKind::InvalidInput, "gcd over mixed fields");
    if (a.is_zero() && b.is_zero()) return a;
    return detail::to_poly(detail::fp_gcd(detail::from_poly(a), detail::from_poly(b)));
  }
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  return a.monic();
}

long multiplicity(const Poly& g, const Poly& f) {
  if (g.is_zero()) fail(ErrorKind::InvalidInput, "multiplicity in the zero polynomial");
  if (f.degree() < 1) fail(ErrorKind::InvalidInput, "multiplicity of a constant");
  long k = 0;
  Poly rest = g;
  while (rest.degree() >= f.degree()) {
    auto [q, r] = Poly::divmod(rest, f);
    if (!r.is_zero()) break;
    rest = std::move(q);
    ++k;
  }
  return k;
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.to_string() < b.to_string();
}

}  // namespace zarcons
