#include "zarcons/bivar.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <utility>

#include "fp_poly.hpp"
#include "zarcons/error.hpp"
#include "zarcons/factor.hpp"

namespace zarcons {

BivarPoly::BivarPoly(Field f, std::vector<Poly> coeffs_in_x) : field_(f), c_(std::move(coeffs_in_x)) {
  for (const Poly& p : c_)
    if (!(p.field() == field_)) fail(ErrorKind::InvalidInput, "mixed coefficient fields");
  trim();
}

void BivarPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BivarPoly BivarPoly::constant(Field f, const Rat& c) { return BivarPoly(f, {Poly::constant(f, c)}); }
BivarPoly BivarPoly::x(Field f) { return monomial(f, Rat(1), 1, 0); }
BivarPoly BivarPoly::y(Field f) { return monomial(f, Rat(1), 0, 1); }

BivarPoly BivarPoly::monomial(Field f, const Rat& c, int i, int j) {
  std::vector<Poly> cs(static_cast<std::size_t>(i) + 1, Poly(f));
  cs.back() = Poly::monomial(f, c, j);
  return BivarPoly(f, std::move(cs));
}

BivarPoly BivarPoly::from_x(const Poly& p) {
  std::vector<Poly> cs;
  for (const Rat& c : p.coeffs()) cs.push_back(Poly::constant(p.field(), c));
  return BivarPoly(p.field(), std::move(cs));
}

BivarPoly BivarPoly::from_y(const Poly& p) { return BivarPoly(p.field(), {p}); }

int BivarPoly::deg_y() const {
  int d = -1;
  for (const Poly& p : c_) d = std::max(d, p.degree());
  return d;
}

int BivarPoly::total_degree() const {
  int d = -1;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) d = std::max(d, static_cast<int>(i) + c_[i].degree());
  return d;
}

Poly BivarPoly::coeff_x(int i) const {
  if (i < 0 || i > deg_x()) return Poly(field_);
  return c_[static_cast<std::size_t>(i)];
}

Rat BivarPoly::lead_coeff() const {
  if (is_zero()) fail(ErrorKind::InvalidInput, "leading coefficient of zero polynomial");
  const int dy = deg_y();
  for (int i = deg_x(); i >= 0; --i)
    if (c_[static_cast<std::size_t>(i)].degree() == dy) return c_[static_cast<std::size_t>(i)].lead();
  return Rat(0);
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out = *this;
  for (Poly& p : out.c_) p = -p;
  return out;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  if (!(field_ == o.field_)) fail(ErrorKind::InvalidInput, "mixed coefficient fields");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Poly(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) { return *this += -o; }

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  if (!(a.field_ == b.field_)) fail(ErrorKind::InvalidInput, "mixed coefficient fields");
  if (a.is_zero() || b.is_zero()) return BivarPoly(a.field_);
  std::vector<Poly> out(a.c_.size() + b.c_.size() - 1, Poly(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return BivarPoly(a.field_, std::move(out));
}

BivarPoly BivarPoly::scaled(const Rat& c) const {
  BivarPoly out = *this;
  for (Poly& p : out.c_) p = p.scaled(c);
  out.trim();
  return out;
}

BivarPoly BivarPoly::times_y_poly(const Poly& p) const {
  BivarPoly out = *this;
  for (Poly& q : out.c_) q *= p;
  out.trim();
  return out;
}

BivarPoly BivarPoly::pow(unsigned e) const {
  BivarPoly result = constant(field_, Rat(1));
  BivarPoly base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

Rat BivarPoly::eval(const Rat& a, const Rat& b) const { return eval_x(a).eval(b); }

Poly BivarPoly::eval_x(const Rat& a) const {
  Poly acc(field_);
  const Poly xa = Poly::constant(field_, a);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xa + *it;
  return acc;
}

Poly BivarPoly::eval_y(const Rat& b) const {
  std::vector<Rat> cs;
  for (const Poly& p : c_) cs.push_back(p.eval(b));
  return Poly(field_, std::move(cs));
}

Poly BivarPoly::substitute_y(const Poly& u) const {
  Poly acc(field_);
  const Poly x = Poly::variable(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->compose(u);
  return acc;
}

BivarPoly BivarPoly::swapped() const {
  const int dy = deg_y();
  std::vector<Poly> out;
  for (int j = 0; j <= dy; ++j) {
    std::vector<Rat> cs;
    for (const Poly& p : c_) cs.push_back(p.coeff(j));
    out.emplace_back(field_, std::move(cs));
  }
  return BivarPoly(field_, std::move(out));
}

BivarPoly BivarPoly::derivative_x() const {
  std::vector<Poly> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i].scaled(Rat(static_cast<long>(i))));
  return BivarPoly(field_, std::move(out));
}

BivarPoly BivarPoly::derivative_y() const {
  BivarPoly out = *this;
  for (Poly& p : out.c_) p = p.derivative();
  out.trim();
  return out;
}

BivarPoly BivarPoly::normalized() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(lead_coeff()));
}

std::string BivarPoly::to_string(std::string_view vx, std::string_view vy) const {
  if (is_zero()) return "0";
  std::string out;
  for (int j = deg_y(); j >= 0; --j) {
    for (int i = deg_x(); i >= 0; --i) {
      const Rat c = coeff(i, j);
      if (c.is_zero()) continue;
      std::string num = field_.format(c);
      const bool negative = num[0] == '-';
      if (negative) num.erase(0, 1);
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? "-" : "+";
      }
      std::string mono;
      auto append = [&mono](std::string_view v, int e) {
        if (e == 0) return;
        if (!mono.empty()) mono += "*";
        mono += v;
        if (e > 1) mono += "^" + std::to_string(e);
      };
      append(vx, i);
      append(vy, j);
      if (mono.empty()) out += num;
      else if (num == "1") out += mono;
      else out += num + "*" + mono;
    }
  }
  return out;
}

std::optional<BivarPoly> exact_div(const BivarPoly& a, const BivarPoly& b) {
  if (b.is_zero()) fail(ErrorKind::InvalidInput, "bivariate division by zero");
  const Field f = a.field();
  if (a.is_zero()) return BivarPoly(f);
  if (a.deg_x() < b.deg_x() || a.deg_y() < b.deg_y()) return std::nullopt;
  const int db = b.deg_x();
  const Poly lb = b.coeff_x(db);
  BivarPoly rest = a;
  std::vector<Poly> quo(static_cast<std::size_t>(a.deg_x() - db) + 1, Poly(f));
  while (!rest.is_zero()) {
    const int dr = rest.deg_x();
    if (dr < db) return std::nullopt;
    auto [q, r] = Poly::divmod(rest.coeff_x(dr), lb);
    if (!r.is_zero()) return std::nullopt;
    std::vector<Poly> shift(static_cast<std::size_t>(dr - db) + 1, Poly(f));
    shift.back() = q;
    quo[static_cast<std::size_t>(dr - db)] += q;
    rest -= BivarPoly(f, std::move(shift)) * b;
  }
  return BivarPoly(f, std::move(quo));
}

Poly content_x(const BivarPoly& f) {
  Poly g(f.field());
  for (const Poly& p : f.coeffs()) {
    g = gcd(g, p);
    if (g.degree() == 0) break;
  }
  return g;
}

namespace {

BivarPoly divide_by_y_poly(const BivarPoly& f, const Poly& c) {
  std::vector<Poly> out;
  for (const Poly& p : f.coeffs()) out.push_back(p / c);
  return BivarPoly(f.field(), std::move(out));
}

BivarPoly primitive_part_x(const BivarPoly& f) {
  if (f.is_zero()) return f;
  return divide_by_y_poly(f, content_x(f)).normalized();
}

BivarPoly pseudo_remainder(BivarPoly a, const BivarPoly& b) {
  const int db = b.deg_x();
  const Poly lb = b.coeff_x(db);
  while (!a.is_zero() && a.deg_x() >= db) {
    const int da = a.deg_x();
    std::vector<Poly> shift(static_cast<std::size_t>(da - db) + 1, Poly(a.field()));
    shift.back() = a.coeff_x(da);
    a = a.times_y_poly(lb) - BivarPoly(a.field(), std::move(shift)) * b;
  }
  return a;
}

}  // namespace

BivarPoly bivar_gcd(const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  const Poly c = gcd(content_x(a), content_x(b));
  BivarPoly pa = primitive_part_x(a);
  BivarPoly pb = primitive_part_x(b);
  if (pa.deg_x() < pb.deg_x()) std::swap(pa, pb);
  while (!pb.is_zero()) {
    BivarPoly r = pseudo_remainder(pa, pb);
    pa = std::move(pb);
    pb = primitive_part_x(r);
  }
  return primitive_part_x(pa).times_y_poly(c).normalized();
}

long ord_bivar(const BivarPoly& g, const BivarPoly& f) {
  if (g.is_zero()) fail(ErrorKind::InvalidInput, "order of the zero polynomial");
  if (f.is_constant()) fail(ErrorKind::InvalidInput, "order along a constant");
  long k = 0;
  BivarPoly rest = g;
  while (auto q = exact_div(rest, f)) {
    rest = std::move(*q);
    ++k;
  }
  return k;
}

BivarRatFunc::BivarRatFunc(BivarPoly num) : num_(std::move(num)), den_(BivarPoly::constant(num_.field(), Rat(1))) {}

BivarRatFunc::BivarRatFunc(BivarPoly num, BivarPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorKind::InvalidInput, "rational function with zero denominator");
  if (!(num_.field() == den_.field())) fail(ErrorKind::InvalidInput, "mixed coefficient fields");
  if (num_.is_zero()) {
    den_ = BivarPoly::constant(num_.field(), Rat(1));
    return;
  }
  if (!den_.is_constant()) {
    BivarPoly g = bivar_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *exact_div(num_, g);
      den_ = *exact_div(den_, g);
    }
  }
  const Rat inv = num_.field().inv(den_.lead_coeff());
  num_ = num_.scaled(inv);
  den_ = den_.scaled(inv);
}

BivarRatFunc BivarRatFunc::operator-() const {
  BivarRatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

BivarRatFunc operator+(const BivarRatFunc& a, const BivarRatFunc& b) {
  if (a.den_ == b.den_) return BivarRatFunc(a.num_ + b.num_, a.den_);
  return BivarRatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

BivarRatFunc operator-(const BivarRatFunc& a, const BivarRatFunc& b) { return a + (-b); }

BivarRatFunc operator*(const BivarRatFunc& a, const BivarRatFunc& b) {
  return BivarRatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

BivarRatFunc operator/(const BivarRatFunc& a, const BivarRatFunc& b) { return a * b.inverse(); }

BivarRatFunc BivarRatFunc::inverse() const {
  if (is_zero()) fail(ErrorKind::InvalidInput, "division by zero");
  return BivarRatFunc(den_, num_);
}

BivarRatFunc BivarRatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return BivarRatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

std::string BivarRatFunc::to_string(std::string_view vx, std::string_view vy) const {
  if (den_.is_constant()) return num_.to_string(vx, vy);
  return parenthesize(num_.to_string(vx, vy)) + "/" + parenthesize(den_.to_string(vx, vy));
}

Valuation ord_along(const BivarRatFunc& phi, const BivarPoly& f) {
  if (phi.is_zero()) return Valuation::infinity();
  return Valuation(ord_bivar(phi.num(), f) - ord_bivar(phi.den(), f));
}

namespace {
int x_adic_order(const BivarPoly& f) {
  int i = 0;
  while (f.coeff_x(i).is_zero()) ++i;
  return i;
}
}  // namespace

Valuation ord_x(const BivarRatFunc& phi) {
  if (phi.is_zero()) return Valuation::infinity();
  return Valuation(static_cast<long>(x_adic_order(phi.num())) - x_adic_order(phi.den()));
}

RatFunc leading_x_coefficient(const BivarRatFunc& phi) {
  if (phi.is_zero()) fail(ErrorKind::InvalidInput, "leading coefficient of zero");
  return RatFunc(phi.num().coeff_x(x_adic_order(phi.num())), phi.den().coeff_x(x_adic_order(phi.den())));
}

bool canonical_less(const BivarPoly& a, const BivarPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  return a.to_string() < b.to_string();
}

// ---- factoring --------------------------------------------------------------

namespace {

bool is_unit_content(const BivarPoly& f) { return content_x(f).degree() <= 0 && content_x(f.swapped()).degree() <= 0; }

// f primitive in both variables over F_p: f(x, u(x)) irreducible with
// deg u > deg_x f proves f irreducible.
bool proven_by_substitution(const BivarPoly& f, std::mt19937_64& rng, int tries) {
  const Field field = f.field();
  const long p = field.characteristic();
  std::uniform_int_distribution<long> coeff(0, p - 1);
  for (int t = 0; t < tries; ++t) {
    const bool swap = t % 2 == 1;
    const BivarPoly g = swap ? f.swapped() : f;
    const int m = g.deg_x() + 1 + (t / 6);
    std::vector<Rat> cs;
    for (int i = 0; i < m; ++i) cs.emplace_back(coeff(rng));
    cs.emplace_back(1);
    const Poly h = g.substitute_y(Poly(field, std::move(cs)));
    if (h.degree() > 0 && is_irreducible(h)) return true;
  }
  return false;
}

BivarPoly reduce_mod(const BivarPoly& f, long p) {
  Int l = 1;
  for (const Poly& q : f.coeffs())
    for (const Rat& c : q.coeffs()) l = lcm(l, c.den());
  const Field fp = Field::prime(p);
  std::vector<Poly> out;
  for (const Poly& q : f.coeffs()) {
    std::vector<Rat> cs;
    for (const Rat& c : q.coeffs()) cs.emplace_back(mod_floor(c.num() * (l / c.den()), Int(p)));
    out.emplace_back(fp, std::move(cs));
  }
  return BivarPoly(fp, std::move(out));
}

bool univariate_reducible(const Poly& h) {
  try {
    std::vector<Factor> fs = factor(h);
    return fs.size() > 1 || (fs.size() == 1 && fs.front().mult > 1);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UnsupportedFactorization) return false;
    throw;
  }
}


// Truncated power series in t = x - a with coefficients in K[y].
using Series = std::vector<Poly>;

Series series_mul(const Series& a, const Series& b, std::size_t k, const Field& f) {
  Series out(k, Poly(f));
  for (std::size_t i = 0; i < a.size() && i < k; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < k; ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Binomial coefficient as a field element.
Rat binomial(const Field& f, int n, int r) {
  Int c = 1;
  for (int i = 0; i < r; ++i) c = c * (n - i) / (i + 1);
  return f.normalize(Rat(c));
}

// f(a + t, y) as a series in t.
Series shift_x(const BivarPoly& g, const Rat& a) {
  const Field& f = g.field();
  Series out(static_cast<std::size_t>(g.deg_x()) + 1, Poly(f));
  for (int i = 0; i <= g.deg_x(); ++i)
    for (int j = 0; j <= i; ++j)
      out[static_cast<std::size_t>(j)] += g.coeff_x(i).scaled(f.mul(binomial(f, i, j), f.normalize(a.pow(i - j))));
  return out;
}

// Inverse map t -> x - a.
BivarPoly unshift_x(const Series& s, const Rat& a, const Field& f) {
  std::vector<Poly> out(s.size(), Poly(f));
  for (std::size_t j = 0; j < s.size(); ++j)
    for (std::size_t i = 0; i <= j; ++i)
      out[i] += s[j].scaled(f.mul(binomial(f, static_cast<int>(j), static_cast<int>(i)),
                                  f.normalize((-a).pow(static_cast<long>(j - i)))));
  return BivarPoly(f, std::move(out));
}

// u with u·b ≡ 1 mod m, for coprime b and m.
Poly inverse_modulo(const Poly& b, const Poly& m) {
  Poly r0 = m, r1 = b % m, s0(m.field()), s1 = Poly::constant(m.field(), Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = Poly::divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  if (r0.degree() != 0) fail(ErrorKind::InvalidInput, "inverse_modulo needs coprime inputs");
  return (s0.scaled(m.field().inv(r0.lead()))) % m;
}

BivarPoly primitive_in_y(const BivarPoly& g) {
  const Poly c = content_x(g.swapped());
  if (c.degree() <= 0) return g.normalized();
  return divide_by_y_poly(g.swapped(), c).swapped().normalized();
}

// Complete factorization of f, primitive in both variables, by lifting a
// factorization of f(a, y) over K[[x - a]] and recombining. Nullopt when no
// usable specialization exists or the univariate factorization is unsupported.
std::optional<std::vector<BivarPoly>> hensel_factor_in_y(const BivarPoly& g) {
  const Field& f = g.field();
  const int n = g.deg_y();
  std::vector<Rat> points;
  if (f.is_rational()) {
    for (long v = 0; v <= 12; ++v) {
      points.emplace_back(v);
      if (v) points.emplace_back(-v);
    }
  } else {
    for (long v = 0; v < f.characteristic() && v < 64; ++v) points.emplace_back(v);
  }
  for (const Rat& a : points) {
    const Series F = shift_x(g, a);
    const Poly& f0 = F[0];
    if (f0.degree() != n || f0.derivative().is_zero() || gcd(f0, f0.derivative()).degree() > 0) continue;
    std::vector<Factor> fs;
    try {
      fs = factor(f0);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::UnsupportedFactorization) continue;
      throw;
    }
    if (fs.size() == 1) return std::vector<BivarPoly>{g.normalized()};

    // Leading y-coefficient as a series, and its inverse.
    Series lead(F.size(), Poly(f));
    int lead_deg = 0;
    for (std::size_t j = 0; j < F.size(); ++j) {
      lead[j] = Poly::constant(f, F[j].coeff(n));
      if (!lead[j].is_zero()) lead_deg = static_cast<int>(j);
    }
    const std::size_t k = static_cast<std::size_t>(g.deg_x() + lead_deg + 1);
    Series inv(k, Poly(f));
    const Rat l0 = f.inv(lead[0].coeff(0));
    inv[0] = Poly::constant(f, l0);
    for (std::size_t j = 1; j < k; ++j) {
      Poly acc(f);
      for (std::size_t i = 1; i <= j && i < lead.size(); ++i) acc += lead[i] * inv[j - i];
      inv[j] = acc.scaled(f.mul(Rat(-1), l0));
    }
    const Series target = series_mul(F, inv, k, f);

    // Linear lifting of the monic factors.
    const std::size_t r = fs.size();
    std::vector<Poly> cof(r), bez(r);
    for (std::size_t i = 0; i < r; ++i) {
      cof[i] = f0.monic() / fs[i].f;
      bez[i] = inverse_modulo(cof[i], fs[i].f);
    }
    std::vector<Series> lifted(r, Series(k, Poly(f)));
    for (std::size_t i = 0; i < r; ++i) lifted[i][0] = fs[i].f;
    for (std::size_t j = 1; j < k; ++j) {
      Series prod{Poly::constant(f, Rat(1))};
      for (const auto& s : lifted) prod = series_mul(prod, s, j + 1, f);
      const Poly err = target[j] - prod[j];
      if (err.is_zero()) continue;
      for (std::size_t i = 0; i < r; ++i) lifted[i][j] = (err * bez[i]) % fs[i].f;
    }

    // Recombination: the smallest subset giving a true factor is irreducible.
    for (std::size_t size = 1; 2 * size <= r; ++size) {
      std::vector<bool> mask(r, false);
      std::fill(mask.begin(), mask.begin() + static_cast<long>(size), true);
      do {
        Series cand = lead;
        for (std::size_t i = 0; i < r; ++i)
          if (mask[i]) cand = series_mul(cand, lifted[i], k, f);
        const BivarPoly h = primitive_in_y(unshift_x(cand, a, f));
        if (h.deg_y() <= 0) continue;
        if (auto q = exact_div(g, h)) {
          auto rest = hensel_factor_in_y(*q);
          if (!rest) return std::nullopt;
          rest->push_back(h);
          return rest;
        }
      } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    return std::vector<BivarPoly>{g.normalized()};
  }
  return std::nullopt;
}

// Lifting in y first, then in x; small fields may have no usable point for one.
std::optional<std::vector<BivarPoly>> hensel_factor(const BivarPoly& g) {
  if (auto fs = hensel_factor_in_y(g)) return fs;
  auto fs = hensel_factor_in_y(g.swapped());
  if (!fs) return std::nullopt;
  for (BivarPoly& h : *fs) h = h.swapped().normalized();
  return fs;
}

}  // namespace

IrrStatus check_irreducible(const BivarPoly& f) {
  if (f.is_constant()) fail(ErrorKind::InvalidInput, "irreducibility of a constant");
  if (f.total_degree() == 1) return IrrStatus::Proven;
  const bool primitive = is_unit_content(f);
  if (!primitive)
    fail(ErrorKind::UnsupportedFactorization, "polynomial has a univariate factor: " + f.to_string());
  if (f.deg_x() == 1 || f.deg_y() == 1) return IrrStatus::Proven;
  if (auto fs = hensel_factor(f)) {
    if (fs->size() == 1) return IrrStatus::Proven;
    fail(ErrorKind::UnsupportedFactorization, f.to_string() + " is reducible");
  }
  std::mt19937_64 rng(0xb17a5 + static_cast<unsigned long>(f.total_degree()));
  if (!f.field().is_rational()) {
    return proven_by_substitution(f, rng, 24) ? IrrStatus::Proven : IrrStatus::Unconfirmed;
  }
  // Over Q: reduce modulo primes that keep the lex-leading monomial; an
  // irreducible image with the same leading monomial proves irreducibility.
  int attempts = 0;
  for (long p : primes_up_to(200)) {
    if (attempts >= 8) break;
    const BivarPoly fp = reduce_mod(f, p);
    if (fp.deg_x() != f.deg_x() || fp.deg_y() != f.deg_y()) continue;
    if (fp.lead_coeff().is_zero() || fp.total_degree() != f.total_degree()) continue;
    // the lex-leading monomial must survive
    bool lead_survives = false;
    for (int i = f.deg_x(); i >= 0; --i)
      if (!f.coeff(i, f.deg_y()).is_zero()) {
        lead_survives = !fp.coeff(i, f.deg_y()).is_zero();
        break;
      }
    if (!lead_survives || !is_unit_content(fp)) continue;
    ++attempts;
    if (proven_by_substitution(fp, rng, 12)) return IrrStatus::Proven;
  }
  // Spot check: specializations of a reducible polynomial stay reducible.
  int reducible_hits = 0;
  const long points[] = {2, -3, 5};
  for (long a : points) {
    const Poly h = f.eval_x(Rat(a));
    if (h.degree() == f.deg_y() && univariate_reducible(h)) ++reducible_hits;
  }
  for (long b : points) {
    const Poly h = f.eval_y(Rat(b));
    if (h.degree() == f.deg_x() && univariate_reducible(h)) ++reducible_hits;
  }
  if (reducible_hits == 6)
    fail(ErrorKind::UnsupportedFactorization,
         "specializations of " + f.to_string() + " all factor; supply its factors explicitly");
  return IrrStatus::Unconfirmed;
}

std::vector<BivarFactor> bivar_factor(const BivarPoly& f, const std::vector<BivarPoly>& atoms) {
  if (f.is_zero()) fail(ErrorKind::InvalidInput, "factor of the zero polynomial");
  const Field field = f.field();
  std::vector<BivarFactor> out;
  auto add = [&out](const BivarPoly& g, long m, IrrStatus s) {
    BivarPoly n = g.normalized();
    for (BivarFactor& bf : out)
      if (bf.f == n) {
        bf.mult += m;
        return;
      }
    out.push_back({n, m, s});
  };

  BivarPoly rest = f;
  // x-adic and y-adic monomial content
  int ax = 0;
  while (rest.coeff_x(ax).is_zero()) ++ax;
  if (ax > 0) {
    std::vector<Poly> cs(rest.coeffs().begin() + ax, rest.coeffs().end());
    rest = BivarPoly(field, std::move(cs));
    add(BivarPoly::x(field), ax, IrrStatus::Proven);
  }
  // univariate contents
  const Poly cy = content_x(rest);
  if (cy.degree() > 0) {
    for (const Factor& fac : factor(cy)) add(BivarPoly::from_y(fac.f), fac.mult, IrrStatus::Proven);
    rest = divide_by_y_poly(rest, cy);
  }
  const Poly cx = content_x(rest.swapped());
  if (cx.degree() > 0) {
    for (const Factor& fac : factor(cx)) add(BivarPoly::from_x(fac.f), fac.mult, IrrStatus::Proven);
    rest = divide_by_y_poly(rest.swapped(), cx).swapped();
  }
  if (rest.is_constant()) {
    std::sort(out.begin(), out.end(), [](const BivarFactor& a, const BivarFactor& b) { return canonical_less(a.f, b.f); });
    return out;
  }

  auto settle = [&](const BivarPoly& q, long m) {
    if (q.total_degree() > 1 && q.deg_x() > 0 && q.deg_y() > 0) {
      if (auto fs = hensel_factor(q)) {
        for (const BivarPoly& h : *fs) add(h, m, IrrStatus::Proven);
      } else {
        add(q, m, check_irreducible(q));
      }
      return;
    }
    add(q, m, IrrStatus::Proven);
  };
  // A squarefree primitive part factors completely by lifting.
  if (auto fs = hensel_factor(rest)) {
    for (const BivarPoly& h : *fs) add(h, 1, IrrStatus::Proven);
    std::sort(out.begin(), out.end(), [](const BivarFactor& a, const BivarFactor& b) { return canonical_less(a.f, b.f); });
    return out;
  }

  // Otherwise refine along atoms and derivative gcds first.
  std::vector<std::pair<BivarPoly, long>> pieces{{rest.normalized(), 1}};
  std::vector<BivarPoly> splitters;
  for (const BivarPoly& a : atoms)
    if (a.field() == field && !a.is_constant()) splitters.push_back(a);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < pieces.size() && !changed; ++k) {
      const BivarPoly q = pieces[k].first;
      const long m = pieces[k].second;
      std::vector<BivarPoly> local = splitters;
      local.push_back(q.derivative_y());
      local.push_back(q.derivative_x());
      for (const BivarPoly& s : local) {
        if (s.is_zero()) continue;
        const BivarPoly g = bivar_gcd(q, s);
        if (g.is_constant() || g.total_degree() >= q.total_degree()) continue;
        const BivarPoly h = *exact_div(q, g);
        pieces.erase(pieces.begin() + static_cast<long>(k));
        pieces.push_back({g.normalized(), m});
        pieces.push_back({h.normalized(), m});
        splitters.push_back(g);
        changed = true;
        break;
      }
    }
  }
  for (const auto& [q, m] : pieces) settle(q, m);
  std::sort(out.begin(), out.end(), [](const BivarFactor& a, const BivarFactor& b) { return canonical_less(a.f, b.f); });
  return out;
}

}  // namespace zarcons
