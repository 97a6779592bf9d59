#include "zarcons/quad.hpp"

#include "zarcons/error.hpp"

namespace zarcons {

QuadElem::QuadElem(const Int& d, const Rat& a, const Rat& b) : d_(d), a_(a), b_(b) {
  if (b_.is_zero()) return;
  if (d_ == 0 || d_ == 1 || !is_squarefree(d_))
    fail(ErrorKind::InvalidInput, "radicand must be squarefree and not 0 or 1, got " + d_.get_str());
}

QuadElem QuadElem::sqrt_of(const Int& n) {
  if (n == 0) return QuadElem(Rat(0));
  Int rest = abs(n);
  Int k = 1;
  for (const Int& q : prime_divisors(rest)) {
    long e = multiplicity_of(q, rest);
    for (long i = 0; i < e / 2; ++i) k *= q;
  }
  Int d = n / (k * k);
  if (d == 1) return QuadElem(Rat(k));
  return QuadElem(d, Rat(0), Rat(k));
}

Int QuadElem::common_d(const QuadElem& x, const QuadElem& y) {
  if (x.is_rational()) return y.is_rational() ? (x.d_ != 0 ? x.d_ : y.d_) : y.d_;
  if (y.is_rational() || x.d_ == y.d_) return x.d_;
  fail(ErrorKind::InvalidInput, "elements of different quadratic fields: sqrt(" + x.d_.get_str() + ") and sqrt(" +
                                    y.d_.get_str() + ")");
}

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
  return QuadElem(QuadElem::common_d(x, y), x.a_ + y.a_, x.b_ + y.b_, true);
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) { return x + (-y); }

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
  const Int d = QuadElem::common_d(x, y);
  return QuadElem(d, x.a_ * y.a_ + Rat(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, true);
}

QuadElem QuadElem::inverse() const {
  if (is_zero()) fail(ErrorKind::InvalidInput, "division by zero");
  const Rat n = norm();
  return QuadElem(d_, a_ / n, -b_ / n, true);
}

QuadElem operator/(const QuadElem& x, const QuadElem& y) { return x * y.inverse(); }

Poly QuadElem::min_poly() const {
  const Field q = Field::rationals();
  if (is_rational()) return Poly::linear(q, a_);
  return Poly(q, {norm(), -trace(), Rat(1)});
}

std::string QuadElem::to_string() const {
  if (is_rational()) return a_.to_string();
  std::string out;
  if (!a_.is_zero()) out = a_.to_string();
  std::string coef = b_.abs().to_string();
  std::string rad = "sqrt(" + d_.get_str() + ")";
  if (b_.sign() < 0) out += "-";
  else if (!out.empty()) out += "+";
  out += coef == "1" ? rad : coef + "*" + rad;
  return out;
}

std::optional<QuadElem> eval_at(const RatFunc& phi, const QuadElem& s) {
  if (!phi.field().is_rational()) fail(ErrorKind::InvalidInput, "quadratic evaluation needs coefficients in Q");
  auto horner = [&s](const Poly& p) {
    QuadElem acc(Rat(0));
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * s + QuadElem(*it);
    return acc;
  };
  const QuadElem d = horner(phi.den());
  if (d.is_zero()) return std::nullopt;
  return horner(phi.num()) / d;
}

PrimeBehavior prime_behavior(const Int& d, const Int& p) {
  require_prime(p);
  if (p == 2) {
    const Int r = mod_floor(d, Int(8));
    if (r == 1) return PrimeBehavior::Split;
    if (r == 5) return PrimeBehavior::Inert;
    return PrimeBehavior::Ramified;
  }
  if (mod_floor(d, p) == 0) return PrimeBehavior::Ramified;
  const Int e = (p - 1) / 2;
  Int leg;
  const Int dm = mod_floor(d, p);
  mpz_powm(leg.get_mpz_t(), dm.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return leg == 1 ? PrimeBehavior::Split : PrimeBehavior::Inert;
}

Int padic_sqrt(const Int& d, const Int& p, long k, int root_sign) {
  if (prime_behavior(d, p) != PrimeBehavior::Split)
    fail(ErrorKind::InvalidInput, "p does not split in Q(sqrt(d))");
  Int modulus;
  mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
  Int r;
  if (p == 2) {
    // Invariant r² ≡ d mod 2^m, which pins r down modulo 2^(m-1); r ≡ 1 mod 4 throughout.
    r = 1;
    for (long m = 3; m <= k; ++m) {
      Int next;
      mpz_ui_pow_ui(next.get_mpz_t(), 2, static_cast<unsigned long>(m + 1));
      if (mod_floor(r * r - d, next) != 0) {
        Int step;
        mpz_ui_pow_ui(step.get_mpz_t(), 2, static_cast<unsigned long>(m - 1));
        r += step;
      }
    }
  } else {
    // smaller residue root, then Newton lifting
    const long pl = p.get_si();
    const long dm = mod_floor(d, p).get_si();
    long r0 = -1;
    for (long c = 1; c <= pl / 2; ++c)
      if ((c * c) % pl == dm) {
        r0 = c;
        break;
      }
    if (r0 < 0) fail(ErrorKind::InvalidInput, "no square root found modulo p");
    r = r0;
    Int cur = p;
    while (cur < modulus) {
      cur *= cur;
      if (cur > modulus) cur = modulus;
      Int inv;
      Int twice = mod_floor(2 * r, cur);
      mpz_invert(inv.get_mpz_t(), twice.get_mpz_t(), cur.get_mpz_t());
      r = mod_floor(r - (r * r - d) * inv, cur);
    }
  }
  if (root_sign < 0) r = -r;
  return mod_floor(r, modulus);
}

Valuation quad_half_val(const QuadElem& z, const Int& p, int root_sign) {
  require_prime(p);
  if (z.is_zero()) return Valuation::infinity();
  if (z.is_rational()) {
    const Valuation v = padic_val(z.a(), p);
    return v + v;
  }
  if (prime_behavior(z.d(), p) != PrimeBehavior::Split) return padic_val(z.norm(), p);
  const Valuation vb = padic_val(z.b(), p);
  for (long k = 4;; k *= 2) {
    const long prec = k;  // r is exact modulo p^k
    const Int r = padic_sqrt(z.d(), p, k, root_sign);
    const Valuation v = padic_val(z.a() + z.b() * Rat(r), p);
    if (v < vb + Valuation(prec)) return v + v;
    if (k > (1L << 20)) fail(ErrorKind::BudgetExceeded, "p-adic precision loop did not settle");
  }
}

}  // namespace zarcons
