#include "fp_poly.hpp"

#include <algorithm>

namespace zarcons::detail {

namespace {
inline long mulmod(long a, long b, long p) { return static_cast<long>((static_cast<__int128>(a) * b) % p); }
}  // namespace

FpPoly from_poly(const Poly& f) {
  FpPoly out;
  out.p = f.field().characteristic();
  out.c.reserve(f.coeffs().size());
  for (const Rat& r : f.coeffs()) out.c.push_back(r.num().get_si());
  return out;
}

Poly to_poly(const FpPoly& f) {
  std::vector<Rat> cs;
  cs.reserve(f.c.size());
  for (long v : f.c) cs.emplace_back(v);
  return Poly(Field::prime(f.p), std::move(cs));
}

FpPoly fp_x(long p) { return FpPoly{p, {0, 1}}; }

FpPoly fp_const(long p, long v) {
  FpPoly out{p, {((v % p) + p) % p}};
  out.trim();
  return out;
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
  FpPoly out{a.p, std::vector<long>(std::max(a.c.size(), b.c.size()), 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] = (out.c[i] + b.c[i]) % a.p;
  out.trim();
  return out;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
  FpPoly out{a.p, std::vector<long>(std::max(a.c.size(), b.c.size()), 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] = (out.c[i] - b.c[i] + a.p) % a.p;
  out.trim();
  return out;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly{a.p, {}};
  FpPoly out{a.p, std::vector<long>(a.c.size() + b.c.size() - 1, 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] = (out.c[i + j] + mulmod(a.c[i], b.c[j], a.p)) % a.p;
  }
  out.trim();
  return out;
}

FpPoly fp_scale(const FpPoly& a, long s) {
  FpPoly out = a;
  for (long& v : out.c) v = mulmod(v, ((s % a.p) + a.p) % a.p, a.p);
  out.trim();
  return out;
}

void fp_divmod(const FpPoly& a, const FpPoly& b, FpPoly* q, FpPoly* r) {
  const long p = a.p;
  FpPoly rem = a;
  FpPoly quo{p, {}};
  if (rem.degree() >= b.degree()) quo.c.assign(rem.c.size() - b.c.size() + 1, 0);
  const long inv_lead = inverse_mod(b.lead(), p);
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const long factor = mulmod(rem.lead(), inv_lead, p);
    quo.c[shift] = factor;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      long& slot = rem.c[j + shift];
      slot = (slot - mulmod(factor, b.c[j], p) + p) % p;
    }
    rem.trim();
  }
  quo.trim();
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& m) {
  FpPoly r;
  fp_divmod(a, m, nullptr, &r);
  return r;
}

FpPoly fp_monic(const FpPoly& a) {
  if (a.is_zero()) return a;
  return fp_scale(a, inverse_mod(a.lead(), a.p));
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = fp_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a);
}

FpPoly fp_derivative(const FpPoly& a) {
  FpPoly out{a.p, {}};
  for (std::size_t i = 1; i < a.c.size(); ++i) out.c.push_back(mulmod(a.c[i], static_cast<long>(i) % a.p, a.p));
  out.trim();
  return out;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) { return fp_mod(fp_mul(a, b), m); }

FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& m) {
  FpPoly result = fp_mod(fp_const(base.p, 1), m);
  FpPoly b = fp_mod(base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = fp_mulmod(result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = fp_mulmod(result, b, m);
  }
  return result;
}

}  // namespace zarcons::detail
