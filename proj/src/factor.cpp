#include "zarcons/factor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <utility>

#include "fp_poly.hpp"
#include "zarcons/error.hpp"

namespace zarcons {

namespace {

using detail::FpPoly;

// ---- F_p --------------------------------------------------------------------

// x^(p^k) mod f by repeated p-th powering.
FpPoly frobenius_power(const FpPoly& f, int k) {
  FpPoly acc = detail::fp_mod(detail::fp_x(f.p), f);
  for (int i = 0; i < k; ++i) acc = detail::fp_powmod(acc, Int(f.p), f);
  return acc;
}

bool fp_is_irreducible(const FpPoly& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const FpPoly x = detail::fp_x(f.p);
  if (!detail::fp_sub(frobenius_power(f, n), detail::fp_mod(x, f)).is_zero()) return false;
  for (const Int& q : prime_divisors(Int(n))) {
    const int k = n / static_cast<int>(q.get_si());
    FpPoly g = detail::fp_gcd(f, detail::fp_sub(frobenius_power(f, k), x));
    if (g.degree() > 0) return false;
  }
  return true;
}

// p-th root of a polynomial whose derivative vanishes.
FpPoly fp_pth_root(const FpPoly& f) {
  FpPoly out{f.p, {}};
  for (std::size_t i = 0; i < f.c.size(); i += static_cast<std::size_t>(f.p)) out.c.push_back(f.c[i]);
  out.trim();
  return out;
}

// Squarefree decomposition: monic f = prod g_i^i.
void fp_squarefree(const FpPoly& f, long scale, std::map<long, std::vector<FpPoly>>& out) {
  if (f.degree() < 1) return;
  FpPoly df = detail::fp_derivative(f);
  if (df.is_zero()) {
    fp_squarefree(fp_pth_root(f), scale * f.p, out);
    return;
  }
  FpPoly c = detail::fp_gcd(f, df);
  FpPoly w;
  detail::fp_divmod(f, c, &w, nullptr);
  long i = 1;
  while (w.degree() > 0) {
    FpPoly y = detail::fp_gcd(w, c);
    FpPoly z;
    detail::fp_divmod(w, y, &z, nullptr);
    if (z.degree() > 0) out[i * scale].push_back(detail::fp_monic(z));
    w = y;
    detail::fp_divmod(c, y, &c, nullptr);
    ++i;
  }
  if (c.degree() > 0) fp_squarefree(fp_pth_root(c), scale * f.p, out);
}

// Equal-degree splitting of a squarefree product of degree-d irreducibles.
void fp_equal_degree(const FpPoly& f, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (f.degree() == d) {
    out.push_back(detail::fp_monic(f));
    return;
  }
  const long p = f.p;
  std::uniform_int_distribution<long> coeff(0, p - 1);
  Int exponent;
  mpz_ui_pow_ui(exponent.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  exponent = (exponent - 1) / 2;
  while (true) {
    FpPoly a{p, {}};
    for (int i = 0; i < f.degree(); ++i) a.c.push_back(coeff(rng));
    a.trim();
    if (a.degree() < 1) continue;
    FpPoly g = detail::fp_gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      FpPoly h;
      detail::fp_divmod(f, g, &h, nullptr);
      fp_equal_degree(g, d, rng, out);
      fp_equal_degree(h, d, rng, out);
      return;
    }
    FpPoly b;
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      b = detail::fp_mod(a, f);
      FpPoly term = b;
      for (int i = 1; i < d; ++i) {
        term = detail::fp_mulmod(term, term, f);
        b = detail::fp_add(b, term);
      }
    } else {
      b = detail::fp_sub(detail::fp_powmod(a, exponent, f), detail::fp_const(p, 1));
    }
    g = detail::fp_gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      FpPoly h;
      detail::fp_divmod(f, g, &h, nullptr);
      fp_equal_degree(g, d, rng, out);
      fp_equal_degree(h, d, rng, out);
      return;
    }
  }
}

// Distinct-degree then equal-degree factorization of a monic squarefree polynomial.
std::vector<FpPoly> fp_factor_squarefree(FpPoly f) {
  std::vector<FpPoly> out;
  std::mt19937_64 rng(0x5eed + static_cast<unsigned long>(f.degree()));
  const FpPoly x = detail::fp_x(f.p);
  FpPoly h = detail::fp_mod(x, f);
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = detail::fp_powmod(h, Int(f.p), f);
    FpPoly g = detail::fp_gcd(f, detail::fp_sub(h, x));
    if (g.degree() > 0) {
      fp_equal_degree(g, d, rng, out);
      detail::fp_divmod(f, g, &f, nullptr);
      h = detail::fp_mod(h, f);
    }
  }
  if (f.degree() > 0) out.push_back(detail::fp_monic(f));
  return out;
}

std::vector<Factor> fp_factor(const Poly& f) {
  std::map<long, std::vector<FpPoly>> parts;
  fp_squarefree(detail::fp_monic(detail::from_poly(f)), 1, parts);
  std::vector<Factor> out;
  for (const auto& [mult, polys] : parts)
    for (const FpPoly& g : polys)
      for (const FpPoly& irr : fp_factor_squarefree(g)) out.push_back({detail::to_poly(irr), mult});
  return out;
}

// ---- Q ----------------------------------------------------------------------

// Integer primitive associate of a nonzero polynomial over Q.
std::vector<Int> primitive_integer(const Poly& f) {
  Int l = 1;
  for (const Rat& c : f.coeffs()) l = lcm(l, c.den());
  std::vector<Int> out;
  Int g = 0;
  for (const Rat& c : f.coeffs()) {
    Int v = c.num() * (l / c.den());
    out.push_back(v);
    g = gcd(g, v);
  }
  if (f.lead().sign() < 0) g = -g;
  for (Int& v : out) v /= g;
  return out;
}

std::vector<Int> positive_divisors(const Int& n) {
  std::vector<std::pair<Int, long>> pf;
  Int rest = abs(n);
  for (const Int& q : prime_divisors(rest)) {
    long e = multiplicity_of(q, rest);
    pf.push_back({q, e});
  }
  std::vector<Int> divs{1};
  for (const auto& [q, e] : pf) {
    const std::size_t base = divs.size();
    Int power = 1;
    for (long k = 1; k <= e; ++k) {
      power *= q;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
    }
    if (divs.size() > 200000) fail(ErrorKind::UnsupportedFactorization, "too many candidate rational roots");
  }
  return divs;
}

// ---- Zassenhaus: factor mod p, lift p-adically, recombine ------------------

using ZPoly = std::vector<Int>;  // integer coefficients, ascending

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  ZPoly out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

FpPoly reduce(const ZPoly& a, long p) {
  FpPoly out{p, {}};
  for (const Int& c : a) out.c.push_back(mod_floor(c, Int(p)).get_si());
  out.trim();
  return out;
}

// u with u·b ≡ 1 mod m over F_p, for coprime b and m.
FpPoly fp_inverse_mod(const FpPoly& b, const FpPoly& m) {
  FpPoly r0 = m, r1 = detail::fp_mod(b, m), s0{m.p, {}}, s1 = detail::fp_const(m.p, 1);
  while (!r1.is_zero()) {
    FpPoly q, r;
    detail::fp_divmod(r0, r1, &q, &r);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, detail::fp_sub(s0, detail::fp_mul(q, s1)));
  }
  return detail::fp_mod(detail::fp_scale(s0, inverse_mod(r0.lead(), m.p)), m);
}

Poly poly_of(const ZPoly& a) {
  std::vector<Rat> cs(a.begin(), a.end());
  return Poly(Field::rationals(), std::move(cs));
}

ZPoly primitive(ZPoly a) {
  Int g = 0;
  for (const Int& c : a) g = gcd(g, c);
  if (a.back() < 0) g = -g;
  for (Int& c : a) c /= g;
  return a;
}

// Monic irreducible factors of a squarefree primitive integer polynomial.
void zassenhaus(const ZPoly& poly, std::vector<Poly>& out) {
  ZPoly G = poly;
  const int n = static_cast<int>(G.size()) - 1;
  // A prime keeping the degree and squarefreeness, with few modular factors.
  long p = 0;
  std::vector<FpPoly> mods;
  int tried = 0;
  for (long q : primes_up_to(1000)) {
    if (tried >= 6) break;
    if (mod_floor(G.back(), Int(q)) == 0) continue;
    const FpPoly gq = reduce(G, q);
    if (detail::fp_gcd(gq, detail::fp_derivative(gq)).degree() > 0) continue;
    ++tried;
    std::vector<FpPoly> fs = fp_factor_squarefree(detail::fp_monic(gq));
    if (p == 0 || fs.size() < mods.size()) {
      p = q;
      mods = std::move(fs);
    }
    if (mods.size() == 1) break;
  }
  if (p == 0) fail(ErrorKind::UnsupportedFactorization, "no usable prime for " + poly_of(G).to_string());
  if (mods.size() == 1) {
    out.push_back(poly_of(G).monic());
    return;
  }
  if (mods.size() > 16)
    fail(ErrorKind::UnsupportedFactorization, "too many modular factors for " + poly_of(G).to_string());

  // Coefficients of lc·(any factor made monic) stay below |lc|·2^n·(n+1)·max|G|.
  Int height = 0;
  for (const Int& c : G) height = std::max(height, Int(abs(c)));
  const Int lc = G.back();
  const Int bound = 2 * abs(lc) * (Int(1) << n) * (n + 1) * height;
  Int modulus = p;
  long k = 1;
  while (modulus <= bound) {
    modulus *= p;
    ++k;
  }

  const std::size_t r = mods.size();
  FpPoly prod_all = detail::fp_const(p, 1);
  for (const FpPoly& g : mods) prod_all = detail::fp_mul(prod_all, g);
  std::vector<FpPoly> bez(r);
  for (std::size_t i = 0; i < r; ++i) {
    FpPoly q, rem;
    detail::fp_divmod(prod_all, mods[i], &q, &rem);
    bez[i] = fp_inverse_mod(q, mods[i]);
  }
  const long lc_inv = inverse_mod(mod_floor(lc, Int(p)).get_si(), p);
  std::vector<ZPoly> lifted(r);
  for (std::size_t i = 0; i < r; ++i) lifted[i].assign(mods[i].c.begin(), mods[i].c.end());
  Int pj = p;
  for (long j = 1; j < k; ++j, pj *= p) {
    ZPoly prod{lc};
    for (const ZPoly& g : lifted) prod = zmul(prod, g);
    ZPoly err(G.size(), Int(0));
    for (std::size_t i = 0; i < G.size(); ++i) err[i] = (G[i] - prod[i]) / pj;
    const FpPoly e = detail::fp_scale(reduce(err, p), lc_inv);
    if (e.is_zero()) continue;
    for (std::size_t i = 0; i < r; ++i) {
      const FpPoly d = detail::fp_mod(detail::fp_mul(e, bez[i]), mods[i]);
      for (std::size_t c = 0; c < d.c.size(); ++c) lifted[i][c] += pj * d.c[c];
    }
  }

  // Recombination over subsets of increasing size.
  const Int half = modulus / 2;
  auto symmetric = [&](ZPoly a) {
    for (Int& c : a) {
      c = mod_floor(c, modulus);
      if (c > half) c -= modulus;
    }
    return a;
  };
  std::vector<std::size_t> live(r);
  for (std::size_t i = 0; i < r; ++i) live[i] = i;
  for (std::size_t size = 1; 2 * size <= live.size();) {
    bool found = false;
    std::vector<bool> mask(live.size(), false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(size), true);
    do {
      ZPoly cand{G.back()};
      for (std::size_t i = 0; i < live.size(); ++i)
        if (mask[i]) cand = zmul(cand, lifted[live[i]]);
      cand = primitive(symmetric(cand));
      const Poly h = poly_of(cand);
      const Poly whole = poly_of(G);
      if (!(whole % h).is_zero()) continue;
      out.push_back(h.monic());
      G = primitive_integer(whole / h);
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < live.size(); ++i)
        if (!mask[i]) rest.push_back(live[i]);
      live = std::move(rest);
      found = true;
      break;
    } while (std::prev_permutation(mask.begin(), mask.end()));
    if (!found) ++size;
  }
  if (G.size() > 1) out.push_back(poly_of(G).monic());
}

bool is_asserted(const Poly& g, const std::vector<Poly>& asserted) {
  for (const Poly& a : asserted)
    if (a.monic() == g.monic()) return true;
  return false;
}

// Splits a squarefree polynomial over Q into irreducibles under the policy.
void q_split_squarefree(Poly g, const std::vector<Poly>& asserted, std::vector<Poly>& out) {
  g = g.monic();
  for (const Poly& a : asserted) {
    if (a.degree() < 1 || !(a.field() == g.field())) continue;
    if (g.degree() >= a.degree() && (g % a).is_zero()) {
      out.push_back(a.monic());
      g = g / a;
      g = g.monic();
    }
  }
  if (g.degree() < 1) return;
  for (const Rat& r : rational_roots(g)) {
    Poly lin = Poly::linear(g.field(), r);
    out.push_back(lin);
    g = (g / lin).monic();
  }
  if (g.degree() < 1) return;
  if (g.degree() <= 3 || is_asserted(g, asserted)) {
    out.push_back(g);
    return;
  }
  zassenhaus(primitive_integer(g), out);
}

std::vector<Factor> q_factor(const Poly& f, const std::vector<Poly>& asserted) {
  // Yun's squarefree decomposition
  std::vector<Factor> out;
  Poly a = f.monic();
  Poly b = a.derivative();
  Poly c = gcd(a, b);
  Poly w = a / c;
  Poly y = b / c;
  long i = 1;
  while (w.degree() > 0) {
    Poly z = y - w.derivative();
    Poly g = gcd(w, z);
    std::vector<Poly> pieces;
    q_split_squarefree(g, asserted, pieces);
    for (Poly& piece : pieces) out.push_back({std::move(piece), i});
    w = w / g;
    y = z / g;
    ++i;
  }
  return out;
}

}  // namespace

std::vector<Rat> rational_roots(const Poly& f) {
  if (f.is_zero()) fail(ErrorKind::InvalidInput, "roots of the zero polynomial");
  if (!f.field().is_rational()) fail(ErrorKind::InvalidInput, "rational_roots expects a polynomial over Q");
  std::set<Rat> roots;
  Poly g = f;
  int shift = 0;
  while (g.degree() > 0 && g.coeff(0).is_zero()) {
    ++shift;
    g = g / Poly::variable(g.field());
  }
  if (shift > 0) roots.insert(Rat(0));
  if (g.degree() >= 1) {
    const std::vector<Int> zc = primitive_integer(g);
    const std::vector<Int> nums = positive_divisors(zc.front());
    const std::vector<Int> dens = positive_divisors(zc.back());
    for (const Int& n : nums)
      for (const Int& d : dens)
        for (int sign : {1, -1}) {
          Rat r(sign * n, d);
          if (roots.count(r) == 0 && g.eval(r).is_zero()) roots.insert(r);
        }
  }
  return {roots.begin(), roots.end()};
}

std::vector<Factor> factor(const Poly& f, const std::vector<Poly>& asserted) {
  if (f.is_zero()) fail(ErrorKind::InvalidInput, "factor of the zero polynomial");
  std::vector<Factor> out = f.field().is_rational() ? q_factor(f, asserted) : fp_factor(f);
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.f == b.f) return a.mult < b.mult;
    return canonical_less(a.f, b.f);
  });
  return out;
}

bool is_irreducible(const Poly& f, const std::vector<Poly>& asserted) {
  if (f.degree() < 1) return false;
  if (!f.field().is_rational()) return fp_is_irreducible(detail::fp_monic(detail::from_poly(f)));
  if (f.degree() == 1 || is_asserted(f, asserted)) return true;
  std::vector<Factor> fs = factor(f, asserted);
  return fs.size() == 1 && fs.front().mult == 1;
}

std::vector<Poly> irreducibles_of_degree(const Field& fp, int degree) {
  if (fp.is_rational()) fail(ErrorKind::InvalidInput, "irreducible enumeration needs a finite field");
  if (degree < 1) return {};
  const long p = fp.characteristic();
  long count = 1;
  for (int i = 0; i < degree; ++i) {
    count *= p;
    if (count > 50'000'000) fail(ErrorKind::BudgetExceeded, "irreducible enumeration too large");
  }
  std::vector<Poly> out;
  FpPoly cand{p, std::vector<long>(static_cast<std::size_t>(degree) + 1, 0)};
  for (long idx = 0; idx < count; ++idx) {
    long rest = idx;
    for (int i = 0; i < degree; ++i) {
      cand.c[static_cast<std::size_t>(i)] = rest % p;
      rest /= p;
    }
    cand.c.back() = 1;
    if (degree > 1 && cand.c[0] == 0) continue;
    if (fp_is_irreducible(cand)) out.push_back(detail::to_poly(cand));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Poly> irreducibles_up_to(const Field& fp, int bound) {
  std::vector<Poly> out;
  for (int d = 1; d <= bound; ++d) {
    std::vector<Poly> layer = irreducibles_of_degree(fp, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace zarcons
