// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "zarcons/engine.hpp"
#include "zarcons/error.hpp"
#include "zarcons/expr.hpp"
#include "zarcons/extlab.hpp"

using namespace zarcons;
using nlohmann::json;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

const Field kQ = Field::rationals();

json load_golden(const char* name) {
  std::ifstream in(std::string(ZARCONS_GOLDEN_DIR) + "/" + name);
  return json::parse(in);
}

// Monic irreducibles over F_p of degree 1..max_deg by sieving out products.
// Coefficient vectors are low degree first.
std::vector<std::vector<int>> sieve_irreducibles(int p, int max_deg) {
  auto monic_of = [&](int deg, long code) {
    std::vector<int> c(static_cast<size_t>(deg) + 1, 0);
    for (int i = 0; i < deg; ++i, code /= p) c[static_cast<size_t>(i)] = static_cast<int>(code % p);
    c.back() = 1;
    return c;
  };
  auto code_of = [&](const std::vector<int>& c) {
    long code = 0;
    for (size_t i = c.size() - 1; i-- > 0;) code = code * p + c[i];
    return code;
  };
  std::vector<long> count(static_cast<size_t>(max_deg) + 1, 1);
  for (int d = 1; d <= max_deg; ++d) count[static_cast<size_t>(d)] = count[static_cast<size_t>(d) - 1] * p;
  std::vector<std::vector<bool>> reducible(static_cast<size_t>(max_deg) + 1);
  for (int d = 1; d <= max_deg; ++d) reducible[static_cast<size_t>(d)].assign(static_cast<size_t>(count[static_cast<size_t>(d)]), false);
  for (int d1 = 1; 2 * d1 <= max_deg; ++d1)
    for (int d2 = d1; d1 + d2 <= max_deg; ++d2)
      for (long a = 0; a < count[static_cast<size_t>(d1)]; ++a)
        for (long b = 0; b < count[static_cast<size_t>(d2)]; ++b) {
          const auto x = monic_of(d1, a), y = monic_of(d2, b);
          std::vector<int> prod(x.size() + y.size() - 1, 0);
          for (size_t i = 0; i < x.size(); ++i)
            for (size_t j = 0; j < y.size(); ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
          reducible[static_cast<size_t>(d1 + d2)][static_cast<size_t>(code_of(prod))] = true;
        }
  std::vector<std::vector<int>> out;
  for (int d = 1; d <= max_deg; ++d)
    for (long c = 0; c < count[static_cast<size_t>(d)]; ++c)
      if (!reducible[static_cast<size_t>(d)][static_cast<size_t>(c)]) out.push_back(monic_of(d, c));
  return out;
}

Poly poly_from(const Field& f, const std::vector<int>& c) {
  std::vector<Rat> rc;
  for (int x : c) rc.emplace_back(x);
  return Poly(f, rc);
}

Poly random_poly(std::mt19937_64& rng, const Field& f, int max_deg, int lo, int hi) {
  std::uniform_int_distribution<int> deg(0, max_deg), c(lo, hi);
  std::vector<Rat> cs;
  for (int i = deg(rng); i >= 0; --i) cs.emplace_back(c(rng));
  return Poly(f, cs);
}

RatFunc random_ratfunc(std::mt19937_64& rng, const Field& f, int max_deg, int lo, int hi) {
  Poly den = random_poly(rng, f, max_deg, lo, hi);
  while (den.is_zero()) den = random_poly(rng, f, max_deg, lo, hi);
  return RatFunc(random_poly(rng, f, max_deg, lo, hi), den);
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

Result resolver_oracle() {
  const Field f5 = Field::prime(5);
  const auto irr = sieve_irreducibles(5, 6);
  std::vector<ValuationPoint> places;
  for (const auto& c : irr) places.push_back(FinitePlace{poly_from(f5, c)});
  places.push_back(InfinitePlace{});
  Ambient amb = Ambient::parse("ZarKX:F5");
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> nin(0, 3), nout(0, 2);
  const auto start = std::chrono::steady_clock::now();
  long mismatches = 0, checks = 0;
  for (int i = 0; i < 500; ++i) {
    BasicSet s;
    for (int k = nin(rng); k > 0; --k) s.in.emplace_back(random_ratfunc(rng, f5, 4, 0, 4));
    for (int k = nout(rng); k > 0; --k) s.out.emplace_back(random_ratfunc(rng, f5, 4, 0, 4));
    s.canonicalize();
    ResolvedSet r = resolve(s, amb);
    mismatches += r.field_point != member(FieldPoint{}, s);
    for (const auto& v : places) {
      mismatches += member(v, r) != member(v, s);
      ++checks;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = mismatches == 0 && places.size() == 3410 && secs < 60;
  return {ok, "500 sets x " + std::to_string(places.size()) + " places (" + std::to_string(checks) +
                  " checks), " + std::to_string(mismatches) + " mismatches, " + fmt_seconds(secs)};
}

// Valid certificate whose set is exactly {target}.
bool isolates(const Ambient& amb, const ValuationPoint& target, const BasicSet& s) {
  if (certify_isolated(Certificate{target, s, amb}).status != CertStatus::Valid) return false;
  ResolvedSet r = resolve(s, amb);
  return r.mode == SetMode::Finite && !r.field_point && r.places.size() == 1 &&
         to_string(r.places[0]) == to_string(target);
}

Result kx_certificates() {
  int checked = 0, bad = 0;
  const Field f3 = Field::prime(3);
  Ambient k3 = Ambient::parse("ZarKX:F3");
  for (const auto& c : sieve_irreducibles(3, 3)) {
    Poly f = poly_from(f3, c);
    BasicSet s;
    s.out.emplace_back(RatFunc(Poly::constant(f3, Rat(1)), f));
    bad += !isolates(k3, FinitePlace{f}, s);
    ++checked;
  }
  // Over Q: X^2 + k and X^3 - k for non-cubes k have no rational root.
  Ambient kq = Ambient::parse("ZarKX:Q");
  std::vector<Poly> qs;
  for (int k = 1; k <= 10; ++k) qs.push_back(Poly(kQ, {Rat(k), Rat(0), Rat(1)}));
  for (int k : {2, 3, 4, 5, 6, 7, 9, 10, 11, 12}) qs.push_back(Poly(kQ, {Rat(-k), Rat(0), Rat(0), Rat(1)}));
  for (const auto& f : qs) {
    BasicSet s;
    s.out.emplace_back(RatFunc(Poly::constant(kQ, Rat(1)), f));
    bad += !isolates(kq, FinitePlace{f}, s);
    ++checked;
  }
  for (const Ambient& amb : {k3, kq}) {
    BasicSet s;
    s.out.emplace_back(RatFunc::variable(amb.field));
    bad += !isolates(amb, InfinitePlace{}, s);
    ++checked;
  }
  std::mt19937_64 rng(102);
  std::uniform_int_distribution<int> nin(0, 3);
  int field_bad = 0;
  for (int i = 0; i < 100; ++i) {
    const Ambient& amb = i % 2 ? k3 : kq;
    BasicSet s;
    for (int k = nin(rng); k > 0; --k) s.in.emplace_back(random_ratfunc(rng, amb.field, 3, -4, 4));
    s.canonicalize();
    CertResult r = certify_isolated(Certificate{FieldPoint{}, s, amb});
    bool ok = r.status == CertStatus::Invalid;
    if (ok && r.witness) ok = !std::holds_alternative<FieldPoint>(*r.witness) && member(*r.witness, s);
    field_bad += !ok;
  }
  return {bad == 0 && field_bad == 0, std::to_string(checked) + " certificates, " + std::to_string(bad) +
                                          " failures; 100 field-point sets, " + std::to_string(field_bad) + " not Invalid"};
}

Result noeth_table() {
  int rows = 0, bad = 0;
  for (const auto& row : load_golden("noeth_verdicts.json")) {
    auto a = make_adapter(row["adapter"].get<std::string>());
    Verdict v = row.contains("point")
                    ? decide_isolated_noetherian(parse_place(row["point"].get<std::string>(), a->base_field()), *a)
                    : decide_at_center(a->parse_prime(row["center"].get<std::string>()), *a);
    bool ok = to_string(v.status) == row["expect"].get<std::string>();
    if (ok && v.status == VerdictStatus::Isolated)
      ok = v.certificate && certify_isolated(*v.certificate).status == CertStatus::Valid;
    bad += !ok;
    ++rows;
  }
  // The table's sweeping statements, on wider samples.
  auto z = make_adapter("Z");
  for (long p : primes_up_to(200)) {
    bad += decide_isolated_noetherian(PAdicPlace{Int(p)}, *z).status != VerdictStatus::Isolated;
    ++rows;
  }
  for (const char* id : {"kxy_loc:Q", "kxy_loc:F3"}) {
    auto a = make_adapter(id);
    Ambient l2 = *ambient_of(*a);
    for (const auto& v : candidate_pool(l2, 30)) {
      if (std::holds_alternative<FieldPoint>(v)) continue;
      bad += decide_isolated_noetherian(v, *a).status != VerdictStatus::Isolated;
      ++rows;
    }
  }
  return {bad == 0, std::to_string(rows) + " verdicts, " + std::to_string(bad) + " disagreements"};
}

Result local2_exceptions() {
  struct Atom {
    const char* text;
    bool through_origin;
  };
  const std::vector<Atom> atoms = {{"x", true},         {"y", true},         {"y-x^2", true},  {"y^2-x^3", true},
                                   {"x+y", true},       {"y-x", true},       {"x-y^3", true},  {"y+x^2", true},
                                   {"y^2-x^3-x^2", true}, {"1+x", false},    {"1+y", false},   {"2+x*y", false},
                                   {"1+x^2+y", false}};
  Ambient amb = Ambient::parse("ZarLocal2:Q");
  std::vector<BivarPoly> polys;
  std::vector<std::string> names;
  for (const auto& a : atoms) {
    polys.push_back(parse_bivar_poly(a.text, kQ));
    names.push_back(a.through_origin ? to_string(make_ord(polys.back())) : "");
  }
  auto pool = candidate_pool(amb, 50);
  std::erase_if(pool, [](const ValuationPoint& v) { return std::holds_alternative<FieldPoint>(v); });
  // Brute force runs over the enumerated order places plus the atoms' own places.
  std::vector<ValuationPoint> probe = pool;
  for (size_t k = 0; k < atoms.size(); ++k)
    if (atoms[k].through_origin) probe.push_back(make_ord(polys[k]));
  std::mt19937_64 rng(104);
  std::uniform_int_distribution<int> ngen(1, 3), coin(0, 3), cst(1, 9);
  int bad = 0, probes = 0;
  for (int i = 0; i < 200; ++i) {
    BasicSet s;
    std::set<std::string> expected;
    for (int g = ngen(rng); g > 0; --g) {
      BivarPoly num = BivarPoly::constant(kQ, Rat(cst(rng))), den = BivarPoly::constant(kQ, Rat(1));
      for (size_t k = 0; k < atoms.size(); ++k) {
        const int c = coin(rng);
        if (c == 0) {
          den = den * polys[k];
          if (atoms[k].through_origin) expected.insert(names[k]);
        } else if (c == 1) {
          num = num * polys[k];
        }
      }
      s.in.emplace_back(BivarRatFunc(num, den));
    }
    s.canonicalize();
    std::set<std::string> got;
    std::vector<ValuationPoint> exc = field_point_exceptions(s, amb);
    for (const auto& v : exc) got.insert(to_string(v));
    bool ok = got == expected && member(FieldPoint{}, s);
    for (const auto& v : probe) {
      ok = ok && member(v, s) == !expected.count(to_string(v));
      ++probes;
    }
    bad += !ok;
  }
  return {bad == 0, "200 neighborhoods, " + std::to_string(probes) + " membership probes over " +
                        std::to_string(pool.size()) + " enumerated order places, " + std::to_string(bad) + " failures"};
}

bool in_vs(const Int& p, const QuadElem& s, const RatFunc& q) {
  return contains(make_eval(p, s), FieldElem(q));
}

Result conjugates() {
  std::mt19937_64 rng(105);
  std::uniform_int_distribution<int> small(-6, 6), pos(1, 4), pick(0, 2);
  const std::vector<long> radicands = {2, 3, 5, 6, 7, 10, 11, 13, -1, -2, -3, -5, -7};
  std::uniform_int_distribution<size_t> rad(0, radicands.size() - 1);
  const std::vector<long> primes = {2, 3, 5, 7, 11};
  int conj_pairs = 0, discrepancies = 0;
  while (conj_pairs < 20) {
    const Int d(radicands[rad(rng)]);
    const Int p(primes[static_cast<size_t>(pick(rng)) + static_cast<size_t>(conj_pairs % 3)]);
    if (prime_behavior(d, p) == PrimeBehavior::Split) continue;
    const QuadElem s(d, Rat(Int(small(rng)), Int(pos(rng))), Rat(Int(pos(rng)), Int(pos(rng))));
    const QuadElem t = s.conj();
    for (int k = 0; k < 200; ++k) {
      RatFunc q = random_ratfunc(rng, kQ, 3, -9, 9);
      discrepancies += in_vs(p, s, q) != in_vs(p, t, q);
    }
    ++conj_pairs;
  }
  int separated = 0, sep_bad = 0;
  while (separated < 20) {
    const Int p(primes[static_cast<size_t>(pick(rng))]);
    const QuadElem s(Int(radicands[rad(rng)]), Rat(small(rng)), Rat(pos(rng)));
    const QuadElem t = separated % 4 == 0 ? QuadElem(Rat(small(rng)))
                                          : QuadElem(Int(radicands[rad(rng)]), Rat(small(rng)), Rat(pos(rng)));
    if (minimal_polynomial(s) == minimal_polynomial(t)) continue;
    try {
      SeparatorResult r = build_separator(s, t, p);
      sep_bad += !(in_vs(p, s, r.q) && !in_vs(p, t, r.q));
    } catch (const Error&) {
      ++sep_bad;
    }
    ++separated;
  }
  return {discrepancies == 0 && sep_bad == 0,
          "20 conjugate pairs x 200 probes, " + std::to_string(discrepancies) + " discrepancies; 20 separators, " +
              std::to_string(sep_bad) + " failed"};
}

Result refuter() {
  std::mt19937_64 rng(106);
  std::uniform_int_distribution<int> ps(0, 2), h(-50, 50), hd(1, 50), n(1, 4);
  const std::vector<long> primes = {2, 3, 5};
  const auto start = std::chrono::steady_clock::now();
  int bad = 0;
  long max_n = 0;
  for (int i = 0; i < 50; ++i) {
    const Int p(primes[static_cast<size_t>(ps(rng))]);
    const Rat s(Int(h(rng)), Int(hd(rng)));
    const EvalPlace vs = make_eval(p, QuadElem(s));
    BasicSet set;
    for (int k = n(rng); k > 0; --k) {
      RatFunc g = random_ratfunc(rng, kQ, 2, -50, 50);
      (contains(vs, g) ? set.in : set.out).emplace_back(g);
    }
    try {
      RefutationResult r = refute_isolation(set, s, p, 40);
      const EvalPlace vt = make_eval(p, QuadElem(r.t));
      bool ok = r.modulus_exponent <= 40 && r.t != s;
      for (const auto& g : set.in) ok = ok && contains(vt, g);
      for (const auto& g : set.out) ok = ok && !contains(vt, g);
      bad += !ok;
      max_n = std::max(max_n, r.modulus_exponent);
    } catch (const Error&) {
      ++bad;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {bad == 0 && secs < 120, "50 neighborhoods, " + std::to_string(bad) + " failures, largest N " +
                                      std::to_string(max_n) + ", " + fmt_seconds(secs)};
}

Result homeo_table() {
  int rows = 0, bad = 0;
  for (const auto& row : load_golden("homeo_table.json")) {
    auto r = classify_homeo(*make_adapter(row["a"].get<std::string>()), *make_adapter(row["b"].get<std::string>()));
    bad += !(to_string(r.a) == row["class_a"].get<std::string>() && to_string(r.b) == row["class_b"].get<std::string>() &&
             r.equal == row["equal"].get<bool>());
    ++rows;
  }
  return {bad == 0 && rows == 6, std::to_string(rows) + " pairs, " + std::to_string(bad) + " mismatches"};
}

std::set<long> prime_factors_below(long n, long bound) {
  std::set<long> out;
  n = std::labs(n);
  for (long q = 2; q <= n && q < bound; ++q)
    if (n % q == 0) {
      out.insert(q);
      while (n % q == 0) n /= q;
    }
  return out;
}

Result spec_clopens() {
  Ambient sz = Ambient::parse("SpecZ");
  std::vector<long> primes;
  for (long q = 2; q < 1000; ++q) {
    bool prime = true;
    for (long r = 2; r * r <= q && prime; ++r) prime = q % r != 0;
    if (prime) primes.push_back(q);
  }
  std::vector<ValuationPoint> points;
  for (long q : primes) points.push_back(sz.parse_point("(" + std::to_string(q) + ")"));
  std::mt19937_64 rng(108);
  std::uniform_int_distribution<int> nideal(0, 3), ngen(1, 3), g(-997, 997), vzero(0, 4);
  int sets = 0, bad = 0;
  for (; sets < 200; ++sets) {
    std::vector<std::vector<FieldElem>> ideals;
    std::set<long> expected;
    for (int i = nideal(rng); i > 0; --i) {
      std::vector<FieldElem> ideal;
      long gcd = 0;
      for (int k = ngen(rng); k > 0; --k) {
        long x = g(rng);
        if (x == 0) x = 1;
        ideal.emplace_back(Rat(x));
        gcd = std::gcd(gcd, x);
      }
      ideals.push_back(ideal);
      auto f = prime_factors_below(gcd, 1000);
      expected.insert(f.begin(), f.end());
    }
    // V(0) is the whole space and may be added freely.
    std::vector<FieldElem> v_gens;
    if (vzero(rng) == 0) v_gens.emplace_back(Rat(0));
    BasicSet s = spec_basic(sz, v_gens, ideals);
    ResolvedSet r = resolve(s, sz);
    bool ok = r.mode == SetMode::Cofinite && r.field_point && member(FieldPoint{}, s);
    std::set<long> got;
    for (const auto& v : r.places) got.insert(std::get<PAdicPlace>(v).p.get_si());
    ok = ok && got == expected;
    for (size_t k = 0; k < primes.size(); ++k)
      ok = ok && member(points[k], s) == !expected.count(primes[k]) && member(points[k], r) == member(points[k], s);
    bad += !ok;
  }
  return {bad == 0, std::to_string(sets) + " clopens containing (0) x " + std::to_string(primes.size()) +
                        " primes, " + std::to_string(bad) + " failures"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria = {
      {"resolver agrees with pointwise membership over F5(X)", resolver_oracle},
      {"isolation certificates in Zar(K(X)|K)", kx_certificates},
      {"Noetherian verdict table", noeth_table},
      {"field-point neighborhoods in k[x,y]_(x,y)", local2_exceptions},
      {"conjugate extensions agree, others separate", conjugates},
      {"refuter for est(Q(X)|Z_(p))", refuter},
      {"homeomorphism classifier table", homeo_table},
      {"Spec(Z) clopens containing (0)", spec_clopens},
  };
  int failed = 0, index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Result r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failed += !r.pass;
    std::printf("%s [%d] %s: %s\n", r.pass ? "PASS" : "FAIL", index, name, r.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
