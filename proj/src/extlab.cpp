#include "zarcons/extlab.hpp"

#include "zarcons/error.hpp"

namespace zarcons {

namespace {

long floor_half(long v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

EvalPlace eval_place(const Int& p, const Algebraic& s, int root) {
  bool split = !s.is_rational() && prime_behavior(s.d(), p) == PrimeBehavior::Split;
  return EvalPlace{p, s, split ? root : 1};
}

SeparatorResult certify(RatFunc q, Rat c, const Algebraic& s, const Algebraic& t, const Int& p, int root) {
  SeparatorResult r{std::move(q), std::move(c)};
  auto qs = eval_at(r.q, s);
  auto qt = eval_at(r.q, t);
  if (!qs || !qt) fail(ErrorKind::Unsupported, "separator has a pole at an input");
  Valuation vs = quad_half_val(*qs, p, root);
  Valuation vt = quad_half_val(*qt, p, root);
  r.s_zero = vs.is_infinite();
  r.half_val_s = r.s_zero ? 0 : vs.value();
  r.half_val_t = vt.is_infinite() ? 0 : vt.value();
  bool in_s = contains(eval_place(p, s, root), FieldElem(r.q));
  bool in_t = contains(eval_place(p, t, root), FieldElem(r.q));
  if (!in_s || in_t || vt >= Valuation(0))
    fail(ErrorKind::Unsupported, "separator " + r.q.to_string() + " failed re-verification");
  return r;
}

}  // namespace

Poly minimal_polynomial(const Algebraic& s) { return s.min_poly(); }

Int common_radicand(const Algebraic& s, const Algebraic& t) {
  if (s.is_rational()) return t.is_rational() ? Int(0) : t.d();
  if (!t.is_rational() && s.d() != t.d()) fail(ErrorKind::InvalidInput, "elements of different quadratic fields");
  return s.d();
}

bool restricted_equal(const Algebraic& s, const Algebraic& t, const Int& p) {
  require_prime(p);
  if (!(minimal_polynomial(s) == minimal_polynomial(t))) return false;
  if (s == t || s.is_rational()) return true;
  return prime_behavior(s.d(), p) != PrimeBehavior::Split;
}

SeparatorResult build_separator(const Algebraic& s, const Algebraic& t, const Int& p, int root) {
  if (restricted_equal(s, t, p))
    fail(ErrorKind::ConjugateInputs, "V_s and V_t coincide for s = " + s.to_string() + ", t = " + t.to_string());
  const Field q_field = Field::rationals();
  Poly ps = minimal_polynomial(s);
  if (!(ps == minimal_polynomial(t))) {
    // q = p_s / c with v(c) > u(p_s(t)).
    QuadElem at_t = *eval_at(RatFunc(ps), t);
    long hv = quad_half_val(at_t, p, root).value();
    Rat c = Rat(p).pow(floor_half(hv) + 1);
    return certify(RatFunc(ps.scaled(c.inverse())), c, s, t, p, root);
  }
  // Split conjugates: the embedding sends s and t to different p-adic numbers,
  // and a rational approximation a of s's image separates them.
  long m = padic_val(Rat(2) * s.b(), p).value() + 1;
  long vb = padic_val(s.b(), p).value();
  long k = std::max<long>(m - vb + 2, 2);
  Int r = padic_sqrt(s.d(), p, k, root);
  Rat a = s.a() + s.b() * Rat(r);
  Poly lin = Poly::linear(q_field, a);
  Rat c = Rat(p).pow(m);
  return certify(RatFunc(lin.scaled(c.inverse())), c, s, t, p, root);
}

RefutationResult refute_isolation(const BasicSet& set, const Rat& center, const Int& p, long max_n) {
  require_prime(p);
  EvalPlace vs{p, QuadElem(center), 1};
  if (!member(vs, set))
    fail(ErrorKind::PreconditionViolated, "V_s is not a member of the set for s = " + center.to_string());
  RefutationResult res;
  for (const auto& g : set.in) res.in_s.push_back(contains(vs, g));
  for (const auto& g : set.out) res.out_s.push_back(contains(vs, g));
  Int pn = 1;
  for (long n = 1; n <= max_n; ++n) {
    pn *= p;
    for (Int k = 1; k < p; ++k) {
      Rat t = center + Rat(Int(k * pn));
      EvalPlace vt{p, QuadElem(t), 1};
      std::vector<bool> in_t, out_t;
      for (const auto& g : set.in) in_t.push_back(contains(vt, g));
      for (const auto& g : set.out) out_t.push_back(contains(vt, g));
      if (in_t == res.in_s && out_t == res.out_s) {
        res.t = t;
        res.modulus_exponent = n;
        res.k = k.get_si();
        res.in_t = std::move(in_t);
        res.out_t = std::move(out_t);
        return res;
      }
    }
  }
  fail(ErrorKind::BudgetExceeded, "no t found with N <= " + std::to_string(max_n));
}

}  // namespace zarcons
