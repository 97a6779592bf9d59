#include "zarcons/places.hpp"

#include <string>

#include "zarcons/error.hpp"
#include "zarcons/expr.hpp"
#include "zarcons/factor.hpp"

namespace zarcons {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

int rank(const ValuationPoint& v) { return static_cast<int>(v.index()); }

ResiduePoint to_residue(const ValuationPoint& v) {
  if (std::holds_alternative<FieldPoint>(v)) return FieldPoint{};
  if (const auto* f = std::get_if<FinitePlace>(&v)) return *f;
  if (std::holds_alternative<InfinitePlace>(v)) return InfinitePlace{};
  fail(ErrorKind::InvalidInput, "composite residue must be field, fin:<poly in Y> or inf");
}

ValuationPoint from_residue(const ResiduePoint& r) {
  return std::visit([](const auto& x) -> ValuationPoint { return x; }, r);
}

// Orders rationals by height, then value.
int compare_rat_height(const Rat& a, const Rat& b) {
  const Int ha = std::max(Int(abs(a.num())), a.den()), hb = std::max(Int(abs(b.num())), b.den());
  if (ha != hb) return ha < hb ? -1 : 1;
  if (a == b) return 0;
  return a < b ? -1 : 1;
}

int compare_quad(const QuadElem& a, const QuadElem& b) {
  if (a.is_rational() != b.is_rational()) return a.is_rational() ? -1 : 1;
  if (!a.is_rational() && a.d() != b.d()) return a.d() < b.d() ? -1 : 1;
  if (int c = compare_rat_height(a.a(), b.a())) return c;
  return compare_rat_height(a.b(), b.b());
}

}  // namespace

PAdicPlace make_padic(const Int& p) {
  require_prime(p, "p-adic place");
  return PAdicPlace{p};
}

FinitePlace make_finite(const Poly& f, const std::vector<Poly>& asserted) {
  if (f.degree() < 1) fail(ErrorKind::InvalidInput, "finite place needs a nonconstant generator");
  if (!is_irreducible(f, asserted)) fail(ErrorKind::InvalidInput, "finite place generator is reducible: " + f.to_string());
  return FinitePlace{f.monic()};
}

OrdPlace make_ord(const BivarPoly& f, const std::vector<BivarPoly>& atoms) {
  if (f.is_constant()) fail(ErrorKind::InvalidInput, "ordf needs a nonconstant generator");
  if (!f.eval(Rat(0), Rat(0)).is_zero())
    fail(ErrorKind::InvalidInput, "ordf generator must vanish at the origin: " + f.to_string());
  const BivarPoly n = f.normalized();
  std::vector<BivarFactor> fs = bivar_factor(n, atoms);
  if (fs.size() != 1 || fs.front().mult != 1)
    fail(ErrorKind::InvalidInput, "ordf generator is reducible: " + f.to_string());
  return OrdPlace{n};
}

EvalPlace make_eval(const Int& p, const QuadElem& s, int root) {
  require_prime(p, "evaluation place");
  int r = 1;
  if (!s.is_rational() && prime_behavior(s.d(), p) == PrimeBehavior::Split) r = root < 0 ? -1 : 1;
  return EvalPlace{p, s, r};
}

ValuationPoint parse_place(std::string_view text, const Field& field) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "field") return FieldPoint{};
  if (text == "inf") return InfinitePlace{};
  if (starts_with(text, "p:")) {
    Rat p = parse_rational(text.substr(2));
    if (!p.is_integer()) fail(ErrorKind::InvalidInput, "p-adic place needs an integer prime");
    return make_padic(p.num());
  }
  if (starts_with(text, "fin:")) {
    ParseHints hints;
    Poly f = parse_poly(text.substr(4), field, 'X', &hints);
    return make_finite(f, hints.irreducible);
  }
  if (starts_with(text, "ordf:")) {
    ParseHints hints;
    BivarPoly f = parse_bivar_poly(text.substr(5), field, &hints);
    return make_ord(f, hints.atoms);
  }
  if (starts_with(text, "comp:")) {
    std::string_view inner = text.substr(5);
    if (starts_with(inner, "fin:")) {
      ParseHints hints;
      Poly f = parse_poly(inner.substr(4), field, 'Y', &hints);
      return CompositePlace{make_finite(f, hints.irreducible)};
    }
    return CompositePlace{to_residue(parse_place(inner, field))};
  }
  if (starts_with(text, "eval:")) {
    std::string_view rest = text.substr(5);
    std::optional<Int> p;
    std::optional<QuadElem> s;
    int root = 1;
    while (!rest.empty()) {
      const std::size_t comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      if (starts_with(item, "p=")) {
        Rat v = parse_rational(item.substr(2));
        if (!v.is_integer()) fail(ErrorKind::InvalidInput, "eval place needs an integer prime");
        p = v.num();
      } else if (starts_with(item, "s=")) {
        s = parse_quad(item.substr(2));
      } else if (item == "root=+") {
        root = 1;
      } else if (item == "root=-") {
        root = -1;
      } else {
        fail(ErrorKind::InvalidInput, "unknown eval place field: " + std::string(item));
      }
    }
    if (!p || !s) fail(ErrorKind::InvalidInput, "eval place needs p=<prime> and s=<element>");
    return make_eval(*p, *s, root);
  }
  fail(ErrorKind::InvalidInput, "unknown place: " + std::string(text));
}

std::string to_string(const ValuationPoint& v) {
  return std::visit(overloaded{
                        [](const FieldPoint&) -> std::string { return "field"; },
                        [](const PAdicPlace& x) -> std::string { return "p:" + x.p.get_str(); },
                        [](const FinitePlace& x) -> std::string { return "fin:" + x.f.to_string("X"); },
                        [](const InfinitePlace&) -> std::string { return "inf"; },
                        [](const OrdPlace& x) -> std::string { return "ordf:" + x.f.to_string(); },
                        [](const CompositePlace& x) -> std::string {
                          if (const auto* f = std::get_if<FinitePlace>(&x.residue))
                            return "comp:fin:" + f->f.to_string("Y");
                          return "comp:" + to_string(from_residue(x.residue));
                        },
                        [](const EvalPlace& x) -> std::string {
                          std::string out = "eval:p=" + x.p.get_str() + ",s=" + x.s.to_string();
                          if (!x.s.is_rational() && prime_behavior(x.s.d(), x.p) == PrimeBehavior::Split)
                            out += x.root < 0 ? ",root=-" : ",root=+";
                          return out;
                        },
                    },
                    v);
}

std::string to_string(const FieldElem& e, bool capital_vars) {
  return std::visit(overloaded{
                        [](const Rat& r) { return r.to_string(); },
                        [](const RatFunc& f) { return f.to_string("X"); },
                        [capital_vars](const BivarRatFunc& f) {
                          return capital_vars ? f.to_string("X", "Y") : f.to_string("x", "y");
                        },
                    },
                    e);
}

bool place_less(const ValuationPoint& a, const ValuationPoint& b) {
  if (rank(a) != rank(b)) return rank(a) < rank(b);
  return std::visit(
      overloaded{
          [](const PAdicPlace& x, const PAdicPlace& y) { return x.p < y.p; },
          [](const FinitePlace& x, const FinitePlace& y) { return canonical_less(x.f, y.f); },
          [](const OrdPlace& x, const OrdPlace& y) { return canonical_less(x.f, y.f); },
          [](const CompositePlace& x, const CompositePlace& y) {
            return place_less(from_residue(x.residue), from_residue(y.residue));
          },
          [](const EvalPlace& x, const EvalPlace& y) {
            if (x.p != y.p) return x.p < y.p;
            if (int c = compare_quad(x.s, y.s)) return c < 0;
            return x.root > y.root;
          },
          [](const auto&, const auto&) { return false; },
      },
      a, b);
}

namespace {

[[noreturn]] void mismatch(const ValuationPoint& v, const FieldElem& phi) {
  fail(ErrorKind::InvalidInput, "element " + to_string(phi) + " does not live in the field of " + to_string(v));
}

const RatFunc& as_ratfunc(const ValuationPoint& v, const FieldElem& phi) {
  if (const auto* f = std::get_if<RatFunc>(&phi)) return *f;
  mismatch(v, phi);
}

bool residue_contains(const ResiduePoint& w, const RatFunc& r) {
  return std::visit(overloaded{
                        [](const FieldPoint&) { return true; },
                        [&r](const FinitePlace& f) {
                          if (!(f.f.field() == r.field())) fail(ErrorKind::InvalidInput, "residue field mismatch");
                          return ord_at(r, f.f) >= Valuation(0);
                        },
                        [&r](const InfinitePlace&) { return ord_infinity(r) >= Valuation(0); },
                    },
                    w);
}

}  // namespace

bool contains(const ValuationPoint& v, const FieldElem& phi) {
  return std::visit(
      overloaded{
          [](const FieldPoint&) { return true; },
          [&](const PAdicPlace& x) {
            const auto* r = std::get_if<Rat>(&phi);
            if (!r) mismatch(v, phi);
            return padic_val(*r, x.p) >= Valuation(0);
          },
          [&](const FinitePlace& x) {
            const RatFunc& f = as_ratfunc(v, phi);
            if (!(f.field() == x.f.field())) mismatch(v, phi);
            return ord_at(f, x.f) >= Valuation(0);
          },
          [&](const InfinitePlace&) { return ord_infinity(as_ratfunc(v, phi)) >= Valuation(0); },
          [&](const OrdPlace& x) {
            const auto* f = std::get_if<BivarRatFunc>(&phi);
            if (!f || !(f->field() == x.f.field())) mismatch(v, phi);
            if (f->is_zero()) return true;
            return ord_bivar(f->den(), x.f) == 0 || ord_along(*f, x.f) >= Valuation(0);
          },
          [&](const CompositePlace& x) {
            const auto* f = std::get_if<BivarRatFunc>(&phi);
            if (!f) mismatch(v, phi);
            const Valuation k = ord_x(*f);
            if (k > Valuation(0)) return true;
            if (k < Valuation(0)) return false;
            return residue_contains(x.residue, leading_x_coefficient(*f));
          },
          [&](const EvalPlace& x) {
            const RatFunc& f = as_ratfunc(v, phi);
            if (!f.field().is_rational()) mismatch(v, phi);
            if (x.s.is_rational()) {
              const std::optional<Rat> val = eval_at(f, x.s.a());
              return val.has_value() && padic_val(*val, x.p) >= Valuation(0);
            }
            const std::optional<QuadElem> val = eval_at(f, x.s);
            return val.has_value() && quad_half_val(*val, x.p, x.root) >= Valuation(0);
          },
      },
      v);
}

ValuationPoint residue_descent(const ValuationPoint& v) {
  const auto* c = std::get_if<CompositePlace>(&v);
  if (!c) fail(ErrorKind::InvalidInput, "residue_descent needs a composite place, got " + to_string(v));
  return from_residue(c->residue);
}

Valuation ord_place(const RatFunc& phi, const ValuationPoint& v) {
  if (const auto* f = std::get_if<FinitePlace>(&v)) return ord_place(phi, f->f);
  if (std::holds_alternative<InfinitePlace>(v)) return ord_infinity(phi);
  fail(ErrorKind::InvalidInput, "ord_place needs fin:<f> or inf, got " + to_string(v));
}

const char* kind_name(const ValuationPoint& v) {
  static const char* const names[] = {"field", "p", "fin", "inf", "ordf", "comp", "eval"};
  return names[v.index()];
}

}  // namespace zarcons
