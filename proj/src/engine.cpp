#include "zarcons/engine.hpp"

#include <algorithm>

#include "zarcons/error.hpp"
#include "zarcons/factor.hpp"

namespace zarcons {

namespace {

bool starts_with(const std::string& s, std::string_view prefix) { return s.rfind(prefix, 0) == 0; }

// Primes of Z_loc / Z_semi; empty for Z.
std::vector<Int> inverted_complement(const DomainAdapter& a) {
  std::vector<Int> out;
  if (a.id() == "Z") return out;
  for (const auto& p : a.maximal_above(ZeroPrime{}, 64)) out.push_back(std::get<Int>(std::get<PrincipalPrime>(p).gen));
  return out;
}

Ambient make_ambient(AmbientKind kind, const Field& f) {
  Ambient amb;
  amb.kind = kind;
  amb.field = f;
  return amb;
}

std::vector<Poly> pinch_points(const Field& f, long n) {
  std::vector<Poly> out;
  for (long i = 0; i < n; ++i) out.push_back(Poly::linear(f, Rat(i)));
  return out;
}

Poly product(const std::vector<Poly>& fs, const Field& f) {
  Poly p = Poly::constant(f, Rat(1));
  for (const auto& g : fs) p = p * g;
  return p;
}

// comp:field and ordf:x are the same ring k[x,y]_(x).
ValuationPoint canonical_plane_point(const ValuationPoint& v, const Field& f) {
  if (const auto* c = std::get_if<CompositePlace>(&v); c && std::holds_alternative<FieldPoint>(c->residue))
    return OrdPlace{BivarPoly::x(f).normalized()};
  return v;
}

bool same_ring(const ValuationPoint& a, const ValuationPoint& b, const Field& f) {
  return canonical_plane_point(a, f) == canonical_plane_point(b, f);
}

std::string list_string(const std::vector<PrimeDesc>& ps) {
  std::string s = "{";
  for (size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + to_string(ps[i]);
  return s + "}";
}

void attach_certificate(Verdict& v, const ValuationPoint& point, const DomainAdapter& a) {
  auto c = canonical_certificate(point, a);
  if (!c) {
    v.trace.push_back("no certificate: " + a.id() + " has no shipped ambient for this point");
    return;
  }
  CertResult r = certify_isolated(*c);
  const std::string set = "in " + std::to_string(c->set.in.size()) + ", out " + std::to_string(c->set.out.size());
  if (r.status == CertStatus::Valid) {
    v.certificate = *c;
    v.trace.push_back("certificate over " + c->ambient.tag() + " validates (" + set + ")");
  } else {
    v.trace.push_back("certificate over " + c->ambient.tag() + " did not validate: " + r.reason);
  }
}

}  // namespace

std::optional<Ambient> ambient_of(const DomainAdapter& a) {
  const std::string id = a.id();
  const Field f = a.base_field();
  if (id == "Z") return make_ambient(AmbientKind::ZarQ, Field::rationals());
  if (starts_with(id, "Z_loc:") || starts_with(id, "Z_semi:")) {
    Ambient amb = make_ambient(AmbientKind::ZarQ, Field::rationals());
    amb.primes = inverted_complement(a);
    return amb;
  }
  if (id == "Q") {
    Ambient amb = make_ambient(AmbientKind::ZarQ, Field::rationals());
    amb.primes = std::vector<Int>{};
    return amb;
  }
  if (starts_with(id, "Fp[x]:") || id == "Q[x]") return make_ambient(AmbientKind::SpecKx, f);
  if (starts_with(id, "kxy_loc:")) return make_ambient(AmbientKind::ZarLocal2, f);
  if (starts_with(id, "DM_example:")) return make_ambient(AmbientKind::ZarDM, f);
  if (starts_with(id, "pinch:")) {
    Ambient amb = make_ambient(AmbientKind::ZarKX, f);
    amb.places = pinch_points(f, *a.normalization_max_count());
    std::sort(amb.places->begin(), amb.places->end(), [](const Poly& x, const Poly& y) { return canonical_less(x, y); });
    return amb;
  }
  return std::nullopt;
}

std::optional<Certificate> canonical_certificate(const ValuationPoint& v0, const DomainAdapter& a) {
  auto amb = ambient_of(a);
  if (!amb) return std::nullopt;
  const std::string id = a.id();
  const Field f = a.base_field();
  const bool field_point = std::holds_alternative<FieldPoint>(v0);
  BasicSet s;
  ValuationPoint v = v0;
  if (amb->kind == AmbientKind::ZarQ) {
    std::vector<Int> ps = amb->primes ? *amb->primes : std::vector<Int>{};
    Int others = 1;
    if (field_point) {
      if (!amb->primes) return std::nullopt;
      for (const auto& p : ps) others *= p;
    } else {
      const auto* pp = std::get_if<PAdicPlace>(&v);
      if (!pp) return std::nullopt;
      for (const auto& p : ps)
        if (p != pp->p) others *= p;
      s.out.push_back(Rat(pp->p).inverse());
    }
    if (others != 1) s.in.push_back(Rat(others).inverse());
  } else if (amb->kind == AmbientKind::SpecKx) {
    const auto* fp = std::get_if<FinitePlace>(&v);
    if (!fp) return std::nullopt;
    s.out.push_back(RatFunc(fp->f).inverse());
    s.hints.irreducible.push_back(fp->f);
  } else if (amb->kind == AmbientKind::ZarKX) {  // pinch
    if (field_point) {
      s.in.push_back(RatFunc(product(*amb->places, f)).inverse());
    } else {
      const auto* fp = std::get_if<FinitePlace>(&v);
      if (!fp) return std::nullopt;
      s.out.push_back(RatFunc(fp->f).inverse());
    }
  } else if (amb->kind == AmbientKind::ZarLocal2) {
    v = canonical_plane_point(v, f);
    const auto* op = std::get_if<OrdPlace>(&v);
    if (!op) return std::nullopt;
    const BivarPoly x = BivarPoly::x(f).normalized(), y = BivarPoly::y(f).normalized();
    const BivarPoly& g = op->f == x ? y : x;
    s.in.push_back(BivarRatFunc(BivarPoly::constant(f, Rat(1)), g));
    s.out.push_back(BivarRatFunc(BivarPoly::constant(f, Rat(1)), op->f));
    s.hints.atoms.push_back(op->f);
  } else if (amb->kind == AmbientKind::ZarDM) {
    if (field_point) {
      s.in.push_back(BivarRatFunc(BivarPoly::constant(f, Rat(1)), BivarPoly::x(f)));
    } else {
      const auto& c = std::get<CompositePlace>(v);
      if (const auto* fp = std::get_if<FinitePlace>(&c.residue))
        s.out.push_back(BivarRatFunc(BivarPoly::constant(f, Rat(1)), BivarPoly::from_y(fp->f)));
      else if (std::holds_alternative<InfinitePlace>(c.residue))
        s.out.push_back(BivarRatFunc(BivarPoly::y(f)));
      else
        return std::nullopt;
    }
  } else {
    return std::nullopt;
  }
  if (!amb->in_family(v)) return std::nullopt;
  s.canonicalize();
  return Certificate{v, s, *amb};
}

Verdict decide_at_center(const PrimeDesc& p, const DomainAdapter& a) {
  Verdict v;
  v.rule = "center-height-vset";
  if (!a.is_noetherian()) {
    v.rule = "noetherian-hypothesis";
    v.trace.push_back(a.id() + " is not Noetherian; the center criterion does not apply");
    return v;
  }
  a.validate(p);
  const int h = a.height(p);
  v.trace.push_back("height of " + to_string(p) + " in " + a.id() + " is " + std::to_string(h));
  const auto list = a.vset_list(p);
  if (list) v.trace.push_back("primes containing " + to_string(p) + ": " + list_string(*list));
  else v.trace.push_back("infinitely many primes contain " + to_string(p));
  const bool isolated = h <= 1 && list.has_value();
  v.status = isolated ? VerdictStatus::Isolated : VerdictStatus::NotIsolated;
  if (!isolated) v.trace.push_back(h > 1 ? "height exceeds one" : "V(P) is infinite");
  return v;
}

Verdict decide_isolated_noetherian(const ValuationPoint& point, const DomainAdapter& a) {
  if (!a.is_noetherian()) {
    Verdict v;
    v.rule = "noetherian-hypothesis";
    v.trace.push_back(a.id() + " is not Noetherian; the center criterion does not apply");
    return v;
  }
  PrimeDesc p;
  try {
    p = center(point, a);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Unsupported) throw;
    Verdict v;
    v.rule = "center-unsupported";
    v.trace.push_back(e.what());
    return v;
  }
  Verdict v = decide_at_center(p, a);
  v.trace.insert(v.trace.begin(), "center of " + to_string(point) + " on " + a.id() + " is " + to_string(p));
  if (v.status != VerdictStatus::Isolated) return v;
  const auto essential = a.essential_place(p);
  if (essential && same_ring(*essential, point, a.base_field()))
    v.trace.push_back(to_string(point) + " is the localization of " + a.id() + " at " + to_string(p));
  else
    v.trace.push_back(to_string(point) + " is a localization of the normalization above " + to_string(p));
  attach_certificate(v, point, a);
  return v;
}

Verdict decide_field_point(const DomainAdapter& a, bool algebraic) {
  Verdict v;
  v.rule = "field-point-goldman";
  const bool goldman = a.is_goldman();
  v.trace.push_back(a.id() + (goldman ? " is" : " is not") + " a Goldman domain");
  v.trace.push_back(std::string("the extension is ") + (algebraic ? "algebraic" : "transcendental"));
  v.status = goldman && algebraic ? VerdictStatus::Isolated : VerdictStatus::NotIsolated;
  if (v.status == VerdictStatus::Isolated) attach_certificate(v, FieldPoint{}, a);
  return v;
}

Verdict decide_isolated(const ValuationPoint& point, const DomainAdapter& a) {
  if (a.is_noetherian()) return decide_isolated_noetherian(point, a);
  if (std::holds_alternative<FieldPoint>(point)) return decide_field_point(a, true);
  center(point, a);  // rejects points that are not overrings
  if (const auto* c = std::get_if<CompositePlace>(&point); c && std::holds_alternative<FieldPoint>(c->residue)) {
    Verdict v;
    v.rule = "composite-residue-field-point";
    v.status = VerdictStatus::NotIsolated;
    v.trace.push_back("composite places correspond to Zar(F(Y)|F) through the residue map");
    v.trace.push_back("F(Y) is not isolated there: F[Y] is not a Goldman domain");
    return v;
  }
  Verdict v;
  v.rule = "certificate";
  attach_certificate(v, point, a);
  v.status = v.certificate ? VerdictStatus::Isolated : VerdictStatus::Unknown;
  if (!v.certificate) v.trace.push_back("no criterion applies to non-Noetherian " + a.id());
  return v;
}

std::vector<std::pair<ValuationPoint, Certificate>> enumerate_isolated_KX(const Field& field, int bound) {
  if (bound < 1) fail(ErrorKind::InvalidInput, "degree bound must be at least 1");
  Ambient amb = make_ambient(AmbientKind::ZarKX, field);
  std::vector<Poly> fs;
  if (!field.is_rational()) {
    fs = irreducibles_up_to(field, bound);
  } else {
    for (int d = 1; d <= bound; ++d)
      for (long c = -3; c <= 3; ++c)
        for (long lin : {0L, 1L}) {
          if (d == 1 && lin == 1) continue;
          Poly g = Poly::monomial(field, Rat(1), d) + Poly::monomial(field, Rat(lin), 1) + Poly::constant(field, Rat(c));
          if (is_irreducible(g) && std::find(fs.begin(), fs.end(), g) == fs.end()) fs.push_back(g);
        }
    std::sort(fs.begin(), fs.end(), [](const Poly& x, const Poly& y) { return canonical_less(x, y); });
  }
  std::vector<std::pair<ValuationPoint, Certificate>> out;
  for (const auto& g : fs) {
    BasicSet s;
    s.out.push_back(RatFunc(g).inverse());
    s.hints.irreducible.push_back(g);
    out.emplace_back(FinitePlace{g}, Certificate{FinitePlace{g}, s, amb});
  }
  BasicSet s;
  s.out.push_back(RatFunc::variable(field));
  out.emplace_back(InfinitePlace{}, Certificate{InfinitePlace{}, s, amb});
  for (const auto& [v, c] : out)
    if (certify_isolated(c).status != CertStatus::Valid)
      fail(ErrorKind::Unsupported, "certificate for " + to_string(v) + " did not validate");
  return out;
}

std::string to_string(const HomeoClass& c) {
  switch (c.kind) {
    case HomeoClass::Dim1: return "dim1(" + std::to_string(c.n) + ")";
    case HomeoClass::Dim2: return "dim2";
    case HomeoClass::Dim3Plus: return "dim3+";
  }
  return "?";
}

Verdict decide_isolated_trdeg1(std::optional<long> extension_count) {
  Verdict v;
  v.rule = "finite-extension-count";
  if (!extension_count) {
    v.trace.push_back("no finitely generated subfield with finitely many extensions was supplied");
    return v;
  }
  if (*extension_count < 1) fail(ErrorKind::InvalidInput, "an extension count is at least 1");
  v.status = VerdictStatus::Isolated;
  v.trace.push_back("V restricted to L' has " + std::to_string(*extension_count) + " extension(s) to L");
  v.trace.push_back("its restriction to K(X) is isolated, and finitely many extensions stay isolated");
  return v;
}

HomeoClass homeo_class(const DomainAdapter& a) {
  if (!a.is_local()) fail(ErrorKind::PreconditionViolated, a.id() + " is not local");
  if (!a.is_noetherian()) fail(ErrorKind::PreconditionViolated, a.id() + " is not Noetherian");
  if (!a.is_countable()) fail(ErrorKind::PreconditionViolated, a.id() + " is not countable");
  const auto d = a.dim();
  if (!d) fail(ErrorKind::PreconditionViolated, a.id() + " has infinite dimension");
  if (*d < 1) fail(ErrorKind::PreconditionViolated, a.id() + " has dimension 0");
  if (*d == 1) {
    const auto n = a.normalization_max_count();
    if (!n) fail(ErrorKind::PreconditionViolated, a.id() + ": maximal ideals of the normalization are unknown");
    return HomeoClass{HomeoClass::Dim1, *n};
  }
  return HomeoClass{*d == 2 ? HomeoClass::Dim2 : HomeoClass::Dim3Plus, 0};
}

HomeoResult classify_homeo(const DomainAdapter& a, const DomainAdapter& b) {
  HomeoResult r{homeo_class(a), homeo_class(b)};
  r.equal = r.a == r.b;
  return r;
}

SpaceDescriptor descriptor_for(const DomainAdapter& a, PerfSpace space, int trdeg) {
  SpaceDescriptor d;
  d.space = space;
  d.trdeg = trdeg;
  d.label = a.id();
  const auto dim = a.dim();
  const bool dvr = a.is_local() && a.is_noetherian() && a.is_integrally_closed() && dim && *dim == 1;
  if (dim && *dim == 0) d.base = PerfBase::Field;
  else if (space == PerfSpace::Est && dvr) d.base = PerfBase::Valuation;
  else d.base = PerfBase::Domain;
  if (d.base != PerfBase::Field) d.j_zero = !a.is_goldman();
  return d;
}

Verdict perfectness_verdict(const SpaceDescriptor& d) {
  Verdict v;
  const std::string space = std::string(d.space == PerfSpace::Zar ? "Zar" : "est") + "(L|" +
                            (d.label.empty() ? std::string("B") : d.label) + "), trdeg " + std::to_string(d.trdeg);
  v.trace.push_back(space);
  auto set = [&](VerdictStatus s, const char* rule, std::string why) {
    v.status = s;
    v.rule = rule;
    v.trace.push_back(std::move(why));
    return v;
  };
  if (d.trdeg < 0) fail(ErrorKind::InvalidInput, "transcendence degree must be nonnegative");
  if (d.trdeg >= 2) {
    switch (d.base) {
      case PerfBase::Field:
        return set(VerdictStatus::Perfect, "trdeg2-field", "Zar(L|K) with trdeg(L/K) >= 2 has no isolated point");
      case PerfBase::Valuation:
        return set(VerdictStatus::Perfect, "trdeg2-val", "est(L|V) and Zar(L|V) with trdeg >= 2 have no isolated point");
      case PerfBase::Domain:
        return set(VerdictStatus::Perfect, "trdeg2-domain",
                   "every point of Zar(L|D) lies in some est(L|V), each of them perfect");
    }
  }
  if (d.base == PerfBase::Field) {
    if (d.trdeg == 0)
      return set(VerdictStatus::NotPerfect, "algebraic-over-field", "Zar(L|K) = {L} for algebraic L");
    if (!d.finitely_generated)
      return set(VerdictStatus::Unknown, "trdeg1-field-not-fg",
                 "needs extension counts est(L|V), which are not computed for infinite extensions");
    return set(VerdictStatus::NotPerfect, "trdeg1-field-fg",
               "every point except L is isolated (finitely many extensions of each place of K(X))");
  }
  if (d.trdeg == 0) return set(VerdictStatus::Unknown, "outside-table", "algebraic extensions over a non-field base");
  if (!d.simple) return set(VerdictStatus::Unknown, "outside-table", "trdeg 1 with L other than K(X)");
  if (d.base == PerfBase::Valuation && d.space == PerfSpace::Est)
    return set(VerdictStatus::Perfect, "ext-KX", "est(K(X)|V) has no isolated point for a non-field valuation ring V");
  if (d.space == PerfSpace::Est)
    return set(VerdictStatus::Unknown, "outside-table", "est(L|B) needs a valuation ring B");
  if (!d.j_zero) return set(VerdictStatus::Unknown, "j-unknown", "intersection J of the nonzero primes not given");
  if (*d.j_zero)
    return set(VerdictStatus::Perfect, "zar-kx-j-zero",
               "J = 0: every W is either in some est(K(X)|V) or has a non-Goldman residue reduction");
  return set(VerdictStatus::NotPerfect, "zar-kx-j-nonzero",
             "J != 0: B(1/j) = Zar(K(X)|K) is clopen; isolated points are fin:<f> and inf");
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Isolated: return "Isolated";
    case VerdictStatus::NotIsolated: return "NotIsolated";
    case VerdictStatus::Perfect: return "Perfect";
    case VerdictStatus::NotPerfect: return "NotPerfect";
    case VerdictStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

}  // namespace zarcons
