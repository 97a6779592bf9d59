#include "zarcons/consets.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "zarcons/error.hpp"
#include "zarcons/extlab.hpp"
#include "zarcons/factor.hpp"

namespace zarcons {

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      std::string piece = trim(s.substr(start, i - start));
      if (!piece.empty()) out.push_back(piece);
      start = i + 1;
    }
  }
  return out;
}

void sort_unique(std::vector<ValuationPoint>& v) {
  std::sort(v.begin(), v.end(), place_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool contains_point(const std::vector<ValuationPoint>& v, const ValuationPoint& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

std::vector<ValuationPoint> minus(const std::vector<ValuationPoint>& a, const std::vector<ValuationPoint>& b) {
  std::vector<ValuationPoint> out;
  for (const auto& x : a)
    if (!contains_point(b, x)) out.push_back(x);
  return out;
}

std::vector<ValuationPoint> meet(const std::vector<ValuationPoint>& a, const std::vector<ValuationPoint>& b) {
  std::vector<ValuationPoint> out;
  for (const auto& x : a)
    if (contains_point(b, x)) out.push_back(x);
  return out;
}

std::vector<ValuationPoint> join(std::vector<ValuationPoint> a, const std::vector<ValuationPoint>& b) {
  a.insert(a.end(), b.begin(), b.end());
  sort_unique(a);
  return a;
}

bool is_zero_elem(const FieldElem& e) {
  return std::visit([](const auto& x) { return x.is_zero(); }, e);
}

// Rationals of height at most h, ordered like place_less orders their places.
std::vector<Rat> small_rationals(long h) {
  std::vector<Rat> out;
  for (long b = 1; b <= h; ++b)
    for (long a = -h; a <= h; ++a) {
      Int g = gcd(Int(a), Int(b));
      if (g == 1) out.push_back(Rat(Int(a), Int(b)));
    }
  return out;
}

Residual residual_union(Residual a, Residual b) {
  if (a == Residual::None && b == Residual::None) return Residual::None;
  if (a == Residual::Included || b == Residual::Included) return Residual::Included;
  if ((a == Residual::Excluded || a == Residual::None) && (b == Residual::Excluded || b == Residual::None))
    return Residual::Excluded;
  return Residual::Unknown;
}

Residual residual_meet(Residual a, Residual b) {
  if (a == Residual::None && b == Residual::None) return Residual::None;
  if (a == Residual::Excluded || b == Residual::Excluded) return Residual::Excluded;
  if (a == Residual::Included && b == Residual::Included) return Residual::Included;
  return Residual::Unknown;
}

// Every point of a finite or enumerated family, field point excluded.
std::vector<ValuationPoint> family_points(const Ambient& amb) {
  std::vector<ValuationPoint> out;
  if (amb.primes) {
    for (const auto& p : *amb.primes) out.push_back(PAdicPlace{p});
  } else if (amb.places) {
    for (const auto& f : *amb.places) out.push_back(FinitePlace{f});
  } else if (amb.kind == AmbientKind::EstKX) {
    for (const auto& s : small_rationals(amb.height_bound)) out.push_back(EvalPlace{amb.p, QuadElem(s), 1});
  }
  sort_unique(out);
  return out;
}

bool enumerated(const Ambient& amb) { return amb.finite_family() || amb.kind == AmbientKind::EstKX; }

// Converts a cofinite description over an enumerated family to the finite one.
ResolvedSet normalize(ResolvedSet r, const Ambient& amb) {
  sort_unique(r.places);
  if (r.mode == SetMode::Cofinite && enumerated(amb)) {
    r.places = minus(family_points(amb), r.places);
    r.mode = SetMode::Finite;
  }
  if (!amb.has_field_point()) r.field_point = false;
  return r;
}

// Points (of the ambient family) where g is not in the ring.
std::vector<ValuationPoint> pole_set(const FieldElem& g, const Ambient& amb, const ParseHints& hints) {
  std::vector<ValuationPoint> out;
  if (const auto* q = std::get_if<Rat>(&g)) {
    for (const auto& p : prime_divisors(q->den())) out.push_back(PAdicPlace{p});
  } else if (const auto* r = std::get_if<RatFunc>(&g)) {
    if (r->den().degree() > 0)
      for (const auto& fac : factor(r->den(), hints.irreducible)) out.push_back(FinitePlace{fac.f});
    if (!r->is_zero() && r->num().degree() > r->den().degree()) out.push_back(InfinitePlace{});
  } else {
    const auto& b = std::get<BivarRatFunc>(g);
    if (b.den().total_degree() > 0) {
      for (const auto& fac : bivar_factor(b.den(), hints.atoms)) {
        if (!fac.f.eval(Rat(0), Rat(0)).is_zero()) continue;
        if (fac.status != IrrStatus::Proven)
          fail(ErrorKind::UnsupportedFactorization,
               "cannot confirm irreducibility of denominator factor " + fac.f.to_string());
        out.push_back(OrdPlace{fac.f});
      }
    }
  }
  std::vector<ValuationPoint> kept;
  for (auto& v : out)
    if (amb.in_family(v)) kept.push_back(std::move(v));
  sort_unique(kept);
  return kept;
}

// ZarQ, ZarKX, SpecZ, SpecKx, ZarLocal2: each generator condition changes only on
// its pole set.
ResolvedSet resolve_by_support(const BasicSet& s, const Ambient& amb) {
  ResolvedSet r;
  r.field_point = s.out.empty();
  if (amb.finite_family()) {
    r.mode = SetMode::Finite;
    for (const auto& v : family_points(amb))
      if (member(v, s)) r.places.push_back(v);
    return r;
  }
  if (!s.out.empty()) {
    r.mode = SetMode::Finite;
    for (const auto& v : pole_set(s.out.front(), amb, s.hints))
      if (member(v, s)) r.places.push_back(v);
  } else {
    r.mode = SetMode::Cofinite;
    for (const auto& g : s.in)
      for (const auto& v : pole_set(g, amb, s.hints))
        if (!member(v, s)) r.places.push_back(v);
  }
  sort_unique(r.places);
  return r;
}

// Centered on the maximal ideal: decided only when a generator forces the answer.
Residual local2_residual(const BasicSet& s) {
  bool all_hold = true;
  auto at_origin = [](const BivarPoly& f) { return f.eval(Rat(0), Rat(0)); };
  for (const auto& g : s.in) {
    const auto& b = std::get<BivarRatFunc>(g);
    bool in_local_ring = !at_origin(b.den()).is_zero();
    bool inverse_in_max = !at_origin(b.num()).is_zero() && !in_local_ring;
    if (inverse_in_max) return Residual::Excluded;
    if (!in_local_ring) all_hold = false;
  }
  for (const auto& g : s.out) {
    const auto& b = std::get<BivarRatFunc>(g);
    bool in_local_ring = !at_origin(b.den()).is_zero();
    bool inverse_in_max = !at_origin(b.num()).is_zero() && !in_local_ring;
    if (in_local_ring) return Residual::Excluded;
    if (!inverse_in_max) all_hold = false;
  }
  return all_hold ? Residual::Included : Residual::Unknown;
}

// Constant generators are the only ones every extension of Z_(p) agrees on.
Residual est_residual(const BasicSet& s, const Int& p) {
  bool all_hold = true;
  for (const auto& g : s.in) {
    const auto& r = std::get<RatFunc>(g);
    if (!r.is_constant()) {
      all_hold = false;
      continue;
    }
    if (padic_val(r.constant_value(), p) < Valuation(0)) return Residual::Excluded;
  }
  for (const auto& g : s.out) {
    const auto& r = std::get<RatFunc>(g);
    if (!r.is_constant()) {
      all_hold = false;
      continue;
    }
    if (padic_val(r.constant_value(), p) >= Valuation(0)) return Residual::Excluded;
  }
  return all_hold ? Residual::Included : Residual::Unknown;
}

ValuationPoint composite_of(const ValuationPoint& w) {
  if (std::holds_alternative<FieldPoint>(w)) return CompositePlace{FieldPoint{}};
  if (const auto* f = std::get_if<FinitePlace>(&w)) return CompositePlace{*f};
  return CompositePlace{InfinitePlace{}};
}

// Composite places reduce to the Y-line: x-order decides unless it is zero, and
// then the leading x-coefficient is tested against the residue point.
ResolvedSet resolve_dm(const BasicSet& s, const Ambient& amb) {
  Ambient line;
  line.kind = AmbientKind::ZarKX;
  line.field = amb.field;
  // Atoms are splitters, not irreducibility claims, so the Y-line factors unaided.
  BasicSet reduced;
  bool none = false;
  for (const auto& g : s.in) {
    const auto& b = std::get<BivarRatFunc>(g);
    Valuation k = ord_x(b);
    if (k < Valuation(0)) none = true;
    else if (k == Valuation(0)) reduced.in.push_back(leading_x_coefficient(b));
  }
  for (const auto& g : s.out) {
    const auto& b = std::get<BivarRatFunc>(g);
    Valuation k = ord_x(b);
    if (k > Valuation(0)) none = true;
    else if (k == Valuation(0)) reduced.out.push_back(leading_x_coefficient(b));
  }
  ResolvedSet r;
  r.field_point = s.out.empty();
  r.mode = SetMode::Finite;
  if (none) return r;
  ResolvedSet line_set = resolve_by_support(reduced, line);
  for (const auto& w : line_set.places) r.places.push_back(composite_of(w));
  bool comp_field = line_set.mode == SetMode::Finite ? line_set.field_point : !line_set.field_point;
  if (comp_field) r.places.push_back(CompositePlace{FieldPoint{}});
  r.mode = line_set.mode;
  sort_unique(r.places);
  return r;
}

std::string elem_key(const FieldElem& e) {
  std::string tag = std::visit([](const auto& x) -> std::string {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rat>) return "Q";
    else return x.field().tag();
  }, e);
  return std::to_string(e.index()) + "@" + tag;
}

std::string basic_key(const BasicSet& s) {
  std::string k;
  for (const auto& g : s.in) k += to_string(g) + ";";
  k += "|";
  for (const auto& g : s.out) k += to_string(g) + ";";
  return k;
}

void check_same_field(const std::vector<BasicSet>& sets) {
  std::string key;
  for (const auto& s : sets) {
    for (const auto* list : {&s.in, &s.out})
      for (const auto& g : *list) {
        std::string k = elem_key(g);
        if (key.empty()) key = k;
        else if (k != key) fail(ErrorKind::InvalidInput, "sets mix elements of different fields");
      }
  }
}

void merge_hints(ParseHints& into, const ParseHints& from) {
  into.irreducible.insert(into.irreducible.end(), from.irreducible.begin(), from.irreducible.end());
  into.atoms.insert(into.atoms.end(), from.atoms.begin(), from.atoms.end());
}

Int integer_of(const FieldElem& e) {
  const auto* q = std::get_if<Rat>(&e);
  if (!q || !q->is_integer()) fail(ErrorKind::InvalidInput, "ideal generators must be integers");
  return q->num();
}

Poly polynomial_of(const FieldElem& e) {
  const auto* r = std::get_if<RatFunc>(&e);
  if (!r || !r->is_polynomial()) fail(ErrorKind::InvalidInput, "ideal generators must be polynomials");
  return r->num().scaled(r->den().lead().inverse());
}

}  // namespace

Ambient Ambient::parse(std::string_view raw, const std::optional<Field>& default_field) {
  std::string text = trim(raw);
  std::optional<std::string> restriction;
  if (!text.empty() && text.back() == ']') {
    size_t open = text.find('[');
    if (open == std::string::npos) fail(ErrorKind::InvalidInput, "unbalanced '[' in ambient " + text);
    restriction = text.substr(open + 1, text.size() - open - 2);
    text = trim(text.substr(0, open));
  }
  std::string name = text, arg;
  size_t colon = text.find_first_of(":(");
  if (colon != std::string::npos) {
    name = trim(text.substr(0, colon));
    arg = text.substr(colon + 1);
    if (text[colon] == '(') {
      if (arg.empty() || arg.back() != ')') fail(ErrorKind::InvalidInput, "unbalanced '(' in ambient " + text);
      arg.pop_back();
    }
    arg = trim(arg);
  }
  static const std::map<std::string, AmbientKind> names = {
      {"ZarQ", AmbientKind::ZarQ},           {"ZarKX", AmbientKind::ZarKX}, {"SpecZ", AmbientKind::SpecZ},
      {"SpecKx", AmbientKind::SpecKx},       {"SpecKX", AmbientKind::SpecKx},
      {"ZarLocal2", AmbientKind::ZarLocal2}, {"ZarDM", AmbientKind::ZarDM}, {"EstKX", AmbientKind::EstKX}};
  auto it = names.find(name);
  if (it == names.end()) fail(ErrorKind::UnsupportedAmbient, "unknown ambient '" + name + "'");
  Ambient a;
  a.kind = it->second;
  if (a.kind == AmbientKind::EstKX) {
    std::string p = arg;
    if (p.rfind("p=", 0) == 0) p = p.substr(2);
    if (p.empty()) fail(ErrorKind::InvalidInput, "EstKX needs a prime, as in EstKX:2");
    Rat pr = parse_rational(p);
    if (!pr.is_integer()) fail(ErrorKind::InvalidInput, "EstKX prime must be an integer");
    require_prime(pr.num(), "EstKX prime");
    a.p = pr.num();
  } else if (!arg.empty()) {
    a.field = Field::parse(arg);
  } else if (default_field) {
    a.field = *default_field;
  }
  bool rational_only = a.kind == AmbientKind::ZarQ || a.kind == AmbientKind::SpecZ || a.kind == AmbientKind::EstKX;
  if (rational_only && !a.field.is_rational()) fail(ErrorKind::InvalidInput, name + " is defined over Q only");
  if (restriction) {
    if (a.kind == AmbientKind::ZarQ) {
      std::vector<Int> ps;
      for (const auto& piece : split_commas(*restriction)) {
        Rat q = parse_rational(piece);
        if (!q.is_integer()) fail(ErrorKind::InvalidInput, "restriction entries must be primes");
        require_prime(q.num(), "restriction prime");
        ps.push_back(q.num());
      }
      std::sort(ps.begin(), ps.end());
      ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
      a.primes = ps;
    } else if (a.kind == AmbientKind::ZarKX) {
      std::vector<ValuationPoint> pts;
      for (const auto& piece : split_commas(*restriction))
        pts.push_back(make_finite(parse_poly(piece, a.field).monic()));
      sort_unique(pts);
      std::vector<Poly> fs;
      for (const auto& v : pts) fs.push_back(std::get<FinitePlace>(v).f);
      a.places = fs;
    } else {
      fail(ErrorKind::UnsupportedAmbient, "only ZarQ and ZarKX take a [..] restriction");
    }
  }
  return a;
}

std::string Ambient::tag() const {
  std::string t;
  switch (kind) {
    case AmbientKind::ZarQ: t = "ZarQ"; break;
    case AmbientKind::ZarKX: t = "ZarKX:" + field.tag(); break;
    case AmbientKind::SpecZ: t = "SpecZ"; break;
    case AmbientKind::SpecKx: t = "SpecKx:" + field.tag(); break;
    case AmbientKind::ZarLocal2: t = "ZarLocal2:" + field.tag(); break;
    case AmbientKind::ZarDM: t = "ZarDM:" + field.tag(); break;
    case AmbientKind::EstKX: t = "EstKX:" + p.get_str(); break;
  }
  if (primes) {
    t += "[";
    for (size_t i = 0; i < primes->size(); ++i) t += (i ? "," : "") + (*primes)[i].get_str();
    t += "]";
  } else if (places) {
    t += "[";
    for (size_t i = 0; i < places->size(); ++i) t += (i ? "," : "") + (*places)[i].to_string("X");
    t += "]";
  }
  return t;
}

FieldElem Ambient::parse_elem(std::string_view text, ParseHints* hints) const {
  switch (kind) {
    case AmbientKind::ZarQ:
    case AmbientKind::SpecZ:
      return parse_rational(text);
    case AmbientKind::ZarKX:
    case AmbientKind::SpecKx:
    case AmbientKind::EstKX:
      return parse_ratfunc(text, field, 'X', hints);
    case AmbientKind::ZarLocal2:
    case AmbientKind::ZarDM:
      return parse_bivar(text, field, hints);
  }
  fail(ErrorKind::UnsupportedAmbient, "unknown ambient");
}

std::string Ambient::elem_string(const FieldElem& e) const { return to_string(e, kind == AmbientKind::ZarDM); }

ValuationPoint Ambient::parse_point(std::string_view raw) const {
  std::string text = trim(raw);
  ValuationPoint v;
  bool spec = kind == AmbientKind::SpecZ || kind == AmbientKind::SpecKx;
  if (spec && !text.empty() && text.front() == '(' && text.back() == ')') {
    std::string inner = trim(text.substr(1, text.size() - 2));
    if (inner == "0") {
      v = FieldPoint{};
    } else if (kind == AmbientKind::SpecZ) {
      Rat q = parse_rational(inner);
      if (!q.is_integer()) fail(ErrorKind::InvalidInput, "not a prime: " + inner);
      v = make_padic(abs(q.num()));
    } else {
      Poly f = parse_poly(inner, field);
      if (f.degree() < 1) fail(ErrorKind::InvalidInput, "not a prime ideal: " + text);
      v = make_finite(f.monic());
    }
  } else {
    v = parse_place(text, field);
  }
  if (!in_family(v)) fail(ErrorKind::InvalidInput, text + " is not a point of " + tag());
  return v;
}

std::string Ambient::point_string(const ValuationPoint& v) const {
  if (kind == AmbientKind::SpecZ || kind == AmbientKind::SpecKx) {
    if (std::holds_alternative<FieldPoint>(v)) return "(0)";
    if (const auto* p = std::get_if<PAdicPlace>(&v)) return "(" + p->p.get_str() + ")";
    if (const auto* f = std::get_if<FinitePlace>(&v)) return "(" + f->f.to_string("X") + ")";
  }
  return to_string(v);
}

bool Ambient::in_family(const ValuationPoint& v) const {
  if (std::holds_alternative<FieldPoint>(v)) return has_field_point();
  switch (kind) {
    case AmbientKind::ZarQ:
    case AmbientKind::SpecZ:
      if (const auto* p = std::get_if<PAdicPlace>(&v))
        return !primes || std::binary_search(primes->begin(), primes->end(), p->p);
      return false;
    case AmbientKind::ZarKX:
    case AmbientKind::SpecKx:
      if (const auto* f = std::get_if<FinitePlace>(&v)) {
        if (!(f->f.field() == field)) return false;
        return !places || std::find(places->begin(), places->end(), f->f) != places->end();
      }
      return kind == AmbientKind::ZarKX && !places && std::holds_alternative<InfinitePlace>(v);
    case AmbientKind::ZarLocal2:
      if (const auto* o = std::get_if<OrdPlace>(&v)) return o->f.field() == field;
      return false;
    case AmbientKind::ZarDM:
      if (const auto* c = std::get_if<CompositePlace>(&v)) {
        if (const auto* f = std::get_if<FinitePlace>(&c->residue)) return f->f.field() == field;
        return true;
      }
      return false;
    case AmbientKind::EstKX:
      if (const auto* e = std::get_if<EvalPlace>(&v)) return e->p == p;
      return false;
  }
  return false;
}

void BasicSet::canonicalize() {
  for (auto* list : {&in, &out}) {
    std::vector<std::pair<std::string, FieldElem>> keyed;
    for (auto& g : *list) keyed.emplace_back(to_string(g), std::move(g));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());
    list->clear();
    for (auto& [k, g] : keyed) list->push_back(std::move(g));
  }
}

bool operator==(const ResolvedSet& a, const ResolvedSet& b) {
  return a.mode == b.mode && a.places == b.places && a.field_point == b.field_point && a.residual == b.residual;
}

BasicSet parse_basic(const Ambient& amb, const std::vector<std::string>& in, const std::vector<std::string>& out) {
  BasicSet s;
  for (const auto& t : in) s.in.push_back(amb.parse_elem(t, &s.hints));
  for (const auto& t : out) s.out.push_back(amb.parse_elem(t, &s.hints));
  s.canonicalize();
  return s;
}

bool member(const ValuationPoint& v, const BasicSet& s) {
  for (const auto& g : s.in)
    if (!contains(v, g)) return false;
  for (const auto& g : s.out)
    if (contains(v, g)) return false;
  return true;
}

bool member(const ValuationPoint& v, const ResolvedSet& r) {
  if (std::holds_alternative<FieldPoint>(v)) return r.field_point;
  bool listed = contains_point(r.places, v);
  return r.mode == SetMode::Finite ? listed : !listed;
}

ResolvedSet resolve(const BasicSet& s, const Ambient& amb) {
  ResolvedSet r;
  switch (amb.kind) {
    case AmbientKind::ZarQ:
    case AmbientKind::ZarKX:
    case AmbientKind::SpecZ:
    case AmbientKind::SpecKx:
      r = resolve_by_support(s, amb);
      break;
    case AmbientKind::ZarLocal2:
      r = resolve_by_support(s, amb);
      r.residual = local2_residual(s);
      break;
    case AmbientKind::ZarDM:
      r = resolve_dm(s, amb);
      break;
    case AmbientKind::EstKX:
      r.mode = SetMode::Finite;
      for (const auto& v : family_points(amb))
        if (member(v, s)) r.places.push_back(v);
      r.residual = est_residual(s, amb.p);
      break;
  }
  return normalize(std::move(r), amb);
}

ResolvedSet resolve(const ConstructibleSet& s, const Ambient& amb) {
  ResolvedSet acc;
  acc.residual = amb.complete() ? Residual::None : Residual::Excluded;
  for (const auto& d : s.disjuncts) acc = set_union(acc, resolve(d, amb), amb);
  return acc;
}

ResolvedSet set_union(const ResolvedSet& a, const ResolvedSet& b, const Ambient& amb) {
  ResolvedSet r;
  r.field_point = a.field_point || b.field_point;
  r.residual = residual_union(a.residual, b.residual);
  if (a.mode == SetMode::Finite && b.mode == SetMode::Finite) {
    r.mode = SetMode::Finite;
    r.places = join(a.places, b.places);
  } else if (a.mode == SetMode::Cofinite && b.mode == SetMode::Cofinite) {
    r.mode = SetMode::Cofinite;
    r.places = meet(a.places, b.places);
  } else {
    const auto& fin = a.mode == SetMode::Finite ? a : b;
    const auto& cof = a.mode == SetMode::Finite ? b : a;
    r.mode = SetMode::Cofinite;
    r.places = minus(cof.places, fin.places);
  }
  return normalize(std::move(r), amb);
}

ResolvedSet set_intersection(const ResolvedSet& a, const ResolvedSet& b, const Ambient& amb) {
  ResolvedSet r;
  r.field_point = a.field_point && b.field_point;
  r.residual = residual_meet(a.residual, b.residual);
  if (a.mode == SetMode::Finite && b.mode == SetMode::Finite) {
    r.mode = SetMode::Finite;
    r.places = meet(a.places, b.places);
  } else if (a.mode == SetMode::Cofinite && b.mode == SetMode::Cofinite) {
    r.mode = SetMode::Cofinite;
    r.places = join(a.places, b.places);
  } else {
    const auto& fin = a.mode == SetMode::Finite ? a : b;
    const auto& cof = a.mode == SetMode::Finite ? b : a;
    r.mode = SetMode::Finite;
    r.places = minus(fin.places, cof.places);
  }
  return normalize(std::move(r), amb);
}

ResolvedSet set_complement(const ResolvedSet& a, const Ambient& amb) {
  ResolvedSet r = a;
  r.mode = a.mode == SetMode::Finite ? SetMode::Cofinite : SetMode::Finite;
  r.field_point = !a.field_point;
  if (a.residual == Residual::Included) r.residual = Residual::Excluded;
  else if (a.residual == Residual::Excluded) r.residual = Residual::Included;
  return normalize(std::move(r), amb);
}

ConstructibleSet make_union(const ConstructibleSet& a, const ConstructibleSet& b) {
  ConstructibleSet r = a;
  r.disjuncts.insert(r.disjuncts.end(), b.disjuncts.begin(), b.disjuncts.end());
  check_same_field(r.disjuncts);
  return r;
}

ConstructibleSet make_intersection(const ConstructibleSet& a, const ConstructibleSet& b) {
  ConstructibleSet r;
  for (const auto& x : a.disjuncts)
    for (const auto& y : b.disjuncts) {
      BasicSet m = x;
      m.in.insert(m.in.end(), y.in.begin(), y.in.end());
      m.out.insert(m.out.end(), y.out.begin(), y.out.end());
      merge_hints(m.hints, y.hints);
      m.canonicalize();
      r.disjuncts.push_back(std::move(m));
    }
  std::vector<BasicSet> all = a.disjuncts;
  all.insert(all.end(), b.disjuncts.begin(), b.disjuncts.end());
  check_same_field(all);
  return r;
}

ConstructibleSet complement_of_basic(const BasicSet& s) {
  ConstructibleSet r;
  for (const auto& g : s.in) {
    BasicSet b;
    b.out.push_back(g);
    b.hints = s.hints;
    r.disjuncts.push_back(std::move(b));
  }
  for (const auto& g : s.out) {
    BasicSet b;
    b.in.push_back(g);
    b.hints = s.hints;
    r.disjuncts.push_back(std::move(b));
  }
  return r;
}

ConstructibleSet normal_form(const ConstructibleSet& s, const Ambient& amb) {
  std::map<std::string, BasicSet> by_key;
  for (auto d : s.disjuncts) {
    d.canonicalize();
    // A disjunct with the same generator inside and outside is empty.
    bool empty = false;
    for (const auto& g : d.out)
      for (const auto& h : d.in)
        if (to_string(g) == to_string(h)) empty = true;
    for (const auto& g : d.out)
      if (is_zero_elem(g)) empty = true;
    if (empty) continue;
    std::string k = basic_key(d);
    auto it = by_key.find(k);
    if (it == by_key.end()) by_key.emplace(k, std::move(d));
    else merge_hints(it->second.hints, d.hints);
  }
  (void)amb;
  ConstructibleSet r;
  for (auto& [k, d] : by_key) r.disjuncts.push_back(std::move(d));
  return r;
}

std::vector<ValuationPoint> candidate_pool(const Ambient& amb, int count) {
  std::vector<ValuationPoint> out;
  if (enumerated(amb)) {
    out = family_points(amb);
  } else {
    switch (amb.kind) {
      case AmbientKind::ZarQ:
      case AmbientKind::SpecZ:
        for (long p : primes_up_to(100000)) {
          if (static_cast<int>(out.size()) >= count) break;
          out.push_back(PAdicPlace{Int(p)});
        }
        break;
      case AmbientKind::ZarKX:
      case AmbientKind::SpecKx:
        if (amb.field.is_rational()) {
          for (long a = -count; a <= count; ++a) out.push_back(FinitePlace{Poly::linear(amb.field, Rat(a))});
        } else {
          for (int d = 1; d <= 8 && static_cast<int>(out.size()) < count; ++d)
            for (const auto& f : irreducibles_of_degree(amb.field, d)) out.push_back(FinitePlace{f});
        }
        if (amb.kind == AmbientKind::ZarKX) out.push_back(InfinitePlace{});
        break;
      case AmbientKind::ZarLocal2: {
        const Field& k = amb.field;
        BivarPoly x = BivarPoly::x(k), y = BivarPoly::y(k);
        out.push_back(OrdPlace{x.normalized()});
        out.push_back(OrdPlace{y.normalized()});
        for (int e = 1; static_cast<int>(out.size()) < count && e <= count; ++e) {
          out.push_back(OrdPlace{(y - x.pow(e)).normalized()});
          out.push_back(OrdPlace{(y + x.pow(e)).normalized()});
          if (e >= 2) out.push_back(OrdPlace{(x - y.pow(e)).normalized()});
        }
        break;
      }
      case AmbientKind::ZarDM:
        out.push_back(CompositePlace{FieldPoint{}});
        for (long a = -count; a <= count; ++a) out.push_back(CompositePlace{FinitePlace{Poly::linear(amb.field, Rat(a))}});
        out.push_back(CompositePlace{InfinitePlace{}});
        break;
      case AmbientKind::EstKX:
        break;
    }
  }
  sort_unique(out);
  return out;
}

CertResult certify_isolated(const Certificate& c) {
  const Ambient& amb = c.ambient;
  if (!amb.in_family(c.target)) fail(ErrorKind::InvalidInput, to_string(c.target) + " is not a point of " + amb.tag());
  CertResult res;
  if (!member(c.target, c.set)) {
    res.status = CertStatus::Invalid;
    res.reason = "target is not a member of the set";
    return res;
  }
  ResolvedSet r = resolve(c.set, amb);
  const bool target_field = std::holds_alternative<FieldPoint>(c.target);
  auto invalid = [&](const ValuationPoint& w, std::string why) {
    res.status = CertStatus::Invalid;
    res.witness = w;
    res.reason = std::move(why);
    return res;
  };
  if (r.mode == SetMode::Finite) {
    for (const auto& v : r.places)
      if (!(v == c.target)) return invalid(v, "another point of the family is a member");
  } else {
    // Cofinite: some point outside the finite exception list is a member.
    for (int count = 16; count <= 4096; count *= 4) {
      for (const auto& v : candidate_pool(amb, count))
        if (!(v == c.target) && member(v, r)) return invalid(v, "the set is cofinite");
    }
    res.status = CertStatus::Invalid;
    res.reason = "the set is cofinite";
    return res;
  }
  if (!target_field && r.field_point) return invalid(FieldPoint{}, "the field point is a member");
  switch (r.residual) {
    case Residual::None:
    case Residual::Excluded:
      res.status = CertStatus::Valid;
      res.reason = "the set resolves to exactly the target";
      return res;
    case Residual::Included:
      res.status = CertStatus::Invalid;
      res.reason = "every point outside the enumerated family is a member";
      return res;
    case Residual::Unknown:
      break;
  }
  if (amb.kind == AmbientKind::EstKX) {
    const auto& e = std::get<EvalPlace>(c.target);
    if (e.s.is_rational()) {
      try {
        RefutationResult rr = refute_isolation(c.set, e.s.a(), amb.p);
        return invalid(EvalPlace{amb.p, QuadElem(rr.t), 1},
                       "a nearby evaluation extension is also a member (N = " + std::to_string(rr.modulus_exponent) + ")");
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::BudgetExceeded) throw;
      }
    }
  }
  res.status = CertStatus::Unknown;
  res.reason = "membership outside the enumerated family is undecided";
  return res;
}

std::vector<ValuationPoint> field_point_exceptions(const BasicSet& s, const Ambient& amb) {
  if (!s.out.empty()) fail(ErrorKind::PreconditionViolated, "the field point is not in a set with out-generators");
  if (!amb.has_field_point()) fail(ErrorKind::UnsupportedAmbient, amb.tag() + " has no field point");
  ResolvedSet r = resolve(s, amb);
  if (r.mode == SetMode::Cofinite) return r.places;
  return minus(family_points(amb), r.places);
}

BasicSet spec_basic(const Ambient& amb, const std::vector<FieldElem>& v_gens,
                    const std::vector<std::vector<FieldElem>>& d_ideals) {
  const bool integers = amb.kind == AmbientKind::SpecZ;
  if (!integers && amb.kind != AmbientKind::SpecKx)
    fail(ErrorKind::UnsupportedAmbient, "Spec-level sets need SpecZ or SpecKx");
  auto one = [&]() -> FieldElem {
    if (integers) return Rat(1);
    return RatFunc::constant(amb.field, Rat(1));
  };
  BasicSet s;
  for (const auto& a : v_gens) {
    if (is_zero_elem(a)) continue;  // V(0) is everything
    if (integers) s.out.push_back(Rat(integer_of(a)).inverse());
    else s.out.push_back(RatFunc(polynomial_of(a)).inverse());
  }
  for (const auto& ideal : d_ideals) {
    if (integers) {
      Int g = 0;
      for (const auto& e : ideal) g = gcd(g, integer_of(e));
      if (g == 0) s.out.push_back(one());
      else s.in.push_back(Rat(g).inverse());
    } else {
      Poly g(amb.field);
      for (const auto& e : ideal) g = gcd(g, polynomial_of(e));
      if (g.is_zero()) s.out.push_back(one());
      else s.in.push_back(RatFunc(g).inverse());
    }
  }
  s.canonicalize();
  return s;
}

std::string to_string(SetMode m) { return m == SetMode::Finite ? "finite" : "cofinite"; }

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Valid: return "valid";
    case CertStatus::Invalid: return "invalid";
    case CertStatus::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(Residual r) {
  switch (r) {
    case Residual::None: return "none";
    case Residual::Excluded: return "excluded";
    case Residual::Included: return "included";
    case Residual::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace zarcons
