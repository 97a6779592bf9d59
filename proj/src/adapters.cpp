#include "zarcons/adapters.hpp"

#include <algorithm>
#include <set>

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

std::string trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return std::string(s);
}

[[noreturn]] void not_overring(const ValuationPoint& v, const std::string& id) {
  fail(ErrorKind::InvalidInput, to_string(v) + " does not contain the ring " + id);
}

[[noreturn]] void unsupported_pair(const ValuationPoint& v, const std::string& id, const std::string& supported) {
  fail(ErrorKind::Unsupported, "center of " + to_string(v) + " on " + id + " is not supported; supported: " + supported);
}

[[noreturn]] void bad_prime(const PrimeDesc& p, const std::string& id) {
  fail(ErrorKind::InvalidInput, to_string(p) + " is not a prime of " + id);
}

const Int* int_gen(const PrimeDesc& p) {
  const auto* pp = std::get_if<PrincipalPrime>(&p);
  return pp ? std::get_if<Int>(&pp->gen) : nullptr;
}
const Poly* poly_gen(const PrimeDesc& p) {
  const auto* pp = std::get_if<PrincipalPrime>(&p);
  return pp ? std::get_if<Poly>(&pp->gen) : nullptr;
}
const BivarPoly* bivar_gen(const PrimeDesc& p) {
  const auto* pp = std::get_if<PrincipalPrime>(&p);
  return pp ? std::get_if<BivarPoly>(&pp->gen) : nullptr;
}

PrimeDesc principal(const Int& p) { return PrincipalPrime{p}; }
PrimeDesc principal(const Poly& f) { return PrincipalPrime{f}; }
PrimeDesc principal(const BivarPoly& f) { return PrincipalPrime{f}; }

// ---- integers ---------------------------------------------------------------

// Z, Z_(p) and the semilocal S^-1 Z share one presentation: an optional finite
// set of allowed primes (nullopt = all primes).
class IntegerAdapter : public DomainAdapter {
 public:
  IntegerAdapter(std::string id, std::optional<std::vector<Int>> primes) : id_(std::move(id)), primes_(std::move(primes)) {}

  std::string id() const override { return id_; }
  QuotientField quotient_field() const override { return QuotientField::Rationals; }
  std::optional<int> dim() const override { return 1; }
  bool is_local() const override { return primes_ && primes_->size() == 1; }
  bool is_noetherian() const override { return true; }
  bool is_countable() const override { return true; }
  bool is_goldman() const override { return primes_.has_value(); }
  bool is_integrally_closed() const override { return true; }
  int trdeg() const override { return 0; }

  int height(const PrimeDesc& p) const override {
    validate(p);
    return std::holds_alternative<ZeroPrime>(p) ? 0 : 1;
  }
  bool vset_is_finite(const PrimeDesc& p) const override {
    validate(p);
    return !std::holds_alternative<ZeroPrime>(p) || primes_.has_value();
  }
  std::vector<PrimeDesc> maximal_above(const PrimeDesc& p, int count) const override {
    validate(p);
    if (!std::holds_alternative<ZeroPrime>(p)) return {p};
    std::vector<PrimeDesc> out;
    if (primes_) {
      for (const Int& q : *primes_) out.push_back(principal(q));
    } else {
      for (long q = 2; static_cast<int>(out.size()) < count; ++q)
        if (is_prime(Int(q))) out.push_back(principal(Int(q)));
    }
    if (static_cast<int>(out.size()) > count) out.resize(static_cast<std::size_t>(count));
    return out;
  }
  std::optional<long> normalization_max_count() const override {
    if (!is_local()) return std::nullopt;
    return 1;
  }
  std::vector<PrimeDesc> primes_sample(int bound) const override {
    std::vector<PrimeDesc> out{ZeroPrime{}};
    if (primes_) {
      for (const Int& q : *primes_) out.push_back(principal(q));
    } else {
      for (long q : primes_up_to(bound)) out.push_back(principal(Int(q)));
    }
    return out;
  }
  void validate(const PrimeDesc& p) const override {
    if (std::holds_alternative<ZeroPrime>(p)) return;
    const Int* g = int_gen(p);
    if (!g || *g <= 1 || !is_prime(*g)) bad_prime(p, id_);
    if (primes_ && std::find(primes_->begin(), primes_->end(), *g) == primes_->end()) bad_prime(p, id_);
  }
  std::optional<ValuationPoint> essential_place(const PrimeDesc& p) const override {
    validate(p);
    if (const Int* g = int_gen(p)) return PAdicPlace{*g};
    return FieldPoint{};
  }
  PrimeDesc center(const ValuationPoint& v) const override {
    if (std::holds_alternative<FieldPoint>(v)) return ZeroPrime{};
    if (const auto* pp = std::get_if<PAdicPlace>(&v)) {
      if (primes_ && std::find(primes_->begin(), primes_->end(), pp->p) == primes_->end()) not_overring(v, id_);
      return principal(pp->p);
    }
    unsupported_pair(v, id_, "field, p:<prime>");
  }

 protected:
  std::vector<PrimeDesc> list_vset(const PrimeDesc& p) const override {
    if (!std::holds_alternative<ZeroPrime>(p)) return {p};
    std::vector<PrimeDesc> out{ZeroPrime{}};
    for (const Int& q : *primes_) out.push_back(principal(q));
    return out;
  }

 private:
  std::string id_;
  std::optional<std::vector<Int>> primes_;
};

// ---- K[X] -------------------------------------------------------------------

class PolyRingAdapter : public DomainAdapter {
 public:
  PolyRingAdapter(std::string id, Field f) : id_(std::move(id)), field_(f) {}

  std::string id() const override { return id_; }
  QuotientField quotient_field() const override { return QuotientField::FunctionFieldX; }
  Field base_field() const override { return field_; }
  std::optional<int> dim() const override { return 1; }
  bool is_local() const override { return false; }
  bool is_noetherian() const override { return true; }
  bool is_countable() const override { return true; }
  bool is_goldman() const override { return false; }
  bool is_integrally_closed() const override { return true; }
  int trdeg() const override { return 1; }

  int height(const PrimeDesc& p) const override {
    validate(p);
    return std::holds_alternative<ZeroPrime>(p) ? 0 : 1;
  }
  bool vset_is_finite(const PrimeDesc& p) const override {
    validate(p);
    return !std::holds_alternative<ZeroPrime>(p);
  }
  std::vector<PrimeDesc> maximal_above(const PrimeDesc& p, int count) const override {
    validate(p);
    if (!std::holds_alternative<ZeroPrime>(p)) return {p};
    std::vector<PrimeDesc> out;
    for (const PrimeDesc& q : primes_sample(count + 2))
      if (!std::holds_alternative<ZeroPrime>(q) && static_cast<int>(out.size()) < count) out.push_back(q);
    return out;
  }
  std::vector<PrimeDesc> primes_sample(int bound) const override {
    std::vector<PrimeDesc> out{ZeroPrime{}};
    if (!field_.is_rational()) {
      for (const Poly& f : irreducibles_up_to(field_, std::min(bound, 4))) out.push_back(principal(f));
    } else {
      for (long a = -bound; a <= bound; ++a) out.push_back(principal(Poly::linear(field_, Rat(a))));
      out.push_back(principal(parse_poly("X^2+1", field_)));
    }
    return out;
  }
  void validate(const PrimeDesc& p) const override {
    if (std::holds_alternative<ZeroPrime>(p)) return;
    const Poly* g = poly_gen(p);
    if (!g || !(g->field() == field_) || !g->is_monic() || !is_irreducible(*g)) bad_prime(p, id_);
  }
  std::optional<ValuationPoint> essential_place(const PrimeDesc& p) const override {
    validate(p);
    if (const Poly* g = poly_gen(p)) return FinitePlace{*g};
    return FieldPoint{};
  }
  PrimeDesc center(const ValuationPoint& v) const override {
    if (std::holds_alternative<FieldPoint>(v)) return ZeroPrime{};
    if (const auto* f = std::get_if<FinitePlace>(&v)) {
      if (!(f->f.field() == field_)) fail(ErrorKind::InvalidInput, "place over a different field");
      return principal(f->f);
    }
    if (std::holds_alternative<InfinitePlace>(v) || std::holds_alternative<EvalPlace>(v)) not_overring(v, id_);
    unsupported_pair(v, id_, "field, fin:<f>");
  }

 protected:
  std::vector<PrimeDesc> list_vset(const PrimeDesc& p) const override { return {p}; }

 private:
  std::string id_;
  Field field_;
};

// ---- k[x, y] and its localization at the origin ------------------------------

class PlaneAdapter : public DomainAdapter {
 public:
  PlaneAdapter(std::string id, Field f, bool local) : id_(std::move(id)), field_(f), local_(local) {}

  std::string id() const override { return id_; }
  QuotientField quotient_field() const override { return QuotientField::FunctionFieldXY; }
  Field base_field() const override { return field_; }
  std::optional<int> dim() const override { return 2; }
  bool is_local() const override { return local_; }
  bool is_noetherian() const override { return true; }
  bool is_countable() const override { return true; }
  bool is_goldman() const override { return false; }
  bool is_integrally_closed() const override { return true; }
  int trdeg() const override { return 2; }

  MaxPoint origin() const { return MaxPoint{Rat(0), Poly::variable(field_)}; }

  int height(const PrimeDesc& p) const override {
    validate(p);
    if (std::holds_alternative<ZeroPrime>(p)) return 0;
    return std::holds_alternative<PrincipalPrime>(p) ? 1 : 2;
  }
  bool vset_is_finite(const PrimeDesc& p) const override {
    validate(p);
    if (std::holds_alternative<MaxPoint>(p)) return true;
    // a curve in the local ring only meets the closed point; globally it has
    // infinitely many closed points, and (0) lies under every prime
    return local_ && std::holds_alternative<PrincipalPrime>(p);
  }
  std::vector<PrimeDesc> maximal_above(const PrimeDesc& p, int count) const override {
    validate(p);
    if (std::holds_alternative<MaxPoint>(p)) return {p};
    if (local_) return {origin()};
    std::vector<PrimeDesc> out;
    const BivarPoly* f = bivar_gen(p);
    for (long k = 0; static_cast<int>(out.size()) < count && k < 4L * count + 40; ++k) {
      const Rat a(k % 2 == 0 ? k / 2 : -(k + 1) / 2);
      const Rat an = field_.normalize(a);
      if (std::any_of(out.begin(), out.end(), [&](const PrimeDesc& q) { return std::get<MaxPoint>(q).a == an; }))
        continue;
      if (!f) {
        out.push_back(MaxPoint{an, Poly::variable(field_)});
        continue;
      }
      const Poly fy = f->eval_x(an);
      if (fy.is_zero()) {
        // the line x = a lies on the curve; every point of it is above (f)
        for (long b = 0; static_cast<int>(out.size()) < count && b < count; ++b)
          out.push_back(MaxPoint{an, Poly::linear(field_, field_.normalize(Rat(b)))});
        continue;
      }
      if (fy.degree() < 1) continue;
      try {
        out.push_back(MaxPoint{an, factor(fy).front().f});
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnsupportedFactorization) throw;
      }
    }
    return out;
  }
  std::vector<PrimeDesc> primes_sample(int bound) const override {
    std::vector<PrimeDesc> out{ZeroPrime{}, origin()};
    const BivarPoly x = BivarPoly::x(field_), y = BivarPoly::y(field_);
    out.push_back(principal(x));
    out.push_back(principal(y));
    for (int k = 1; k <= bound; ++k) out.push_back(principal((y - x.pow(static_cast<unsigned>(k))).normalized()));
    return out;
  }
  void validate(const PrimeDesc& p) const override {
    if (std::holds_alternative<ZeroPrime>(p)) return;
    if (const auto* m = std::get_if<MaxPoint>(&p)) {
      if (!(m->g.field() == field_) || !m->g.is_monic() || !is_irreducible(m->g)) bad_prime(p, id_);
      if (local_ && !(*m == origin())) bad_prime(p, id_);
      return;
    }
    const BivarPoly* f = bivar_gen(p);
    if (!f || !(f->field() == field_) || f->is_constant() || !(f->normalized() == *f)) bad_prime(p, id_);
    if (local_ && !f->eval(Rat(0), Rat(0)).is_zero()) bad_prime(p, id_);
    std::vector<BivarFactor> fs = bivar_factor(*f);
    if (fs.size() != 1 || fs.front().mult != 1) bad_prime(p, id_);
  }
  std::optional<ValuationPoint> essential_place(const PrimeDesc& p) const override {
    validate(p);
    if (std::holds_alternative<ZeroPrime>(p)) return FieldPoint{};
    if (const BivarPoly* f = bivar_gen(p)) {
      if (f->eval(Rat(0), Rat(0)).is_zero()) return OrdPlace{*f};
      return std::nullopt;  // the order valuation exists but is not in the shipped taxonomy
    }
    return std::nullopt;  // two-dimensional regular local rings are not valuation rings
  }
  PrimeDesc center(const ValuationPoint& v) const override {
    if (std::holds_alternative<FieldPoint>(v)) return ZeroPrime{};
    if (const auto* o = std::get_if<OrdPlace>(&v)) {
      if (!(o->f.field() == field_)) fail(ErrorKind::InvalidInput, "place over a different field");
      return principal(o->f);
    }
    if (const auto* c = std::get_if<CompositePlace>(&v)) {
      if (std::holds_alternative<FieldPoint>(c->residue)) return principal(BivarPoly::x(field_));
      if (const auto* f = std::get_if<FinitePlace>(&c->residue)) {
        if (!(f->f.field() == field_)) fail(ErrorKind::InvalidInput, "place over a different field");
        MaxPoint m{Rat(0), f->f};
        if (local_ && !(m == origin())) not_overring(v, id_);
        return m;
      }
      not_overring(v, id_);
    }
    unsupported_pair(v, id_, "field, ordf:<f>, comp:field, comp:fin:<g>");
  }

 protected:
  std::vector<PrimeDesc> list_vset(const PrimeDesc& p) const override {
    if (std::holds_alternative<MaxPoint>(p)) return {p};
    return {p, origin()};
  }

 private:
  std::string id_;
  Field field_;
  bool local_;
};

// ---- k[x, y, z]_(x,y,z) ------------------------------------------------------

// Primes are (0), height-one primes generated by irreducibles in x and y
// through the origin, and the maximal ideal.
class SpaceLocalAdapter : public DomainAdapter {
 public:
  SpaceLocalAdapter(std::string id, Field f) : id_(std::move(id)), field_(f) {}

  std::string id() const override { return id_; }
  QuotientField quotient_field() const override { return QuotientField::FunctionFieldXYZ; }
  Field base_field() const override { return field_; }
  std::optional<int> dim() const override { return 3; }
  bool is_local() const override { return true; }
  bool is_noetherian() const override { return true; }
  bool is_countable() const override { return true; }
  bool is_goldman() const override { return false; }
  bool is_integrally_closed() const override { return true; }
  int trdeg() const override { return 3; }

  static LocalMax max_ideal() { return LocalMax{"(x,y,z)"}; }

  int height(const PrimeDesc& p) const override {
    validate(p);
    if (std::holds_alternative<ZeroPrime>(p)) return 0;
    return std::holds_alternative<PrincipalPrime>(p) ? 1 : 3;
  }
  bool vset_is_finite(const PrimeDesc& p) const override {
    validate(p);
    // below the maximal ideal sit infinitely many height-two primes such as (x, y - c z)
    return std::holds_alternative<LocalMax>(p);
  }
  std::vector<PrimeDesc> maximal_above(const PrimeDesc& p, int) const override {
    validate(p);
    return {max_ideal()};
  }
  std::vector<PrimeDesc> primes_sample(int bound) const override {
    std::vector<PrimeDesc> out{ZeroPrime{}, max_ideal()};
    const BivarPoly x = BivarPoly::x(field_), y = BivarPoly::y(field_);
    out.push_back(principal(x));
    out.push_back(principal(y));
    for (int k = 1; k <= bound; ++k) out.push_back(principal((y - x.pow(static_cast<unsigned>(k))).normalized()));
    return out;
  }
  void validate(const PrimeDesc& p) const override {
    if (std::holds_alternative<ZeroPrime>(p)) return;
    if (const auto* m = std::get_if<LocalMax>(&p)) {
      if (!(*m == max_ideal())) bad_prime(p, id_);
      return;
    }
    const BivarPoly* f = bivar_gen(p);
    if (!f || !(f->field() == field_) || f->is_constant() || !f->eval(Rat(0), Rat(0)).is_zero()) bad_prime(p, id_);
    std::vector<BivarFactor> fs = bivar_factor(*f);
    if (fs.size() != 1 || fs.front().mult != 1) bad_prime(p, id_);
  }
  PrimeDesc parse_prime(std::string_view text) const override {
    const std::string t = trim(text);
    if (t == "(x,y,z)" || t == "m") return max_ideal();
    return DomainAdapter::parse_prime(text);
  }
  std::optional<ValuationPoint> essential_place(const PrimeDesc& p) const override {
    validate(p);
    if (std::holds_alternative<ZeroPrime>(p)) return FieldPoint{};
    return std::nullopt;  // order valuations of k(x, y, z) are outside the taxonomy
  }
  PrimeDesc center(const ValuationPoint& v) const override {
    if (std::holds_alternative<FieldPoint>(v)) return ZeroPrime{};
    unsupported_pair(v, id_, "field (other points are queried by their center)");
  }

 protected:
  std::vector<PrimeDesc> list_vset(const PrimeDesc& p) const override { return {p}; }

 private:
  std::string id_;
  Field field_;
};

// ---- F + X·F(Y)[[X]] ---------------------------------------------------------

class CompositeExampleAdapter : public DomainAdapter {
 public:
  CompositeExampleAdapter(std::string id, Field f) : id_(std::move(id)), field_(f) {}

  std::string id() const override { return id_; }
  QuotientField quotient_field() const override { return QuotientField::LaurentXY; }
  Field base_field() const override { return field_; }
  std::optional<int> dim() const override { return 1; }
  bool is_local() const override { return true; }
  bool is_noetherian() const override { return false; }  // M/M² is infinite-dimensional over F
  bool is_countable() const override { return false; }
  bool is_goldman() const override { return true; }  // F(Y)((X)) = D[1/X]
  bool is_integrally_closed() const override { return true; }
  int trdeg() const override { return 2; }

  static LocalMax max_ideal() { return LocalMax{"M"}; }

  int height(const PrimeDesc& p) const override {
    validate(p);
    return std::holds_alternative<ZeroPrime>(p) ? 0 : 1;
  }
  bool vset_is_finite(const PrimeDesc& p) const override {
    validate(p);
    return true;
  }
  std::vector<PrimeDesc> maximal_above(const PrimeDesc& p, int) const override {
    validate(p);
    return {max_ideal()};
  }
  std::optional<long> normalization_max_count() const override { return 1; }
  std::vector<PrimeDesc> primes_sample(int) const override { return {ZeroPrime{}, max_ideal()}; }
  void validate(const PrimeDesc& p) const override {
    if (std::holds_alternative<ZeroPrime>(p)) return;
    if (const auto* m = std::get_if<LocalMax>(&p); m && *m == max_ideal()) return;
    bad_prime(p, id_);
  }
  PrimeDesc parse_prime(std::string_view text) const override {
    const std::string t = trim(text);
    if (t == "M" || t == "m") return max_ideal();
    return DomainAdapter::parse_prime(text);
  }
  std::optional<ValuationPoint> essential_place(const PrimeDesc& p) const override {
    validate(p);
    if (std::holds_alternative<ZeroPrime>(p)) return FieldPoint{};
    return std::nullopt;  // D_M = D is not a valuation ring
  }
  PrimeDesc center(const ValuationPoint& v) const override {
    if (std::holds_alternative<FieldPoint>(v)) return ZeroPrime{};
    if (std::holds_alternative<CompositePlace>(v)) return max_ideal();
    unsupported_pair(v, id_, "field, comp:<residue point>");
  }

 protected:
  std::vector<PrimeDesc> list_vset(const PrimeDesc& p) const override {
    if (std::holds_alternative<ZeroPrime>(p)) return {p, max_ideal()};
    return {p};
  }

 private:
  std::string id_;
  Field field_;
};

// ---- k + J, J the Jacobson radical of k[x] localized at x = 0, ..., n-1 --------

// A one-dimensional local Noetherian domain whose normalization (the semilocal
// ring itself) has n maximal ideals.
class PinchAdapter : public DomainAdapter {
 public:
  PinchAdapter(std::string id, Field f, int n) : id_(std::move(id)), field_(f), n_(n) {
    if (n < 1) fail(ErrorKind::InvalidInput, "pinch needs at least one point");
    if (!f.is_rational() && n > f.characteristic())
      fail(ErrorKind::InvalidInput, "pinch over F_p needs at most p points");
  }

  std::string id() const override { return id_; }
  QuotientField quotient_field() const override { return QuotientField::FunctionFieldX; }
  Field base_field() const override { return field_; }
  std::optional<int> dim() const override { return 1; }
  bool is_local() const override { return true; }
  bool is_noetherian() const override { return true; }
  bool is_countable() const override { return true; }
  bool is_goldman() const override { return true; }
  bool is_integrally_closed() const override { return n_ == 1; }
  int trdeg() const override { return 1; }

  static LocalMax max_ideal() { return LocalMax{"m"}; }

  int height(const PrimeDesc& p) const override {
    validate(p);
    return std::holds_alternative<ZeroPrime>(p) ? 0 : 1;
  }
  bool vset_is_finite(const PrimeDesc& p) const override {
    validate(p);
    return true;
  }
  std::vector<PrimeDesc> maximal_above(const PrimeDesc& p, int) const override {
    validate(p);
    return {max_ideal()};
  }
  std::optional<long> normalization_max_count() const override { return n_; }
  std::vector<PrimeDesc> primes_sample(int) const override { return {ZeroPrime{}, max_ideal()}; }
  void validate(const PrimeDesc& p) const override {
    if (std::holds_alternative<ZeroPrime>(p)) return;
    if (const auto* m = std::get_if<LocalMax>(&p); m && *m == max_ideal()) return;
    bad_prime(p, id_);
  }
  std::optional<ValuationPoint> essential_place(const PrimeDesc& p) const override {
    validate(p);
    if (std::holds_alternative<ZeroPrime>(p)) return FieldPoint{};
    if (n_ == 1) return FinitePlace{Poly::variable(field_)};
    return std::nullopt;
  }
  PrimeDesc center(const ValuationPoint& v) const override {
    if (std::holds_alternative<FieldPoint>(v)) return ZeroPrime{};
    if (const auto* f = std::get_if<FinitePlace>(&v)) {
      if (f->f.degree() == 1 && f->f.field() == field_) {
        const Rat a = field_.normalize(-f->f.coeff(0));
        for (int i = 0; i < n_; ++i)
          if (field_.normalize(Rat(i)) == a) return max_ideal();
      }
      not_overring(v, id_);
    }
    if (std::holds_alternative<InfinitePlace>(v)) not_overring(v, id_);
    unsupported_pair(v, id_, "field, fin:X-a");
  }

 protected:
  std::vector<PrimeDesc> list_vset(const PrimeDesc& p) const override {
    if (std::holds_alternative<ZeroPrime>(p)) return {p, max_ideal()};
    return {p};
  }

 private:
  std::string id_;
  Field field_;
  int n_;
};

// ---- fields -----------------------------------------------------------------

class FieldAdapter : public DomainAdapter {
 public:
  FieldAdapter(std::string id, Field f) : id_(std::move(id)), field_(f) {}

  std::string id() const override { return id_; }
  QuotientField quotient_field() const override {
    return field_.is_rational() ? QuotientField::Rationals : QuotientField::FiniteField;
  }
  Field base_field() const override { return field_; }
  std::optional<int> dim() const override { return 0; }
  bool is_local() const override { return true; }
  bool is_noetherian() const override { return true; }
  bool is_countable() const override { return true; }
  bool is_goldman() const override { return true; }
  bool is_integrally_closed() const override { return true; }
  int trdeg() const override { return 0; }

  int height(const PrimeDesc& p) const override {
    validate(p);
    return 0;
  }
  bool vset_is_finite(const PrimeDesc& p) const override {
    validate(p);
    return true;
  }
  std::vector<PrimeDesc> maximal_above(const PrimeDesc& p, int) const override {
    validate(p);
    return {p};
  }
  std::vector<PrimeDesc> primes_sample(int) const override { return {ZeroPrime{}}; }
  void validate(const PrimeDesc& p) const override {
    if (!std::holds_alternative<ZeroPrime>(p)) bad_prime(p, id_);
  }
  std::optional<ValuationPoint> essential_place(const PrimeDesc& p) const override {
    validate(p);
    return FieldPoint{};
  }
  PrimeDesc center(const ValuationPoint& v) const override {
    if (std::holds_alternative<FieldPoint>(v)) return ZeroPrime{};
    unsupported_pair(v, id_, "field");
  }

 protected:
  std::vector<PrimeDesc> list_vset(const PrimeDesc& p) const override { return {p}; }

 private:
  std::string id_;
  Field field_;
};

std::vector<Int> parse_prime_list(std::string_view text) {
  std::set<Int> seen;
  std::string item;
  auto flush = [&]() {
    const std::string t = trim(item);
    item.clear();
    if (t.empty()) fail(ErrorKind::InvalidInput, "empty prime in list");
    Rat v = parse_rational(t);
    if (!v.is_integer()) fail(ErrorKind::InvalidInput, "prime list entries must be integers");
    require_prime(v.num(), "prime list entry");
    seen.insert(v.num());
  };
  for (char c : text) {
    if (c == ',') flush();
    else item.push_back(c);
  }
  flush();
  return {seen.begin(), seen.end()};
}

}  // namespace

std::string to_string(const PrimeDesc& p) {
  return std::visit(overloaded{
                        [](const ZeroPrime&) -> std::string { return "(0)"; },
                        [](const PrincipalPrime& q) -> std::string {
                          return std::visit(overloaded{
                                                [](const Int& n) { return "(" + n.get_str() + ")"; },
                                                [](const Poly& f) { return "(" + f.to_string("X") + ")"; },
                                                [](const BivarPoly& f) { return "(" + f.to_string() + ")"; },
                                            },
                                            q.gen);
                        },
                        [](const MaxPoint& m) -> std::string {
                          const Poly xa = Poly::linear(m.g.field(), m.a);
                          return "(" + xa.to_string("x") + "," + m.g.to_string("y") + ")";
                        },
                        [](const LocalMax& m) -> std::string { return m.label; },
                    },
                    p);
}

std::optional<std::vector<PrimeDesc>> DomainAdapter::vset_list(const PrimeDesc& p) const {
  if (!vset_is_finite(p)) return std::nullopt;
  return list_vset(p);
}

PrimeDesc DomainAdapter::parse_prime(std::string_view text) const {
  std::string t = trim(text);
  if (t == "0" || t == "(0)") return ZeroPrime{};
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  PrimeDesc out;
  switch (quotient_field()) {
    case QuotientField::Rationals:
    case QuotientField::FiniteField: {
      Rat v = parse_rational(t);
      if (!v.is_integer()) fail(ErrorKind::InvalidInput, "prime must be an integer: " + t);
      out = principal(abs(v.num()));
      break;
    }
    case QuotientField::FunctionFieldX: {
      if (t == "m") {
        out = LocalMax{"m"};
        break;
      }
      out = principal(parse_poly(t, base_field()).monic());
      break;
    }
    case QuotientField::FunctionFieldXY:
    case QuotientField::FunctionFieldXYZ: {
      const std::size_t comma = t.find(',');
      if (comma == std::string::npos) {
        out = principal(parse_bivar_poly(t, base_field()).normalized());
        break;
      }
      // (x - a, g(y))
      const Field f = base_field();
      const BivarPoly first = parse_bivar_poly(t.substr(0, comma), f);
      const BivarPoly second = parse_bivar_poly(t.substr(comma + 1), f);
      if (first.deg_y() > 0 || first.deg_x() != 1 || second.deg_x() > 0 || second.deg_y() < 1)
        fail(ErrorKind::InvalidInput, "maximal ideals are written (x-a,g(y)): " + t);
      const Poly lin = first.eval_y(Rat(0)).monic();
      out = MaxPoint{f.normalize(-lin.coeff(0)), second.coeff_x(0).monic()};
      break;
    }
    case QuotientField::LaurentXY:
      fail(ErrorKind::InvalidInput, "unknown prime: " + t);
  }
  validate(out);
  return out;
}

std::unique_ptr<DomainAdapter> make_adapter(std::string_view id_view) {
  const std::string id = trim(id_view);
  auto after = [&id](std::string_view prefix) -> std::optional<std::string> {
    if (id.rfind(prefix, 0) == 0) return id.substr(prefix.size());
    return std::nullopt;
  };
  if (id == "Z") return std::make_unique<IntegerAdapter>(id, std::nullopt);
  if (auto rest = after("Z_loc:")) {
    std::vector<Int> ps = parse_prime_list(*rest);
    if (ps.size() != 1) fail(ErrorKind::InvalidInput, "Z_loc takes one prime");
    return std::make_unique<IntegerAdapter>("Z_loc:" + ps[0].get_str(), ps);
  }
  if (auto rest = after("Z_semi:")) {
    std::vector<Int> ps = parse_prime_list(*rest);
    std::string canon = "Z_semi:";
    for (std::size_t i = 0; i < ps.size(); ++i) canon += (i ? "," : "") + ps[i].get_str();
    return std::make_unique<IntegerAdapter>(canon, ps);
  }
  if (auto rest = after("Fp[x]:")) {
    const Field f = Field::parse("F" + trim(*rest));
    return std::make_unique<PolyRingAdapter>("Fp[x]:" + std::to_string(f.characteristic()), f);
  }
  if (id == "Q[x]") return std::make_unique<PolyRingAdapter>(id, Field::rationals());
  if (auto rest = after("kxy:")) {
    const Field f = Field::parse(trim(*rest));
    return std::make_unique<PlaneAdapter>("kxy:" + f.tag(), f, false);
  }
  if (auto rest = after("kxy_loc:")) {
    const Field f = Field::parse(trim(*rest));
    return std::make_unique<PlaneAdapter>("kxy_loc:" + f.tag(), f, true);
  }
  if (auto rest = after("kxyz_loc:")) {
    const Field f = Field::parse(trim(*rest));
    return std::make_unique<SpaceLocalAdapter>("kxyz_loc:" + f.tag(), f);
  }
  if (auto rest = after("DM_example:")) {
    const Field f = Field::parse(trim(*rest));
    return std::make_unique<CompositeExampleAdapter>("DM_example:" + f.tag(), f);
  }
  if (auto rest = after("pinch:")) {
    const std::size_t colon = rest->rfind(':');
    if (colon == std::string::npos) fail(ErrorKind::InvalidInput, "pinch:<field>:<n>");
    const Field f = Field::parse(trim(rest->substr(0, colon)));
    const Rat n = parse_rational(rest->substr(colon + 1));
    if (!n.is_integer() || n.num() < 1 || n.num() > 64) fail(ErrorKind::InvalidInput, "pinch point count must be 1..64");
    const int count = static_cast<int>(n.num().get_si());
    return std::make_unique<PinchAdapter>("pinch:" + f.tag() + ":" + std::to_string(count), f, count);
  }
  if (id == "Q") return std::make_unique<FieldAdapter>(id, Field::rationals());
  if (auto rest = after("F:")) {
    const Field f = Field::parse("F" + trim(*rest));
    return std::make_unique<FieldAdapter>("F:" + std::to_string(f.characteristic()), f);
  }
  fail(ErrorKind::InvalidInput, "unknown adapter: " + id);
}

PrimeDesc center(const ValuationPoint& v, const DomainAdapter& a) { return a.center(v); }

}  // namespace zarcons
