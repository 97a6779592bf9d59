#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zarcons/expr.hpp"
#include "zarcons/places.hpp"

namespace zarcons {

enum class AmbientKind { ZarQ, ZarKX, SpecZ, SpecKx, ZarLocal2, ZarDM, EstKX };

/// A space of valuation rings (or primes) with a concrete point family.
///
///   ZarQ          Zar(Q): field, p:<prime>. `ZarQ[2,3]` restricts to Zar(S^-1 Z).
///   ZarKX:<F>     Zar(K(X)|K): field, fin:<f>, inf. `ZarKX:Q[X,X-1]` restricts
///                 to the field and the listed finite places.
///   SpecZ         Spec(Z) via Zar(Z): (0) and (p).
///   SpecKx:<F>    Spec(K[X]) via Zar(K[X]): (0) and (f).
///   ZarLocal2:<F> Zar(k[x,y]_(x,y)), partial: field and ordf:<f> are exact; the
///                 valuations centered on the maximal ideal form the residual.
///   ZarDM:<F>     Zar(F + X·F(Y)[[X]]): field, comp:field, comp:fin:<g>, comp:inf.
///   EstKX:<p>     est(Q(X)|Z_(p)), partial: eval:p=<p>,s=<rational> of bounded
///                 height are enumerated; all other extensions form the residual.
struct Ambient {
  AmbientKind kind = AmbientKind::ZarQ;
  Field field;
  Int p = 0;                                  // EstKX
  std::optional<std::vector<Int>> primes;     // ZarQ restriction
  std::optional<std::vector<Poly>> places;    // ZarKX restriction
  long height_bound = 12;                     // EstKX enumeration

  static Ambient parse(std::string_view tag, const std::optional<Field>& default_field = std::nullopt);
  std::string tag() const;
  bool complete() const { return kind != AmbientKind::ZarLocal2 && kind != AmbientKind::EstKX; }
  bool has_field_point() const { return kind != AmbientKind::EstKX; }
  /// Finitely many points (restricted ambients).
  bool finite_family() const { return primes.has_value() || places.has_value(); }

  FieldElem parse_elem(std::string_view text, ParseHints* hints = nullptr) const;
  std::string elem_string(const FieldElem& e) const;
  /// Reads a point in this ambient's notation; Spec ambients also accept (0), (p), (f).
  ValuationPoint parse_point(std::string_view text) const;
  std::string point_string(const ValuationPoint& v) const;
  /// Whether v is one of this ambient's (enumerable) points.
  bool in_family(const ValuationPoint& v) const;
};

/// B(in_1, ..., in_n) ∩ B(out_1)^c ∩ ... ∩ B(out_m)^c. The hints carry
/// irreducibility assertions and factoring atoms for the resolver.
struct BasicSet {
  std::vector<FieldElem> in;
  std::vector<FieldElem> out;
  ParseHints hints;

  /// Deduplicates and sorts generators by printed form.
  void canonicalize();
};

/// A finite union of basic sets. An empty list is the empty set.
struct ConstructibleSet {
  std::vector<BasicSet> disjuncts;
};

enum class SetMode { Finite, Cofinite };

/// How the points outside a partial ambient's enumerated family behave.
enum class Residual { None, Excluded, Included, Unknown };

/// Finite mode lists the members; Cofinite lists the non-members. The field
/// point is reported separately.
struct ResolvedSet {
  SetMode mode = SetMode::Finite;
  std::vector<ValuationPoint> places;
  bool field_point = false;
  Residual residual = Residual::None;

  bool unknown_residual() const { return residual == Residual::Unknown; }
  friend bool operator==(const ResolvedSet& a, const ResolvedSet& b);
};

BasicSet parse_basic(const Ambient& amb, const std::vector<std::string>& in, const std::vector<std::string>& out);

/// Exact resolution (within the enumerated family for partial ambients).
ResolvedSet resolve(const BasicSet& s, const Ambient& amb);
ResolvedSet resolve(const ConstructibleSet& s, const Ambient& amb);

/// Pointwise membership of a family point in a basic set.
bool member(const ValuationPoint& v, const BasicSet& s);

/// Pointwise membership of v in a resolved set.
bool member(const ValuationPoint& v, const ResolvedSet& r);

ResolvedSet set_union(const ResolvedSet& a, const ResolvedSet& b, const Ambient& amb);
ResolvedSet set_intersection(const ResolvedSet& a, const ResolvedSet& b, const Ambient& amb);
ResolvedSet set_complement(const ResolvedSet& a, const Ambient& amb);

ConstructibleSet make_union(const ConstructibleSet& a, const ConstructibleSet& b);
ConstructibleSet make_intersection(const ConstructibleSet& a, const ConstructibleSet& b);
/// Complement of one basic set, as a union of basic sets.
ConstructibleSet complement_of_basic(const BasicSet& s);
/// Sorted, deduplicated disjuncts with canonical generators.
ConstructibleSet normal_form(const ConstructibleSet& s, const Ambient& amb);

struct Certificate {
  ValuationPoint target;
  BasicSet set;
  Ambient ambient;
};

enum class CertStatus { Valid, Invalid, Unknown };

struct CertResult {
  CertStatus status = CertStatus::Unknown;
  std::optional<ValuationPoint> witness;  // another member, when one is named
  std::string reason;
};

/// Valid iff the set resolves to exactly {target}.
CertResult certify_isolated(const Certificate& c);

/// The non-field points excluded from a basic set that contains the field point.
std::vector<ValuationPoint> field_point_exceptions(const BasicSet& s, const Ambient& amb);

/// Up to `count` family points in canonical order, used to name witnesses.
std::vector<ValuationPoint> candidate_pool(const Ambient& amb, int count);

/// Spec-level sets for PIDs: V(a_1) ∩ ... ∩ D(J_1) ∩ ..., translated through
/// V(a) = B(1/a)^c (a ≠ 0) and D(J) = B(1/gcd(J)).
BasicSet spec_basic(const Ambient& amb, const std::vector<FieldElem>& v_gens,
                    const std::vector<std::vector<FieldElem>>& d_ideals);

std::string to_string(SetMode m);
std::string to_string(CertStatus s);
std::string to_string(Residual r);

}  // namespace zarcons
