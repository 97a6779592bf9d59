#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zarcons/adapters.hpp"
#include "zarcons/consets.hpp"

namespace zarcons {

enum class VerdictStatus { Isolated, NotIsolated, Perfect, NotPerfect, Unknown };

struct Verdict {
  VerdictStatus status = VerdictStatus::Unknown;
  std::string rule;                  // rule id, e.g. "center-height-vset"
  std::vector<std::string> trace;    // human-readable steps
  std::optional<Certificate> certificate;
};

/// The ambient whose points are Zar(A), when one is shipped: ZarQ (restricted
/// for Z_loc and Z_semi), SpecKx for polynomial rings, ZarLocal2 for kxy_loc,
/// ZarDM for the composite example, a restricted ZarKX for pinch rings.
std::optional<Ambient> ambient_of(const DomainAdapter& a);

/// The basic set B(..) ∩ B(..)^c proposed for isolating v in Zar(A), if any.
std::optional<Certificate> canonical_certificate(const ValuationPoint& v, const DomainAdapter& a);

/// Noetherian criterion: v is isolated iff its center P has height at most one
/// and only finitely many primes contain P.
Verdict decide_isolated_noetherian(const ValuationPoint& v, const DomainAdapter& a);

/// The same criterion for every valuation ring centered on p.
Verdict decide_at_center(const PrimeDesc& p, const DomainAdapter& a);

/// Noetherian adapters go through the criterion; others through certificates
/// and the residue-field reduction for composite places.
Verdict decide_isolated(const ValuationPoint& v, const DomainAdapter& a);

/// Field point of Zar(L|A): isolated iff A is Goldman and L is algebraic over
/// the quotient field of A.
Verdict decide_field_point(const DomainAdapter& a, bool algebraic);

/// A point V ≠ L of Zar(L|K) with trdeg(L/K) = 1. V is isolated once some finitely
/// generated L' ⊆ L has finitely many extensions of V ∩ L' to L; the caller supplies
/// that count, since splitting of places in finite extensions is not computed.
Verdict decide_isolated_trdeg1(std::optional<long> extension_count);

/// Finite places of degree ≤ bound (a sample of them over Q) and inf, each with
/// its certificate in Zar(K(X)|K).
std::vector<std::pair<ValuationPoint, Certificate>> enumerate_isolated_KX(const Field& field, int bound);

struct HomeoClass {
  enum Kind { Dim1, Dim2, Dim3Plus } kind = Dim1;
  long n = 1;  // maximal ideals of the normalization, for Dim1
  friend bool operator==(const HomeoClass&, const HomeoClass&) = default;
};

std::string to_string(const HomeoClass& c);

/// Class of Zar(A)^cons for a countable Noetherian local domain of positive
/// dimension; PreconditionViolated names the failing hypothesis.
HomeoClass homeo_class(const DomainAdapter& a);

struct HomeoResult {
  HomeoClass a, b;
  bool equal = false;
};

HomeoResult classify_homeo(const DomainAdapter& a, const DomainAdapter& b);

enum class PerfBase { Field, Valuation, Domain };
enum class PerfSpace { Zar, Est };

/// Zar(L|B) or est(L|B) for a base B and an extension L of its quotient field K.
struct SpaceDescriptor {
  PerfBase base = PerfBase::Field;
  PerfSpace space = PerfSpace::Zar;
  int trdeg = 0;                      // trdeg(L/K)
  bool finitely_generated = true;     // L finitely generated over K
  bool simple = true;                 // L = K(X) when trdeg is 1
  std::optional<bool> j_zero;         // intersection of the nonzero primes of B is 0
  std::string label;                  // names B in traces
};

/// Descriptor for Zar(K(X)|A) built from an adapter; J = 0 iff A is not Goldman.
SpaceDescriptor descriptor_for(const DomainAdapter& a, PerfSpace space, int trdeg);

Verdict perfectness_verdict(const SpaceDescriptor& d);

std::string to_string(VerdictStatus s);

}  // namespace zarcons
