#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zarcons/places.hpp"

namespace zarcons {

struct ZeroPrime {
  friend bool operator==(const ZeroPrime&, const ZeroPrime&) = default;
};

/// A height-one prime (g): a prime integer, a monic irreducible in K[X], or a
/// normalized irreducible in k[x, y].
struct PrincipalPrime {
  std::variant<Int, Poly, BivarPoly> gen;
  friend bool operator==(const PrincipalPrime&, const PrincipalPrime&) = default;
};

/// The maximal ideal (x − a, g(y)) of k[x, y], g monic irreducible. With
/// a = 0 and g = y this is the maximal ideal of k[x, y]_(x,y).
struct MaxPoint {
  Rat a;
  Poly g;
  friend bool operator==(const MaxPoint&, const MaxPoint&) = default;
};

/// The maximal ideal of a local adapter that has no generator form above.
struct LocalMax {
  std::string label;
  friend bool operator==(const LocalMax&, const LocalMax&) = default;
};

using PrimeDesc = std::variant<ZeroPrime, PrincipalPrime, MaxPoint, LocalMax>;

std::string to_string(const PrimeDesc& p);

enum class QuotientField { Rationals, FiniteField, FunctionFieldX, FunctionFieldXY, FunctionFieldXYZ, LaurentXY };

/// A concrete ring presentation with the oracles the isolation criteria need.
class DomainAdapter {
 public:
  virtual ~DomainAdapter() = default;

  virtual std::string id() const = 0;
  virtual QuotientField quotient_field() const = 0;
  virtual Field base_field() const { return Field::rationals(); }
  /// Krull dimension; nullopt means infinite.
  virtual std::optional<int> dim() const = 0;
  virtual bool is_local() const = 0;
  virtual bool is_noetherian() const = 0;
  virtual bool is_countable() const = 0;
  /// The quotient field is a finitely generated algebra over the ring.
  virtual bool is_goldman() const = 0;
  virtual bool is_integrally_closed() const = 0;
  /// Transcendence degree of the quotient field over its prime field.
  virtual int trdeg() const = 0;

  virtual int height(const PrimeDesc& p) const = 0;
  virtual bool vset_is_finite(const PrimeDesc& p) const = 0;
  /// The primes containing p, when there are finitely many.
  std::optional<std::vector<PrimeDesc>> vset_list(const PrimeDesc& p) const;
  /// Up to `count` maximal ideals containing p.
  virtual std::vector<PrimeDesc> maximal_above(const PrimeDesc& p, int count) const = 0;
  /// Number of maximal ideals of the normalization (dimension-one local rings).
  virtual std::optional<long> normalization_max_count() const { return std::nullopt; }
  virtual std::vector<PrimeDesc> primes_sample(int bound) const = 0;

  /// Rejects descriptions that are not primes of this ring.
  virtual void validate(const PrimeDesc& p) const = 0;
  virtual PrimeDesc parse_prime(std::string_view text) const;

  /// The localization at p when it is a valuation ring, as a place.
  virtual std::optional<ValuationPoint> essential_place(const PrimeDesc& p) const = 0;

  /// The center m_V ∩ A of a valuation overring V.
  virtual PrimeDesc center(const ValuationPoint& v) const = 0;

 protected:
  virtual std::vector<PrimeDesc> list_vset(const PrimeDesc& p) const = 0;
};

/// Registry: Z, Z_loc:<p>, Z_semi:<p1,...>, Fp[x]:<p>, Q[x], kxy:<field>,
/// kxy_loc:<field>, kxyz_loc:<field>, DM_example:<field>, pinch:<field>:<n>,
/// Q, F:<p>.
std::unique_ptr<DomainAdapter> make_adapter(std::string_view id);

/// center(V, A); throws Unsupported for pairs outside the supported table and
/// InvalidInput when V does not contain A.
PrimeDesc center(const ValuationPoint& v, const DomainAdapter& a);

}  // namespace zarcons
