#pragma once

// Dense polynomials over F_p on machine words; the hot path behind Poly and factor().

#include <cstdint>
#include <vector>

#include "zarcons/poly.hpp"

namespace zarcons::detail {

struct FpPoly {
  long p = 2;
  std::vector<long> c;  // ascending, trimmed

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  long lead() const { return c.back(); }
  void trim() { while (!c.empty() && c.back() == 0) c.pop_back(); }
};

FpPoly from_poly(const Poly& f);
Poly to_poly(const FpPoly& f);

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_scale(const FpPoly& a, long s);
void fp_divmod(const FpPoly& a, const FpPoly& b, FpPoly* q, FpPoly* r);
FpPoly fp_mod(const FpPoly& a, const FpPoly& m);
FpPoly fp_monic(const FpPoly& a);
FpPoly fp_gcd(FpPoly a, FpPoly b);
FpPoly fp_derivative(const FpPoly& a);
FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m);
/// base^e mod m, e given as an arbitrary-precision integer.
FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& m);
FpPoly fp_x(long p);
FpPoly fp_const(long p, long v);

}  // namespace zarcons::detail
