#include <gtest/gtest.h>

#include <random>

#include "zarcons/error.hpp"
#include "zarcons/expr.hpp"
#include "zarcons/factor.hpp"
#include "zarcons/places.hpp"

using namespace zarcons;

namespace {

const Field kQ = Field::rationals();
const Field kF5 = Field::prime(5);

ValuationPoint place(const char* s, const Field& f = kQ) { return parse_place(s, f); }
FieldElem R(const char* s, const Field& f = kQ) { return parse_ratfunc(s, f); }
FieldElem B(const char* s, const Field& f = kQ) { return parse_bivar(s, f); }

RatFunc random_ratfunc(std::mt19937_64& rng, const Field& f, int max_deg, int height) {
  std::uniform_int_distribution<int> deg(0, max_deg), c(-height, height);
  auto poly = [&] {
    std::vector<Rat> cs;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) cs.emplace_back(c(rng));
    return Poly(f, cs);
  };
  Poly num = poly(), den = poly();
  while (den.is_zero()) den = poly();
  return RatFunc(num, den);
}

BivarRatFunc random_bivar(std::mt19937_64& rng, const Field& f, int max_deg, int height) {
  std::uniform_int_distribution<int> deg(0, max_deg), c(-height, height);
  auto poly = [&] {
    BivarPoly p(f);
    for (int i = 0; i <= deg(rng); ++i)
      for (int j = 0; j + i <= max_deg; ++j)
        if (c(rng) % 2 == 0) p = p + BivarPoly::monomial(f, Rat(c(rng)), i, j);
    return p;
  };
  BivarPoly num = poly(), den = poly();
  while (den.is_zero()) den = poly();
  return BivarRatFunc(num, den);
}

// Naive order at a finite place: strip f from numerator and denominator.
long naive_ord(const RatFunc& phi, const Poly& f) {
  long v = 0;
  Poly n = phi.num(), d = phi.den();
  while (!n.is_zero() && (n % f).is_zero()) { n = n / f; ++v; }
  while ((d % f).is_zero()) { d = d / f; --v; }
  return v;
}

}  // namespace

TEST(Places, MembershipExamples) {
  EXPECT_FALSE(contains(place("p:2"), Rat(3, 4)));
  EXPECT_TRUE(contains(place("field"), FieldElem(Rat(1, 7))));
  EXPECT_TRUE(contains(place("eval:p=2,s=3"), R("(X-1)/2")));
  // ord_X = 0 and the residue (Y + 0)/Y = 1 lies in every W.
  EXPECT_TRUE(contains(place("comp:fin:Y"), B("(Y+X)/Y")));
  EXPECT_FALSE(contains(place("comp:fin:Y"), B("(X+1)/Y")));
  EXPECT_TRUE(contains(place("comp:fin:Y"), B("X/Y^5")));
  EXPECT_FALSE(contains(place("comp:field"), B("1/X")));
  EXPECT_TRUE(contains(place("inf"), R("X/(X^2+1)")));
  EXPECT_FALSE(contains(place("inf"), R("X^2")));
  EXPECT_TRUE(contains(place("ordf:y^3-x"), B("y/x")));
  EXPECT_FALSE(contains(place("ordf:y^3-x"), B("x/(y^3-x)^2")));
}

TEST(Places, ParseAndPrint) {
  EXPECT_EQ(to_string(place("fin:2*X^2+2")), "fin:X^2+1");
  EXPECT_EQ(to_string(place("comp:fin:Y-2")), "comp:fin:Y-2");
  EXPECT_EQ(to_string(place("comp:inf")), "comp:inf");
  EXPECT_EQ(to_string(place("eval:p=7,s=3+sqrt(2),root=-")), "eval:p=7,s=3+sqrt(2),root=-");
  // 3 is inert for d = 2, so the root sign carries no information.
  EXPECT_EQ(to_string(place("eval:p=3,s=sqrt(2),root=-")), "eval:p=3,s=sqrt(2)");
  EXPECT_EQ(to_string(place("fin:X+3", kF5)), "fin:X-2");
  EXPECT_THROW(place("p:6"), Error);
  EXPECT_THROW(place("fin:X^2-1"), Error);
  EXPECT_THROW(place("ordf:y-1"), Error);
  EXPECT_THROW(place("ordf:x*y"), Error);
  EXPECT_THROW(place("eval:p=2,s=sqrt(2)*sqrt(3)"), Error);
  EXPECT_EQ(to_string(place("eval:p=3,s=sqrt(8)")), "eval:p=3,s=2*sqrt(2)");
  EXPECT_THROW(contains(place("p:2"), R("X")), Error);
}

TEST(Places, CanonicalOrder) {
  std::vector<ValuationPoint> v = {place("inf"), place("fin:X+1"), place("field"), place("p:3"),
                                   place("fin:X^2+1"), place("p:2"), place("fin:X")};
  std::sort(v.begin(), v.end(), place_less);
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(to_string(x));
  EXPECT_EQ(s, (std::vector<std::string>{"field", "p:2", "p:3", "fin:X", "fin:X+1", "fin:X^2+1", "inf"}));
}

TEST(Places, ResidueDescent) {
  EXPECT_EQ(to_string(residue_descent(place("comp:fin:Y-2"))), "fin:X-2");
  EXPECT_TRUE(std::holds_alternative<InfinitePlace>(residue_descent(place("comp:inf"))));
  EXPECT_THROW(residue_descent(place("p:2")), Error);
}

TEST(Places, CompositeCoherenceProbe) {
  std::mt19937_64 rng(11);
  const std::vector<ValuationPoint> pts = {place("comp:field"), place("comp:fin:Y"), place("comp:fin:Y^2+1"),
                                           place("comp:inf")};
  int probes = 0;
  while (probes < 100) {
    BivarRatFunc phi = random_bivar(rng, kQ, 3, 4);
    if (phi.is_zero() || ord_x(phi) != Valuation(0)) continue;
    ++probes;
    // Residue: substitute X = 0 in numerator and denominator.
    RatFunc res(phi.num().eval_x(Rat(0)), phi.den().eval_x(Rat(0)));
    for (const auto& v : pts) {
      ValuationPoint w = residue_descent(v);
      bool expect = std::holds_alternative<FieldPoint>(w) || ord_place(res, w) >= Valuation(0);
      EXPECT_EQ(contains(v, phi), expect) << to_string(v) << " " << phi.to_string();
    }
  }
}

TEST(Places, FinitePlaceAgreesWithNaiveOrder) {
  std::mt19937_64 rng(5);
  const std::vector<Poly> fs = irreducibles_up_to(kF5, 2);
  for (int i = 0; i < 200; ++i) {
    RatFunc phi = random_ratfunc(rng, kF5, 4, 4);
    if (phi.is_zero()) continue;
    for (const auto& f : fs) EXPECT_EQ(contains(FinitePlace{f}, phi), naive_ord(phi, f) >= 0);
  }
}

TEST(Places, ValuationRingLawAndRingClosure) {
  std::mt19937_64 rng(7);
  const std::vector<ValuationPoint> uni = {place("fin:X"),          place("fin:X^2+1"), place("inf"),
                                           place("eval:p=2,s=3"),   place("eval:p=3,s=1/3"),
                                           place("eval:p=3,s=sqrt(2)"), place("eval:p=7,s=1+sqrt(2)"),
                                           place("eval:p=7,s=1+sqrt(2),root=-"), place("eval:p=2,s=sqrt(3)"),
                                           place("eval:p=5,s=sqrt(5)")};
  for (int i = 0; i < 150; ++i) {
    RatFunc a = random_ratfunc(rng, kQ, 3, 6), b = random_ratfunc(rng, kQ, 3, 6);
    if (a.is_zero()) continue;
    for (const auto& v : uni) {
      bool in = contains(v, a), inv = contains(v, a.inverse());
      EXPECT_TRUE(in || inv) << to_string(v) << " " << a.to_string();
      if (contains(v, a) && contains(v, b)) {
        EXPECT_TRUE(contains(v, a + b));
        EXPECT_TRUE(contains(v, a * b));
      }
    }
  }
  const std::vector<ValuationPoint> bi = {place("ordf:x"), place("ordf:y^2-x^3"), place("comp:fin:Y"),
                                          place("comp:inf"), place("comp:field")};
  for (int i = 0; i < 150; ++i) {
    BivarRatFunc a = random_bivar(rng, kQ, 3, 4), b = random_bivar(rng, kQ, 3, 4);
    if (a.is_zero()) continue;
    for (const auto& v : bi) {
      bool in = contains(v, a), inv = contains(v, a.inverse());
      EXPECT_TRUE(in || inv) << to_string(v) << " " << a.to_string();
      if (in && inv) {
        // Units have order zero at every stage.
        if (const auto* o = std::get_if<OrdPlace>(&v)) EXPECT_EQ(ord_along(a, o->f), Valuation(0));
      }
      if (contains(v, a) && contains(v, b)) {
        EXPECT_TRUE(contains(v, a + b));
        EXPECT_TRUE(contains(v, a * b));
      }
    }
  }
}

TEST(Places, EvalPlaceRestrictsToBase) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-200, 200), d(1, 200);
  const std::vector<const char*> specs = {"eval:p=2,s=3", "eval:p=3,s=sqrt(2)", "eval:p=7,s=2+sqrt(2)",
                                          "eval:p=5,s=sqrt(5)", "eval:p=2,s=sqrt(5)", "eval:p=3,s=1/9"};
  for (int i = 0; i < 200; ++i) {
    Rat q(Int(c(rng)), Int(d(rng)));
    for (const char* sp : specs) {
      const auto v = place(sp);
      const Int p = std::get<EvalPlace>(v).p;
      EXPECT_EQ(contains(v, FieldElem(RatFunc::constant(kQ, q))), padic_val(q, p) >= Valuation(0)) << sp;
    }
  }
}

TEST(Places, ConjugatesAgreeAtNonSplitPrimes) {
  std::mt19937_64 rng(9);
  const std::vector<std::pair<const char*, const char*>> pairs = {
      {"eval:p=3,s=1+sqrt(2)", "eval:p=3,s=1-sqrt(2)"},
      {"eval:p=2,s=sqrt(3)", "eval:p=2,s=-sqrt(3)"},
      {"eval:p=5,s=2+3*sqrt(5)", "eval:p=5,s=2-3*sqrt(5)"},
      {"eval:p=2,s=1/2+sqrt(5)", "eval:p=2,s=1/2-sqrt(5)"}};
  for (int i = 0; i < 200; ++i) {
    RatFunc phi = random_ratfunc(rng, kQ, 4, 30);
    for (const auto& [a, b] : pairs) EXPECT_EQ(contains(place(a), phi), contains(place(b), phi)) << phi.to_string();
  }
}

TEST(Places, ConjugatesDifferAtSplitPrimes) {
  // 7 splits in Q(sqrt(2)); sqrt(2) maps to 3 + O(7) and -sqrt(2) to 4 + O(7).
  const FieldElem phi = R("(X-3)/7");
  EXPECT_TRUE(contains(place("eval:p=7,s=sqrt(2)"), phi));
  EXPECT_FALSE(contains(place("eval:p=7,s=-sqrt(2)"), phi));
}

TEST(Places, PoleIsNotMember) {
  EXPECT_FALSE(contains(place("eval:p=2,s=3"), R("1/(X-3)")));
  EXPECT_TRUE(contains(place("eval:p=2,s=3"), R("X-3")));
}
