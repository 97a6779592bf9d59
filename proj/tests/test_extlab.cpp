#include <gtest/gtest.h>

#include <random>

#include "zarcons/error.hpp"
#include "zarcons/extlab.hpp"

using namespace zarcons;

namespace {

const Field kQ = Field::rationals();

QuadElem Qe(const char* s) { return parse_quad(s); }

RatFunc random_ratfunc(std::mt19937_64& rng, int max_deg, int height) {
  std::uniform_int_distribution<int> deg(0, max_deg), c(-height, height);
  auto poly = [&] {
    std::vector<Rat> cs;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) cs.emplace_back(c(rng));
    return Poly(kQ, cs);
  };
  Poly num = poly(), den = poly();
  while (den.is_zero()) den = poly();
  return RatFunc(num, den);
}

bool in_vs(const Int& p, const QuadElem& s, const RatFunc& q, int root = 1) {
  return contains(parse_place(("eval:p=" + p.get_str() + ",s=" + s.to_string() + (root < 0 ? ",root=-" : "")).c_str()),
                  FieldElem(q));
}

}  // namespace

TEST(Extlab, RestrictedEqualExamples) {
  EXPECT_TRUE(restricted_equal(Qe("sqrt(2)"), Qe("-sqrt(2)"), Int(3)));
  EXPECT_FALSE(restricted_equal(Qe("1"), Qe("2"), Int(2)));
  EXPECT_TRUE(restricted_equal(Qe("1+sqrt(3)"), Qe("1+sqrt(3)"), Int(11)));
  // 7 splits in Q(sqrt(2)): the conjugates land on different 7-adic numbers.
  EXPECT_FALSE(restricted_equal(Qe("sqrt(2)"), Qe("-sqrt(2)"), Int(7)));
}

TEST(Extlab, SeparatorExamples) {
  SeparatorResult a = build_separator(Qe("1"), Qe("2"), Int(2));
  EXPECT_EQ(a.q.to_string(), "1/2*X-1/2");
  EXPECT_TRUE(a.s_zero);
  EXPECT_EQ(a.half_val_t, -2);

  SeparatorResult b = build_separator(Qe("0"), Qe("5"), Int(5));
  EXPECT_EQ(b.q.to_string(), "1/25*X");
  EXPECT_EQ(b.half_val_t, -2);

  SeparatorResult c = build_separator(Qe("sqrt(2)"), Qe("1+sqrt(2)"), Int(5));
  EXPECT_TRUE(c.s_zero);
  EXPECT_LT(c.half_val_t, 0);
  EXPECT_TRUE(in_vs(Int(5), Qe("sqrt(2)"), c.q));
  EXPECT_FALSE(in_vs(Int(5), Qe("1+sqrt(2)"), c.q));

  EXPECT_THROW(build_separator(Qe("sqrt(2)"), Qe("-sqrt(2)"), Int(3)), Error);
  try {
    build_separator(Qe("3"), Qe("3"), Int(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConjugateInputs);
  }
}

TEST(Extlab, SplitConjugatesAreSeparated) {
  SeparatorResult r = build_separator(Qe("sqrt(2)"), Qe("-sqrt(2)"), Int(7));
  EXPECT_TRUE(in_vs(Int(7), Qe("sqrt(2)"), r.q));
  EXPECT_FALSE(in_vs(Int(7), Qe("-sqrt(2)"), r.q));
  SeparatorResult m = build_separator(Qe("sqrt(2)"), Qe("-sqrt(2)"), Int(7), -1);
  EXPECT_TRUE(in_vs(Int(7), Qe("sqrt(2)"), m.q, -1));
  EXPECT_FALSE(in_vs(Int(7), Qe("-sqrt(2)"), m.q, -1));
  SeparatorResult two = build_separator(Qe("1+3*sqrt(17)"), Qe("1-3*sqrt(17)"), Int(2));
  EXPECT_TRUE(in_vs(Int(2), Qe("1+3*sqrt(17)"), two.q));
  EXPECT_FALSE(in_vs(Int(2), Qe("1-3*sqrt(17)"), two.q));
}

TEST(Extlab, SeparatorSoundness) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> c(-20, 20), pick(0, 4);
  const std::vector<long> primes = {2, 3, 5, 7, 11};
  const std::vector<long> ds = {2, 3, 5, -1, 7};
  int built = 0;
  for (int i = 0; i < 300; ++i) {
    const Int p(primes[static_cast<size_t>(pick(rng))]);
    const Int d(ds[static_cast<size_t>(pick(rng))]);
    auto elem = [&] {
      Rat b = (c(rng) % 3 == 0) ? Rat(0) : Rat(c(rng));
      return QuadElem(d, Rat(c(rng)), b);
    };
    QuadElem s = elem(), t = elem();
    if (restricted_equal(s, t, p)) {
      EXPECT_THROW(build_separator(s, t, p), Error);
      continue;
    }
    SeparatorResult r = build_separator(s, t, p);
    EXPECT_TRUE(in_vs(p, s, r.q)) << s.to_string() << " " << t.to_string() << " " << p;
    EXPECT_FALSE(in_vs(p, t, r.q)) << s.to_string() << " " << t.to_string() << " " << p;
    ++built;
  }
  EXPECT_GT(built, 200);
}

TEST(Extlab, RestrictedEqualIsAnEquivalence) {
  std::vector<QuadElem> xs;
  for (const char* s : {"1", "2", "sqrt(2)", "-sqrt(2)", "1+sqrt(2)", "1-sqrt(2)", "sqrt(3)", "-sqrt(3)", "1/2"})
    xs.push_back(Qe(s));
  for (long p : {2, 3, 5, 7, 23}) {
    const Int P(p);
    for (const auto& a : xs) {
      EXPECT_TRUE(restricted_equal(a, a, P));
      for (const auto& b : xs) {
        EXPECT_EQ(restricted_equal(a, b, P), restricted_equal(b, a, P));
        for (const auto& c : xs)
          if (restricted_equal(a, b, P) && restricted_equal(b, c, P)) EXPECT_TRUE(restricted_equal(a, c, P));
      }
    }
  }
}

TEST(Extlab, ConjugatesHaveNoProbeSeparator) {
  std::mt19937_64 rng(32);
  const std::vector<std::tuple<const char*, const char*, long>> pairs = {
      {"sqrt(2)", "-sqrt(2)", 3}, {"1+sqrt(3)", "1-sqrt(3)", 5}, {"sqrt(5)", "-sqrt(5)", 5},
      {"2+sqrt(-1)", "2-sqrt(-1)", 3}, {"sqrt(3)", "-sqrt(3)", 2}};
  for (const auto& [a, b, p] : pairs) {
    for (int i = 0; i < 200; ++i) {
      RatFunc q = random_ratfunc(rng, 3, 9);
      EXPECT_EQ(in_vs(Int(p), Qe(a), q), in_vs(Int(p), Qe(b), q)) << a << " " << q.to_string();
    }
  }
}

TEST(Extlab, RefuterExamples) {
  Ambient est = Ambient::parse("EstKX:2");
  RefutationResult a = refute_isolation(parse_basic(est, {"(X-1)/2"}, {}), Rat(3), Int(2));
  EXPECT_NE(a.t, Rat(3));
  EXPECT_EQ(a.in_s, a.in_t);
  EXPECT_TRUE(contains(EvalPlace{Int(2), QuadElem(a.t), 1}, parse_ratfunc("(X-1)/2", kQ)));

  RefutationResult b = refute_isolation(BasicSet{}, Rat(7), Int(5));
  EXPECT_EQ(b.t, Rat(12));
  EXPECT_EQ(b.modulus_exponent, 1);

  // v_3(φ(1)) = 0 and v_3(ψ(1)) = -2: agreement needs t ≡ 1 mod 3^3.
  Ambient est3 = Ambient::parse("EstKX:3");
  BasicSet s = parse_basic(est3, {"X+1"}, {"1/(X-1)^2"});
  RefutationResult c = refute_isolation(s, Rat(1), Int(3));
  EXPECT_LE(c.modulus_exponent, 3);
  EXPECT_TRUE(member(EvalPlace{Int(3), QuadElem(c.t), 1}, s));

  EXPECT_THROW(refute_isolation(parse_basic(est, {"1/(X-3)"}, {}), Rat(3), Int(2)), Error);
}

TEST(Extlab, RefuterSoundAndComplete) {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<int> ps(0, 2), h(-50, 50), hd(1, 50), n(0, 3);
  const std::vector<long> primes = {2, 3, 5};
  int found = 0;
  for (int i = 0; i < 60; ++i) {
    const Int p(primes[static_cast<size_t>(ps(rng))]);
    const Rat s(Int(h(rng)), Int(hd(rng)));
    const EvalPlace vs{p, QuadElem(s), 1};
    BasicSet set;
    for (int k = n(rng); k > 0; --k) {
      RatFunc g = random_ratfunc(rng, 2, 50);
      (contains(vs, g) ? set.in : set.out).push_back(g);
    }
    RefutationResult r = refute_isolation(set, s, p);
    EXPECT_LE(r.modulus_exponent, 40);
    EXPECT_FALSE(minimal_polynomial(QuadElem(r.t)) == minimal_polynomial(QuadElem(s)));
    EXPECT_TRUE(member(EvalPlace{p, QuadElem(r.t), 1}, set));
    ++found;
  }
  EXPECT_EQ(found, 60);
}
