#include <gtest/gtest.h>

#include <algorithm>

#include "zarcons/adapters.hpp"
#include "zarcons/error.hpp"

using namespace zarcons;

namespace {

PrimeDesc prime(const DomainAdapter& a, const char* s) { return a.parse_prime(s); }

std::string center_of(const char* place, const char* adapter, const char* field = "Q") {
  auto a = make_adapter(adapter);
  return to_string(center(parse_place(place, Field::parse(field)), *a));
}

const std::vector<std::string> kAdapters = {"Z",          "Z_loc:5",       "Z_semi:2,3",   "Fp[x]:3",
                                            "Q[x]",       "kxy:Q",         "kxy:F2",       "kxy_loc:Q",
                                            "kxy_loc:F3", "kxyz_loc:Q",    "DM_example:Q", "pinch:Q:2",
                                            "Q",          "F:7"};

}  // namespace

TEST(Adapters, HeightExamples) {
  auto z = make_adapter("Z");
  EXPECT_EQ(z->height(prime(*z, "(7)")), 1);
  EXPECT_EQ(z->height(ZeroPrime{}), 0);
  auto loc = make_adapter("kxy_loc:Q");
  EXPECT_EQ(loc->height(prime(*loc, "(y^2-x^3)")), 1);
  EXPECT_EQ(loc->height(prime(*loc, "(x,y)")), 2);
  auto loc3 = make_adapter("kxyz_loc:Q");
  EXPECT_EQ(loc3->height(prime(*loc3, "(x,y,z)")), 3);
}

TEST(Adapters, VsetExamples) {
  auto z = make_adapter("Z");
  auto l = z->vset_list(prime(*z, "(5)"));
  ASSERT_TRUE(l.has_value());
  ASSERT_EQ(l->size(), 1u);
  EXPECT_EQ(to_string((*l)[0]), "(5)");
  EXPECT_FALSE(z->vset_is_finite(ZeroPrime{}));

  auto g = make_adapter("kxy:Q");
  EXPECT_FALSE(g->vset_is_finite(prime(*g, "(y^2-x^3)")));
  EXPECT_FALSE(g->vset_list(prime(*g, "(y^2-x^3)")).has_value());
  EXPECT_GE(g->maximal_above(prime(*g, "(y^2-x^3)"), 3).size(), 3u);

  auto loc = make_adapter("kxy_loc:Q");
  auto lx = loc->vset_list(prime(*loc, "(x)"));
  ASSERT_TRUE(lx.has_value());
  std::vector<std::string> names;
  for (const auto& p : *lx) names.push_back(to_string(p));
  EXPECT_EQ(names, (std::vector<std::string>{"(x)", "(x,y)"}));

  auto loc3 = make_adapter("kxyz_loc:Q");
  EXPECT_FALSE(loc3->vset_is_finite(prime(*loc3, "(x)")));
}

TEST(Adapters, Goldman) {
  EXPECT_FALSE(make_adapter("Z")->is_goldman());
  EXPECT_TRUE(make_adapter("Z_loc:3")->is_goldman());
  EXPECT_TRUE(make_adapter("Z_semi:2,5")->is_goldman());
  EXPECT_TRUE(make_adapter("Q")->is_goldman());
  EXPECT_FALSE(make_adapter("Q[x]")->is_goldman());
  EXPECT_FALSE(make_adapter("kxy:Q")->is_goldman());
  // Infinitely many height-one primes, so no single u inverts them all.
  EXPECT_FALSE(make_adapter("kxy_loc:Q")->is_goldman());
  EXPECT_TRUE(make_adapter("pinch:Q:2")->is_goldman());
}

TEST(Adapters, CenterExamples) {
  EXPECT_EQ(center_of("p:5", "Z"), "(5)");
  EXPECT_EQ(center_of("field", "Z"), "(0)");
  EXPECT_EQ(center_of("ordf:x", "kxy_loc:Q"), "(x)");
  EXPECT_EQ(center_of("ordf:y^2-x^3", "kxy_loc:Q"), "(y^2-x^3)");
  EXPECT_EQ(center_of("comp:fin:Y", "kxy_loc:Q"), "(x,y)");
  EXPECT_EQ(center_of("comp:field", "kxy_loc:Q"), "(x)");
  EXPECT_EQ(center_of("comp:fin:Y-1", "DM_example:Q"), "M");
  EXPECT_EQ(center_of("fin:X^2+1", "Q[x]"), "(X^2+1)");
  EXPECT_EQ(center_of("p:3", "Z_loc:3"), "(3)");
  // Z_(3) is not inside Z_(5).
  EXPECT_THROW(center_of("p:5", "Z_loc:3"), Error);
  EXPECT_THROW(center_of("inf", "Q[x]"), Error);
  EXPECT_THROW(center_of("comp:inf", "kxy_loc:Q"), Error);
}

TEST(Adapters, RegistryIds) {
  EXPECT_EQ(make_adapter("Z_semi:3,2")->id(), "Z_semi:2,3");
  EXPECT_EQ(make_adapter("kxy_loc:F_2")->id(), "kxy_loc:F2");
  EXPECT_THROW(make_adapter("Z_loc:4"), Error);
  EXPECT_THROW(make_adapter("R[x]"), Error);
}

TEST(Adapters, SelfConsistency) {
  for (const auto& id : kAdapters) {
    auto a = make_adapter(id);
    EXPECT_EQ(a->height(ZeroPrime{}), 0) << id;
    int max_height = 0;
    const auto sample = a->primes_sample(6);
    for (const auto& p : sample) {
      const int h = a->height(p);
      max_height = std::max(max_height, h);
      if (!std::holds_alternative<ZeroPrime>(p)) EXPECT_GE(h, 1) << id << " " << to_string(p);
      auto l = a->vset_list(p);
      EXPECT_EQ(l.has_value(), a->vset_is_finite(p)) << id;
      if (!l) continue;
      EXPECT_NE(std::find(l->begin(), l->end(), p), l->end()) << id << " " << to_string(p);
      // Closed upward: every sampled prime containing a listed prime is listed.
      for (const auto& q : *l) {
        auto lq = a->vset_list(q);
        ASSERT_TRUE(lq.has_value());
        for (const auto& r : *lq) EXPECT_NE(std::find(l->begin(), l->end(), r), l->end()) << id;
      }
    }
    if (a->dim()) EXPECT_EQ(max_height, *a->dim()) << id;
  }
}

TEST(Adapters, HeightOnePrimesNeverExhausted) {
  auto loc = make_adapter("kxy_loc:Q");
  size_t previous = 0;
  for (int bound = 1; bound <= 12; ++bound) {
    size_t count = 0;
    for (const auto& p : loc->primes_sample(bound)) count += loc->height(p) == 1;
    EXPECT_GT(count, previous);
    previous = count;
  }
}

TEST(Adapters, RejectsNonPrimes) {
  auto z = make_adapter("Z");
  EXPECT_THROW(z->validate(PrincipalPrime{Int(6)}), Error);
  auto loc = make_adapter("kxy_loc:Q");
  EXPECT_THROW(loc->parse_prime("(x-1,y)"), Error);
  EXPECT_THROW(loc->parse_prime("(x*y)"), Error);
  auto g = make_adapter("kxy:Q");
  EXPECT_EQ(g->height(g->parse_prime("(x-1,y^2+1)")), 2);
}
