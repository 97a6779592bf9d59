#include <gtest/gtest.h>

#include <fstream>

#include "json.hpp"
#include "zarcons/engine.hpp"
#include "zarcons/error.hpp"
#include "zarcons/factor.hpp"

using namespace zarcons;
using nlohmann::json;

namespace {

json load_golden(const char* name) {
  std::ifstream in(std::string(ZARCONS_GOLDEN_DIR) + "/" + name);
  return json::parse(in);
}

Verdict noeth(const char* point, const char* adapter) {
  auto a = make_adapter(adapter);
  return decide_isolated_noetherian(parse_place(point, a->base_field()), *a);
}

}  // namespace

TEST(Engine, NoetherianExamples) {
  Verdict a = noeth("p:5", "Z");
  EXPECT_EQ(a.status, VerdictStatus::Isolated);
  EXPECT_EQ(a.rule, "center-height-vset");
  ASSERT_TRUE(a.certificate.has_value());
  EXPECT_EQ(certify_isolated(*a.certificate).status, CertStatus::Valid);

  EXPECT_EQ(noeth("field", "Z").status, VerdictStatus::NotIsolated);
  Verdict b = noeth("ordf:x", "kxy_loc:Q");
  EXPECT_EQ(b.status, VerdictStatus::Isolated);
  ASSERT_TRUE(b.certificate.has_value());
  EXPECT_EQ(certify_isolated(*b.certificate).status, CertStatus::Valid);

  auto loc3 = make_adapter("kxyz_loc:Q");
  EXPECT_EQ(decide_at_center(loc3->parse_prime("(x,y,z)"), *loc3).status, VerdictStatus::NotIsolated);
  EXPECT_EQ(noeth("ordf:x", "kxyz_loc:Q").status, VerdictStatus::Unknown);
  EXPECT_EQ(noeth("comp:fin:Y", "DM_example:Q").status, VerdictStatus::Unknown);
}

TEST(Engine, FieldPoint) {
  EXPECT_EQ(decide_field_point(*make_adapter("Z_loc:3"), true).status, VerdictStatus::Isolated);
  EXPECT_EQ(decide_field_point(*make_adapter("Z"), true).status, VerdictStatus::NotIsolated);
  EXPECT_EQ(decide_field_point(*make_adapter("Q"), false).status, VerdictStatus::NotIsolated);
  Verdict semi = decide_field_point(*make_adapter("Z_semi:2,3"), true);
  ASSERT_TRUE(semi.certificate.has_value());
  EXPECT_EQ(certify_isolated(*semi.certificate).status, CertStatus::Valid);
}

TEST(Engine, FiniteExtensionCount) {
  EXPECT_EQ(decide_isolated_trdeg1(1).status, VerdictStatus::Isolated);
  EXPECT_EQ(decide_isolated_trdeg1(3).status, VerdictStatus::Isolated);
  EXPECT_EQ(decide_isolated_trdeg1(std::nullopt).status, VerdictStatus::Unknown);
  EXPECT_THROW(decide_isolated_trdeg1(0), Error);
}

TEST(Engine, CompositeExample) {
  auto dm = make_adapter("DM_example:Q");
  auto decide = [&](const char* p) { return decide_isolated(parse_place(p), *dm).status; };
  EXPECT_EQ(decide("field"), VerdictStatus::Isolated);
  EXPECT_EQ(decide("comp:fin:Y-2"), VerdictStatus::Isolated);
  EXPECT_EQ(decide("comp:fin:Y^2+1"), VerdictStatus::Isolated);
  EXPECT_EQ(decide("comp:inf"), VerdictStatus::Isolated);
  EXPECT_EQ(decide("comp:field"), VerdictStatus::NotIsolated);
}

TEST(Engine, PinchedRing) {
  auto a = make_adapter("pinch:Q:3");
  for (const char* p : {"fin:X", "fin:X-1", "fin:X-2"}) {
    Verdict v = decide_isolated(parse_place(p), *a);
    EXPECT_EQ(v.status, VerdictStatus::Isolated) << p;
    ASSERT_TRUE(v.certificate.has_value());
  }
  EXPECT_EQ(decide_isolated(FieldPoint{}, *a).status, VerdictStatus::Isolated);
  EXPECT_THROW(decide_isolated(parse_place("fin:X-3"), *a), Error);
}

TEST(Engine, EnumerateKX) {
  auto f2 = enumerate_isolated_KX(Field::prime(2), 2);
  std::vector<std::string> names;
  for (const auto& [v, c] : f2) names.push_back(to_string(v));
  EXPECT_EQ(names, (std::vector<std::string>{"fin:X", "fin:X+1", "fin:X^2+X+1", "inf"}));
  for (const auto& [v, c] : enumerate_isolated_KX(Field::rationals(), 3))
    EXPECT_EQ(certify_isolated(c).status, CertStatus::Valid) << to_string(v);
}

TEST(Engine, ClassifyExamples) {
  auto r = classify_homeo(*make_adapter("Z_loc:5"), *make_adapter("Z_loc:7"));
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(to_string(r.a), "dim1(1)");
  EXPECT_TRUE(classify_homeo(*make_adapter("kxy_loc:F2"), *make_adapter("kxy_loc:Q")).equal);
  auto d = classify_homeo(*make_adapter("kxy_loc:Q"), *make_adapter("kxyz_loc:Q"));
  EXPECT_FALSE(d.equal);
  EXPECT_EQ(to_string(d.b), "dim3+");
  for (const char* bad : {"Z", "kxy:Q", "Q", "DM_example:Q", "Z_semi:2,3"}) {
    try {
      homeo_class(*make_adapter(bad));
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolated) << bad;
    }
  }
}

TEST(Engine, ClassifySymmetricAndReflexive) {
  const std::vector<std::string> ids = {"Z_loc:2", "Z_loc:3", "pinch:Q:2", "pinch:F3:3", "kxy_loc:Q", "kxyz_loc:F2"};
  for (const auto& x : ids) {
    auto a = make_adapter(x);
    EXPECT_TRUE(classify_homeo(*a, *a).equal);
    for (const auto& y : ids) {
      auto b = make_adapter(y);
      EXPECT_EQ(classify_homeo(*a, *b).equal, classify_homeo(*b, *a).equal);
    }
  }
}

TEST(Engine, PerfectnessExamples) {
  SpaceDescriptor q2{PerfBase::Field, PerfSpace::Zar, 2};
  EXPECT_EQ(perfectness_verdict(q2).status, VerdictStatus::Perfect);
  EXPECT_EQ(perfectness_verdict(descriptor_for(*make_adapter("Z_loc:5"), PerfSpace::Est, 1)).status,
            VerdictStatus::Perfect);
  EXPECT_EQ(perfectness_verdict(descriptor_for(*make_adapter("Z"), PerfSpace::Zar, 1)).status, VerdictStatus::Perfect);
  Verdict jn = perfectness_verdict(descriptor_for(*make_adapter("Z_loc:5"), PerfSpace::Zar, 1));
  EXPECT_EQ(jn.status, VerdictStatus::NotPerfect);
  EXPECT_EQ(jn.rule, "zar-kx-j-nonzero");
  EXPECT_EQ(perfectness_verdict(descriptor_for(*make_adapter("Q"), PerfSpace::Zar, 1)).status,
            VerdictStatus::NotPerfect);
  SpaceDescriptor nfg{PerfBase::Field, PerfSpace::Zar, 1, false};
  EXPECT_EQ(perfectness_verdict(nfg).status, VerdictStatus::Unknown);
  SpaceDescriptor nj{PerfBase::Domain, PerfSpace::Zar, 1};
  EXPECT_EQ(perfectness_verdict(nj).status, VerdictStatus::Unknown);
  EXPECT_EQ(perfectness_verdict(descriptor_for(*make_adapter("Z"), PerfSpace::Est, 1)).status, VerdictStatus::Unknown);
}

TEST(Engine, GoldenVerdicts) {
  for (const auto& row : load_golden("noeth_verdicts.json")) {
    auto a = make_adapter(row["adapter"].get<std::string>());
    Verdict v = row.contains("point")
                    ? decide_isolated_noetherian(parse_place(row["point"].get<std::string>(), a->base_field()), *a)
                    : decide_at_center(a->parse_prime(row["center"].get<std::string>()), *a);
    EXPECT_EQ(to_string(v.status), row["expect"].get<std::string>()) << row.dump();
    if (v.status == VerdictStatus::Isolated) {
      ASSERT_TRUE(v.certificate.has_value()) << row.dump();
      EXPECT_EQ(certify_isolated(*v.certificate).status, CertStatus::Valid);
    }
  }
}

TEST(Engine, GoldenHomeoTable) {
  for (const auto& row : load_golden("homeo_table.json")) {
    auto r = classify_homeo(*make_adapter(row["a"].get<std::string>()), *make_adapter(row["b"].get<std::string>()));
    EXPECT_EQ(to_string(r.a), row["class_a"].get<std::string>());
    EXPECT_EQ(to_string(r.b), row["class_b"].get<std::string>());
    EXPECT_EQ(r.equal, row["equal"].get<bool>());
  }
}

TEST(Engine, NotIsolatedPointsHaveNoSmallCertificate) {
  // Field point of Zar(Z): every B(1/n) is cofinite.
  Ambient q = Ambient::parse("ZarQ");
  for (long n = 1; n <= 300; ++n) {
    BasicSet s;
    s.in.push_back(Rat(1, n));
    EXPECT_NE(certify_isolated(Certificate{FieldPoint{}, s, q}).status, CertStatus::Valid);
  }
  // Field point of Zar(k[x,y]_(x,y)) within the order-valuation family.
  Ambient l2 = Ambient::parse("ZarLocal2:Q");
  for (const char* g : {"1/x", "1/(x*y)", "1/(y^2-x^3)", "x/y", "1/(x+y)", "(1+x)/(x*y^2)"}) {
    BasicSet s = parse_basic(l2, {g}, {});
    EXPECT_NE(certify_isolated(Certificate{FieldPoint{}, s, l2}).status, CertStatus::Valid) << g;
  }
  // comp:field of the composite example.
  Ambient dm = Ambient::parse("ZarDM:Q");
  for (const char* g : {"Y", "1/Y", "1/(Y^2+1)", "X/Y", "Y+X"}) {
    for (bool out : {false, true}) {
      BasicSet s = out ? parse_basic(dm, {}, {g}) : parse_basic(dm, {g}, {});
      ValuationPoint t = parse_place("comp:field");
      if (!member(t, s)) continue;
      EXPECT_NE(certify_isolated(Certificate{t, s, dm}).status, CertStatus::Valid) << g;
    }
  }
}

TEST(Engine, IsolatedCertificateComplementCoversTheRest) {
  auto z = make_adapter("Z");
  Ambient q = Ambient::parse("ZarQ");
  for (long p : {2L, 3L, 5L, 97L}) {
    ValuationPoint v = PAdicPlace{Int(p)};
    Verdict vd = decide_isolated_noetherian(v, *z);
    ASSERT_TRUE(vd.certificate.has_value());
    ResolvedSet rest = resolve(complement_of_basic(vd.certificate->set), q);
    EXPECT_TRUE(rest.field_point);
    for (long r : primes_up_to(500)) EXPECT_EQ(member(PAdicPlace{Int(r)}, rest), r != p);
  }
}

TEST(Engine, DimensionOneVerdictsNameTheLocalization) {
  for (const char* id : {"Z", "Z_semi:2,3", "Q[x]", "Fp[x]:5", "Z_loc:7"}) {
    auto a = make_adapter(id);
    for (const auto& p : a->primes_sample(12)) {
      if (std::holds_alternative<ZeroPrime>(p)) continue;
      auto e = a->essential_place(p);
      ASSERT_TRUE(e.has_value()) << id;
      Verdict v = decide_isolated_noetherian(*e, *a);
      EXPECT_EQ(v.status, VerdictStatus::Isolated) << id << " " << to_string(p);
      EXPECT_EQ(to_string(center(*e, *a)), to_string(p));
    }
  }
}

TEST(Engine, NoIsolatedPointOverTheMaximalIdealInDimensionTwo) {
  for (const char* id : {"kxy_loc:Q", "kxy_loc:F3"}) {
    auto a = make_adapter(id);
    std::vector<std::string> residues;
    for (const auto& g : irreducibles_up_to(Field::prime(3), 2)) residues.push_back("fin:" + g.to_string("Y"));
    if (a->base_field().is_rational()) residues = {"fin:Y", "fin:Y-1", "fin:Y^2+1", "fin:Y^2-2", "fin:Y^3-Y-1"};
    int centered = 0;
    for (const auto& r : residues) {
      ValuationPoint v = parse_place("comp:" + r, a->base_field());
      std::optional<PrimeDesc> c;
      try {
        c = a->center(v);
      } catch (const Error&) {
        continue;  // not a valuation ring over the local ring
      }
      if (a->height(*c) != 2) continue;
      ++centered;
      EXPECT_NE(decide_isolated_noetherian(v, *a).status, VerdictStatus::Isolated) << id << " " << r;
    }
    EXPECT_GT(centered, 0);
    // order valuations are centered on height-one primes
    for (const auto& v : candidate_pool(*ambient_of(*a), 20))
      if (std::holds_alternative<OrdPlace>(v)) EXPECT_EQ(a->height(a->center(v)), 1);
  }
}
