#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "qcoh/chart.hpp"
#include "qcoh/classify.hpp"
#include "qcoh/error.hpp"
#include "qcoh/ext.hpp"
#include "qcoh/sheaf_ops.hpp"

namespace qcoh {
namespace {

const Field Q = Field::rationals();

Poly L(std::int64_t e, long c = 1) { return Poly::monomial(Ring::Laurent, Scalar(Q, c), e); }
PolyMatrix col(std::vector<Poly> entries) { return PolyMatrix::column_vector(Ring::Laurent, Q, entries); }
QcohSheaf O(std::int64_t n) { return QcohSheaf::line_bundle(Q, n); }
QcohSheaf skyscraper0(int m) { return QcohSheaf::torsion(Point::finite(Scalar::zero(Q)), m); }
QcohSheaf skyscraper_inf(int m) { return QcohSheaf::torsion(Point::infinity(Q), m); }

TEST(Sheaf, LineBundleConvention) {
  QcohSheaf O0 = O(0);
  EXPECT_TRUE(O0.sigma()(0, 0).is_one());
  EXPECT_TRUE(O0.tau()(0, 0).is_one());
  EXPECT_EQ(O(3).tau()(0, 0), L(3));
  for (int n = -5; n <= 5; ++n) EXPECT_TRUE(validate(O(n)).valid);
}

TEST(Sheaf, TorsionSheaves) {
  QcohSheaf t0 = skyscraper0(1);
  EXPECT_EQ(t0.M().size(), 1u);
  EXPECT_TRUE(t0.P().is_zero());
  EXPECT_TRUE(t0.N().is_zero());
  EXPECT_TRUE(validate(t0).valid);
  QcohSheaf tinf = skyscraper_inf(2);
  ASSERT_EQ(tinf.N().size(), 1u);
  EXPECT_EQ(tinf.N().divisors()[0], Poly::x_power(Ring::XInv, Q, -2));
  QcohSheaf t1 = QcohSheaf::torsion(Point::finite(Scalar(Q, 1)), 2);
  EXPECT_EQ(t1.M().dimension(), 2);
  EXPECT_EQ(t1.P().dimension(), 2);
  EXPECT_EQ(t1.N().dimension(), 2);
  EXPECT_TRUE(validate(t1).valid);
  EXPECT_THROW(QcohSheaf::torsion(Point::finite(Scalar::zero(Q)), 0), Error);
}

TEST(Sheaf, ValidateReportsViolations) {
  EXPECT_TRUE(validate(O(5)).valid);
  EXPECT_TRUE(validate(skyscraper0(2)).valid);
  EXPECT_EQ(validate(skyscraper0(2)).sigma_kernel_exponent, 2);
  QcohSheaf bad(FpModule::free(Ring::X, Q, 1), FpModule::free(Ring::Laurent, Q, 1), FpModule::free(Ring::XInv, Q, 1),
                PolyMatrix::identity(Ring::Laurent, Q, 1), PolyMatrix(Ring::Laurent, Q, 1, 1));
  ValidationReport r = validate(bad);
  EXPECT_FALSE(r.valid);
  EXPECT_NE(r.violation.find("tau"), std::string::npos);
  EXPECT_NE(r.violation.find("surjective"), std::string::npos);
}

TEST(Sheaf, TransitionMatrices) {
  auto T = PolyMatrix::from_rows(Ring::Laurent, Q, {{L(2), L(0, 0)}, {L(0, 0), L(-1)}});
  EXPECT_EQ(classify(QcohSheaf::from_transition_matrix(T)).type, (std::vector<std::int64_t>{2, -1}));
  auto U = PolyMatrix::from_rows(Ring::Laurent, Q, {{L(1), L(0)}, {L(0, 0), L(0)}});
  EXPECT_NO_THROW(QcohSheaf::from_transition_matrix(U));
  auto S = PolyMatrix::from_rows(Ring::Laurent, Q, {{L(0) + L(1), L(0, 0)}, {L(0, 0), L(0)}});
  EXPECT_THROW(QcohSheaf::from_transition_matrix(S), Error);
}

TEST(Sheaf, KernelOfPointEvaluationIsIdealSheaf) {
  QcohSheaf t = skyscraper0(1);
  SheafMorphism ev(O(0), t, PolyMatrix::identity(Ring::X, Q, 1), PolyMatrix(Ring::Laurent, Q, 0, 1),
                   PolyMatrix(Ring::XInv, Q, 0, 1));
  SheafKernel k = kernel(ev);
  EXPECT_TRUE(validate(k.object).valid);
  StructureReport rep = classify(k.object);
  EXPECT_TRUE(rep.torsion.empty());
  EXPECT_EQ(rep.type, (std::vector<std::int64_t>{-1}));
  EXPECT_TRUE(compose(ev, k.inclusion).is_zero());
  SheafCokernel c = cokernel(ev);
  EXPECT_TRUE(c.object.is_zero());
  EXPECT_TRUE(kernel(SheafMorphism::identity(O(2))).object.is_zero());
  SheafCokernel c0 = cokernel(SheafMorphism::zero(QcohSheaf(Q), t));
  EXPECT_EQ(classify(c0.object), classify(t));
}

TEST(Sheaf, ClassifyExamples) {
  StructureReport r = classify(direct_sum(O(2), skyscraper0(1)));
  EXPECT_EQ(r.torsion.at_zero, (std::vector<std::int64_t>{1}));
  EXPECT_EQ(r.type, (std::vector<std::int64_t>{2}));
  EXPECT_TRUE(classify(QcohSheaf(Q)).torsion.empty());
  EXPECT_TRUE(classify(QcohSheaf(Q)).type.empty());
  EXPECT_EQ(classify(direct_sum(O(-1), O(1))).type, (std::vector<std::int64_t>{1, -1}));
}

TEST(Sheaf, TensorExamples) {
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) EXPECT_EQ(classify(tensor(O(a), O(b))).type, (std::vector<std::int64_t>{a + b}));
  EXPECT_TRUE(tensor(skyscraper0(1), skyscraper_inf(1)).is_zero());
  QcohSheaf F = direct_sum(O(1), skyscraper_inf(2));
  EXPECT_EQ(classify(tensor(F, O(0))), classify(F));
  auto T = PolyMatrix::from_rows(Ring::Laurent, Q, {{L(1), L(0)}, {L(0, 0), L(-1)}});
  EXPECT_EQ(classify(tensor(O(1), QcohSheaf::from_transition_matrix(T))).type, (std::vector<std::int64_t>{2, 0}));
}

TEST(Sheaf, PushoutAlongIdentity) {
  SheafMorphism inc(O(-1), O(0), PolyMatrix::from_rows(Ring::X, Q, {{Poly::x_power(Ring::X, Q, 1)}}),
                    col({L(1)}), PolyMatrix::identity(Ring::XInv, Q, 1));
  Pushout p = pushout(inc, SheafMorphism::identity(O(-1)));
  EXPECT_EQ(classify(p.object), classify(O(0)));
  Pushout q = pushout(SheafMorphism::identity(O(-1)), inc);
  EXPECT_EQ(classify(q.object), classify(O(0)));
}

TEST(Sheaf, PushoutOfTwoPointIdeals) {
  SheafMorphism at0(O(-1), O(0), PolyMatrix::from_rows(Ring::X, Q, {{Poly::x_power(Ring::X, Q, 1)}}), col({L(1)}),
                    PolyMatrix::identity(Ring::XInv, Q, 1));
  SheafMorphism atinf(O(-1), O(0), PolyMatrix::identity(Ring::X, Q, 1), col({L(0)}),
                      PolyMatrix::from_rows(Ring::XInv, Q, {{Poly::x_power(Ring::XInv, Q, -1)}}));
  Pushout p = pushout(at0, atinf);
  StructureReport r = classify(p.object);
  EXPECT_TRUE(r.torsion.empty());
  EXPECT_EQ(r.type, (std::vector<std::int64_t>{1}));
  SheafCokernel c1 = cokernel(p.from_V);
  SheafCokernel c2 = cokernel(atinf);
  EXPECT_EQ(classify(c1.object), classify(c2.object));
}

TEST(HomLine, Examples) {
  EXPECT_EQ(hom_line(0, O(3)).dimension(), 4u);
  EXPECT_EQ(hom_line(1, O(0)).dimension(), 0u);
  for (int n = -3; n <= 3; ++n) EXPECT_EQ(hom_line(n, skyscraper0(1)).dimension(), 1u);
  for (int n = -3; n <= 3; ++n) EXPECT_EQ(hom_line(n, skyscraper_inf(3)).dimension(), 3u);
}

TEST(HomLine, BasisElementsAreMorphisms) {
  testing::Gen g(11, Q);
  for (int trial = 0; trial < 10; ++trial) {
    QcohSheaf F = direct_sum(testing::scrambled_bundle(g, testing::random_type(g, 3, 3)), testing::random_torsion(g));
    const int n = g.uniform(-3, 3);
    for (const auto& s : hom_line(n, F).basis) {
      SheafMorphism f = section_morphism(n, F, s);
      EXPECT_EQ(f.check(), "");
    }
  }
}

TEST(ExtLine, Examples) {
  EXPECT_EQ(ext1_line(0, O(0)).dimension(), 0u);
  ExtLineSpace e = ext1_line(2, O(0));
  ASSERT_EQ(e.dimension(), 1u);
  EXPECT_EQ(e.labels[0], "x");
  EXPECT_EQ(ext1_line(5, skyscraper0(3)).dimension(), 0u);
}

TEST(ExtLine, GridMatchesMonomialOracle) {
  for (int n = -6; n <= 6; ++n)
    for (int m = -6; m <= 6; ++m) {
      const int ext = static_cast<int>(ext1_line(n, O(m)).dimension());
      const int hom = static_cast<int>(hom_line(n, O(m)).dimension());
      EXPECT_EQ(ext, testing::ext_line_oracle(n, m)) << n << "," << m;
      EXPECT_EQ(hom, testing::hom_line_oracle(n, m)) << n << "," << m;
      EXPECT_EQ(hom - ext, m - n + 1);
      EXPECT_EQ(ext, static_cast<int>(hom_line(m, O(n - 2)).dimension()));
    }
}

TEST(ExtLine, ScrambledBundlesFollowType) {
  testing::Gen g(5, Q);
  for (int trial = 0; trial < 20; ++trial) {
    auto type = testing::random_type(g, 3, 3);
    QcohSheaf F = testing::scrambled_bundle(g, type);
    const int n = g.uniform(-4, 5);
    std::size_t ext = 0, hom = 0;
    for (auto t : type) {
      ext += static_cast<std::size_t>(testing::ext_line_oracle(n, static_cast<int>(t)));
      hom += static_cast<std::size_t>(testing::hom_line_oracle(n, static_cast<int>(t)));
    }
    EXPECT_EQ(ext1_line(n, F).dimension(), ext);
    EXPECT_EQ(hom_line(n, F).dimension(), hom);
  }
}

TEST(Extension, BuildExamples) {
  ExtClass trivial(2, O(0), col({L(0, 0)}), col({L(0, 0)}));
  EXPECT_TRUE(trivial.is_zero());
  EXPECT_EQ(classify(build_extension(trivial).middle).type, (std::vector<std::int64_t>{2, 0}));
  ExtClass nonsplit(2, O(0), col({L(0, 0)}), col({L(1)}));
  Extension e = build_extension(nonsplit);
  EXPECT_TRUE(validate(e.middle).valid);
  EXPECT_EQ(classify(e.middle).type, (std::vector<std::int64_t>{1, 1}));
  EXPECT_TRUE(compose(e.projection, e.inclusion).is_zero());
  EXPECT_FALSE(is_split(nonsplit).has_value());
  ExtClass split(2, O(0), col({L(0, 0)}), col({L(0)}));
  EXPECT_EQ(classify(build_extension(split).middle).type, (std::vector<std::int64_t>{2, 0}));
  ASSERT_TRUE(is_split(split).has_value());
}

TEST(Extension, SplitWitnessSolvesEquation) {
  ExtClass same(1, O(-1), col({L(3)}), col({L(3)}));
  auto w = is_split(same);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->u.is_zero());
  EXPECT_TRUE(w->v.is_zero());
  ExtClass via_sigma(0, O(4), col({L(0, 0)}), col({L(0)}));
  ASSERT_TRUE(is_split(via_sigma).has_value());
}

TEST(Extension, RandomSequencesAreExact) {
  testing::Gen g(23, Q);
  for (int trial = 0; trial < 12; ++trial) {
    QcohSheaf F = testing::scrambled_bundle(g, testing::random_type(g, 2, 2));
    if (g.coin()) F = direct_sum(F, testing::random_torsion(g));
    const int n = g.uniform(-2, 4);
    PolyMatrix y(Ring::Laurent, Q, F.P().size(), 1), z(Ring::Laurent, Q, F.P().size(), 1);
    for (std::size_t r = 0; r < F.P().size(); ++r) {
      y(r, 0) = g.poly(Ring::Laurent, 4);
      z(r, 0) = g.poly(Ring::Laurent, 4);
    }
    ExtClass cls(n, F, y, z);
    Extension e = build_extension(cls);
    EXPECT_TRUE(validate(e.middle).valid);
    EXPECT_TRUE(is_monomorphism(e.inclusion));
    EXPECT_TRUE(is_epimorphism(e.projection));
    EXPECT_TRUE(compose(e.projection, e.inclusion).is_zero());
    EXPECT_EQ(classify(cokernel(e.inclusion).object), classify(O(n)));
    auto witness = is_split(cls);
    EXPECT_EQ(witness.has_value(), cls.is_zero());
    ExtClass shifted(n, F, PolyMatrix(Ring::Laurent, Q, F.P().size(), 1), z - y);
    EXPECT_EQ(shifted, cls);
    EXPECT_EQ(classify(build_extension(shifted).middle), classify(e.middle));
    StructureReport mid = classify(e.middle);
    if (cls.is_zero()) EXPECT_EQ(mid, classify(direct_sum(F, O(n))));
  }
}

TEST(UPerp, Examples) {
  EXPECT_TRUE(in_u_perp(skyscraper0(3)).member);
  EXPECT_TRUE(in_u_perp(QcohSheaf(Q)).member);
  for (int m = -3; m <= 3; ++m) {
    UPerpCertificate c = in_u_perp(O(m));
    EXPECT_FALSE(c.member);
    ASSERT_TRUE(c.witness_n.has_value());
    EXPECT_EQ(*c.witness_n, m + 2);
    EXPECT_EQ(c.witness_dimension, 1u);
  }
}


TEST(Chart, RestrictAndExtend) {
  FpModule m = chart_restrict(O(4), Chart::X);
  EXPECT_EQ(m.free_rank(), 1u);
  EXPECT_EQ(m.size(), 1u);
  ChartExtension free_ext = chart_extend(FpModule::free(Ring::X, Q, 1));
  EXPECT_FALSE(free_ext.finitely_generated);
  EXPECT_FALSE(free_ext.sheaf.has_value());
  EXPECT_NE(free_ext.describe().find("not finitely generated"), std::string::npos);
  Poly x = Poly::x_power(Ring::X, Q, 1), one = Poly::constant(Ring::X, Q, 1);
  FpModule E(Ring::X, Q, {x, (x - one) * (x - one) * x});
  ChartExtension ext = chart_extend(E);
  ASSERT_TRUE(ext.sheaf.has_value());
  EXPECT_TRUE(validate(*ext.sheaf).valid);
  EXPECT_TRUE(chart_restrict(*ext.sheaf, Chart::X).isomorphic(E));
  EXPECT_EQ(chart_restrict(*ext.sheaf, Chart::Overlap).dimension(), 2);
  EXPECT_THROW(chart_extend(FpModule::free(Ring::XInv, Q, 1)), Error);
}

TEST(Chart, AdjunctionDimensions) {
  Poly x = Poly::x_power(Ring::X, Q, 1), one = Poly::constant(Ring::X, Q, 1);
  AdjunctionCheck a = adjunction_check(O(1), FpModule(Ring::X, Q, {x}));
  EXPECT_EQ(a.restricted, 1);
  EXPECT_TRUE(a.agree());
  testing::Gen g(4, Q);
  for (int trial = 0; trial < 8; ++trial) {
    QcohSheaf F = direct_sum(testing::scrambled_bundle(g, testing::random_type(g, 2, 2)), testing::random_torsion(g));
    FpModule E(Ring::X, Q, {x * x, (x - one) * x});
    AdjunctionCheck c = adjunction_check(F, E);
    EXPECT_TRUE(c.agree()) << c.restricted << " vs " << c.extended.value_or(-1);
  }
}

}  // namespace
}  // namespace qcoh
