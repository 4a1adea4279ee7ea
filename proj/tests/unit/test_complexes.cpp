#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "qcoh/classify.hpp"
#include "qcoh/complex.hpp"
#include "qcoh/derived_ext.hpp"
#include "qcoh/error.hpp"

namespace qcoh {
namespace {

const Field Q = Field::rationals();
QcohSheaf O(std::int64_t n) { return QcohSheaf::line_bundle(Q, n); }
QcohSheaf at0(int m) { return QcohSheaf::torsion(Point::finite(Scalar::zero(Q)), m); }
QcohSheaf atinf(int m) { return QcohSheaf::torsion(Point::infinity(Q), m); }
PolyMatrix xpow(Ring r, std::int64_t e) { return PolyMatrix::from_rows(r, Q, {{Poly::x_power(r, Q, e)}}); }

// O(a) -> O(b) given by multiplication with x^e (requires 0 <= e <= b - a).
SheafMorphism monomial_map(std::int64_t a, std::int64_t b, std::int64_t e) {
  return SheafMorphism(O(a), O(b), xpow(Ring::X, e), xpow(Ring::Laurent, e), xpow(Ring::XInv, e + a - b));
}

TEST(Complex, SpheresAndDiscs) {
  QcohSheaf F = direct_sum(O(1), at0(1));
  EXPECT_EQ(classify(homology(sphere(F, 0), 0)), classify(F));
  EXPECT_TRUE(homology(sphere(F, 2), 0).is_zero());
  EXPECT_EQ(classify(homology(sphere(F, 2), -2)), classify(F));
  EXPECT_TRUE(is_exact(disc(F, 1)));
  EXPECT_FALSE(is_exact(sphere(F, 1)));
  EXPECT_TRUE(is_locally_projective_complex(disc(O(3), 0)));
  EXPECT_TRUE(is_u_perp_complex(disc(at0(1), 2)));
  EXPECT_FALSE(is_locally_projective_complex(sphere(O(1), 0)));
  EXPECT_FALSE(is_u_perp_complex(sphere(O(1), 0)));
}

TEST(Complex, SphereDiscSphereSequence) {
  QcohSheaf F = O(2);
  const int n = 1;
  BoundedComplex S = sphere(F, n), D = disc(F, n), S1 = sphere(F, n + 1);
  ChainMap in{S, D, {{-n, SheafMorphism::identity(F)}}};
  ChainMap out{D, S1, {{-n - 1, SheafMorphism::identity(F)}}};
  EXPECT_EQ(in.check(), "");
  EXPECT_EQ(out.check(), "");
  EXPECT_TRUE(is_monomorphism(in.at(-n)));
  EXPECT_TRUE(is_epimorphism(out.at(-n - 1)));
  for (int k = -n - 1; k <= -n; ++k) {
    EXPECT_TRUE(compose(out.at(k), in.at(k)).is_zero());
    SheafKernel K = kernel(out.at(k));
    EXPECT_EQ(classify(K.object), classify(S.object(k)));
  }
}

TEST(Complex, DifferentialsMustSquareToZero) {
  SheafMorphism f = monomial_map(0, 1, 1), g = monomial_map(1, 2, 0);
  EXPECT_THROW(BoundedComplex(Q, {{0, O(0)}, {1, O(1)}, {2, O(2)}}, {{0, f}, {1, g}}), Error);
  EXPECT_THROW(BoundedComplex(Q, {{0, O(0)}, {1, O(2)}}, {{0, f}}), Error);
}

TEST(Complex, ConeOfIdentityIsExact) {
  BoundedComplex S = sphere(O(1), 0);
  BoundedComplex C = mapping_cone(ChainMap::identity(S));
  EXPECT_TRUE(is_exact(C));
  EXPECT_TRUE(is_locally_projective_complex(C));
  BoundedComplex X(Q, {{0, O(-1)}, {1, O(1)}}, {{0, monomial_map(-1, 1, 1)}});
  EXPECT_FALSE(is_exact(X));
  EXPECT_TRUE(is_exact(mapping_cone(ChainMap::identity(X))));
}

TEST(Complex, TensorOfSpheres) {
  for (int m = -2; m <= 2; ++m)
    for (int mp = -1; mp <= 1; ++mp)
      for (int n1 = -1; n1 <= 1; ++n1)
        for (int n2 = -1; n2 <= 1; ++n2)
          EXPECT_TRUE(degreewise_isomorphic(tensor_complex(sphere(O(m), n1), sphere(O(mp), n2)), sphere(O(m + mp), n1 + n2)));
  BoundedComplex X(Q, {{0, O(-1)}, {1, O(1)}}, {{0, monomial_map(-1, 1, 2)}});
  EXPECT_TRUE(degreewise_isomorphic(tensor_complex(X, sphere(O(0), 0)), X));
}

TEST(Complex, TensorOfExactComplexesIsExact) {
  BoundedComplex A = mapping_cone(ChainMap::identity(sphere(O(1), 0)));
  BoundedComplex B = disc(direct_sum(O(0), O(-2)), 1);
  BoundedComplex T = tensor_complex(A, B);
  EXPECT_TRUE(is_exact(T));
  EXPECT_TRUE(is_exact(tensor_complex(B, B)));
}

TEST(HomComplexTest, SphereToSphere) {
  for (int m = -3; m <= 3; ++m) {
    HomComplex H = hom_complex(sphere(O(0), 0), sphere(O(m), 0));
    EXPECT_EQ(H.lo(), 0);
    EXPECT_EQ(H.hi(), 0);
    EXPECT_EQ(H.dimension(0), static_cast<std::size_t>(std::max(0, m + 1)));
    EXPECT_EQ(H.cohomology_dimension(0), static_cast<std::size_t>(std::max(0, m + 1)));
  }
}

TEST(HomComplexTest, DiscSourceIsExact) {
  std::vector<BoundedComplex> targets{sphere(O(2), 0), sphere(at0(2), 1), disc(O(1), 0),
                                      BoundedComplex(Q, {{0, O(-1)}, {1, O(1)}}, {{0, monomial_map(-1, 1, 1)}})};
  for (const auto& Y : targets) {
    HomComplex H = hom_complex(disc(direct_sum(O(0), at0(1)), 0), Y);
    for (std::int64_t n = H.lo(); n <= H.hi(); ++n) EXPECT_EQ(H.cohomology_dimension(n), 0u) << n;
  }
}

TEST(HomComplexTest, H0MatchesMorphismCount) {
  std::vector<QcohSheaf> objs{O(-1), O(2), at0(2), atinf(1), direct_sum(O(1), at0(1))};
  for (const auto& F : objs)
    for (const auto& G : objs)
      EXPECT_EQ(hom_complex(sphere(F, 0), sphere(G, 0)).cohomology_dimension(0), hom_space(F, G).dimension());
}

// 0 -> k -> k[x]/x^2 -> k -> 0 over the point 0.
Extension nonsplit_point_extension() {
  QcohSheaf T = at0(2), Z = at0(1);
  SheafMorphism i(Z, T, xpow(Ring::X, 1), PolyMatrix(Ring::Laurent, Q, 0, 0), PolyMatrix(Ring::XInv, Q, 0, 0));
  SheafMorphism p(T, Z, xpow(Ring::X, 0), PolyMatrix(Ring::Laurent, Q, 0, 0), PolyMatrix(Ring::XInv, Q, 0, 0));
  return {T, i, p};
}

TEST(Mist, TorsionExample) {
  Extension ext = nonsplit_point_extension();
  EXPECT_FALSE(extension_section(ext).has_value());
  BoundedComplex N = sphere(at0(1), 0);
  SheafKernel Z = cycles(N, 0);
  ASSERT_EQ(Z.object, at0(1));
  MistExtension m = mist_extension(N, 0, ext);
  EXPECT_EQ(m.inclusion.check(), "");
  EXPECT_EQ(m.projection.check(), "");
  EXPECT_FALSE(mist_output_section(m).has_value());
  EXPECT_EQ(classify(m.H.object(0)), classify(at0(2)));
}

TEST(Mist, SplitInputGivesSplitOutput) {
  QcohSheaf Z = at0(1);
  QcohSheaf T = direct_sum(Z, atinf(1));
  std::vector<QcohSheaf> parts{Z, atinf(1)};
  Extension ext{T, summand_inclusion(parts, 0), summand_projection(parts, 1)};
  ASSERT_TRUE(extension_section(ext).has_value());
  MistExtension m = mist_extension(sphere(Z, 0), 0, ext);
  EXPECT_TRUE(mist_output_section(m).has_value());
}

TEST(Mist, ZeroQuotientKeepsComplex) {
  BoundedComplex N(Q, {{0, O(-1)}, {1, O(1)}}, {{0, monomial_map(-1, 1, 1)}});
  SheafKernel Z = cycles(N, 1);
  Extension ext{Z.object, SheafMorphism::identity(Z.object), SheafMorphism::zero(Z.object, QcohSheaf(Q))};
  MistExtension m = mist_extension(N, 1, ext);
  EXPECT_TRUE(degreewise_isomorphic(m.H, N));
  EXPECT_TRUE(mist_output_section(m).has_value());
  Extension wrong{O(5), SheafMorphism::identity(O(5)), SheafMorphism::zero(O(5), QcohSheaf(Q))};
  EXPECT_THROW(mist_extension(N, 1, wrong), Error);
}

TEST(Mist, BaerClassesOnCycles) {
  BoundedComplex N(Q, {{0, O(-1)}, {1, O(1)}}, {{0, monomial_map(-1, 1, 1)}});
  QcohSheaf Z = cycles(N, 1).object;
  testing::Gen g(9, Q);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = g.uniform(0, 4);
    PolyMatrix y = PolyMatrix::column_vector(Ring::Laurent, Q, {Poly(Ring::Laurent, Q)});
    PolyMatrix z = PolyMatrix::column_vector(Ring::Laurent, Q, {g.poly(Ring::Laurent, 4)});
    ExtClass cls(n, Z, y, z);
    Extension ext = build_extension(cls);
    MistExtension m = mist_extension(N, 1, ext);
    EXPECT_EQ(extension_section(ext).has_value(), cls.is_zero());
    EXPECT_EQ(mist_output_section(m).has_value(), cls.is_zero());
  }
}

TEST(DerivedExt, LineBundleGrid) {
  for (int n = -3; n <= 3; ++n)
    for (int m = -3; m <= 3; ++m) {
      EXPECT_EQ(static_cast<int>(global_ext(O(n), O(m), 0)), testing::hom_line_oracle(n, m));
      EXPECT_EQ(static_cast<int>(global_ext(O(n), O(m), 1)), testing::ext_line_oracle(n, m));
      EXPECT_EQ(global_ext(O(n), O(m), 2), 0u);
    }
}

TEST(DerivedExt, SkyscraperExamples) {
  EXPECT_EQ(global_ext(at0(1), O(0), 1), 1u);
  EXPECT_EQ(global_ext(at0(1), O(0), 0), 0u);
  EXPECT_EQ(hom_double_complex_ext(at0(1), at0(1)), (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_EQ(hom_double_complex_ext(O(2), at0(3)), (std::vector<std::size_t>{3, 0, 0}));
  EXPECT_EQ(hom_double_complex_ext(direct_sum(O(1), at0(1)), QcohSheaf(Q)), (std::vector<std::size_t>{0, 0, 0}));
  EXPECT_THROW(hom_double_complex_ext(O(0), O(0)), Error);
}

TEST(DerivedExt, AgreesAcrossPathsAndResolutions) {
  testing::Gen g(31, Q);
  for (int trial = 0; trial < 8; ++trial) {
    QcohSheaf F = direct_sum(testing::scrambled_bundle(g, testing::random_type(g, 2, 2), 1), testing::random_torsion(g));
    QcohSheaf G = direct_sum(testing::random_torsion(g), testing::random_torsion(g));
    auto dc = hom_double_complex_ext(F, G);
    EXPECT_EQ(dc[0], global_ext(F, G, 0));
    EXPECT_EQ(dc[1], global_ext(F, G, 1));
    EXPECT_EQ(dc[2], global_ext(F, G, 2));
    QcohSheaf H = testing::scrambled_bundle(g, testing::random_type(g, 2, 2), 1);
    LineBundleResolution other = resolve_with_offset(F, g.uniform(0, 2));
    for (int i = 0; i <= 2; ++i) EXPECT_EQ(global_ext(other, H, i), global_ext(F, H, i));
  }
}

TEST(DerivedExt, EulerCharacteristicAdditiveOnExtensions) {
  auto chi = [](std::int64_t k, const QcohSheaf& X) {
    return static_cast<long>(global_ext(O(k), X, 0)) - static_cast<long>(global_ext(O(k), X, 1)) +
           static_cast<long>(global_ext(O(k), X, 2));
  };
  testing::Gen g(47, Q);
  for (int trial = 0; trial < 10; ++trial) {
    QcohSheaf F = testing::scrambled_bundle(g, testing::random_type(g, 2, 2), 1);
    if (g.coin()) F = direct_sum(F, testing::random_torsion(g));
    const std::int64_t n = g.uniform(-1, 4);
    PolyMatrix y(Ring::Laurent, Q, F.P().size(), 1), z = y;
    for (std::size_t r = 0; r < z.rows(); ++r) z(r, 0) = g.poly(Ring::Laurent, 6);
    Extension ext = build_extension(ExtClass(n, F, y, z));
    for (std::int64_t k = -3; k <= 3; ++k) EXPECT_EQ(chi(k, ext.middle), chi(k, F) + chi(k, O(n))) << "k=" << k;
  }
}

}  // namespace
}  // namespace qcoh
