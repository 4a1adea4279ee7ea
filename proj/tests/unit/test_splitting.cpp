#include <gtest/gtest.h>

#include <numeric>

#include "generators.hpp"
#include "qcoh/classify.hpp"
#include "qcoh/error.hpp"
#include "qcoh/sheaf_ops.hpp"
#include "qcoh/smith.hpp"
#include "qcoh/splitting.hpp"

namespace qcoh {
namespace {

const Field Q = Field::rationals();
const Field F7 = Field::prime(7);

Poly L(std::int64_t e, long c = 1) { return Poly::monomial(Ring::Laurent, Scalar(Q, c), e); }
QcohSheaf O(std::int64_t n) { return QcohSheaf::line_bundle(Q, n); }
using Type = std::vector<std::int64_t>;

void expect_certificate(const PolyMatrix& T, const SplittingData& s) {
  EXPECT_EQ(s.A.with_ring(Ring::Laurent) * T * s.B.with_ring(Ring::Laurent), monomial_diagonal(T.field(), s.type));
  EXPECT_TRUE(s.A.fits(Ring::X));
  EXPECT_TRUE(s.B.fits(Ring::XInv));
  EXPECT_EQ(s.A * s.A_inv, PolyMatrix::identity(Ring::X, T.field(), T.rows()));
  EXPECT_EQ(s.B * s.B_inv, PolyMatrix::identity(Ring::XInv, T.field(), T.rows()));
  EXPECT_TRUE(std::is_sorted(s.type.rbegin(), s.type.rend()));
}

TEST(Birkhoff, Examples) {
  auto D = PolyMatrix::from_rows(Ring::Laurent, Q, {{L(2), L(0, 0)}, {L(0, 0), L(-1)}});
  SplittingData d = birkhoff_factorize(D);
  EXPECT_EQ(d.type, (Type{2, -1}));
  EXPECT_EQ(d.A, PolyMatrix::identity(Ring::X, Q, 2));
  auto T = PolyMatrix::from_rows(Ring::Laurent, Q, {{L(1), L(0)}, {L(0, 0), L(-1)}});
  SplittingData t = birkhoff_factorize(T);
  EXPECT_EQ(t.type, (Type{1, -1}));
  expect_certificate(T, t);
  auto S = PolyMatrix::from_rows(Ring::Laurent, Q, {{L(1), L(0)}, {L(1), L(0)}});
  EXPECT_THROW(birkhoff_factorize(S), Error);
}

TEST(Birkhoff, RandomRoundTrips) {
  for (Field field : {Q, F7}) {
    testing::Gen g(field.is_rational() ? 17 : 71, field);
    for (int trial = 0; trial < 40; ++trial) {
      Type type = testing::random_type(g, 4, 4);
      const std::size_t r = type.size();
      PolyMatrix U = g.unimodular(Ring::X, r, 3).with_ring(Ring::Laurent);
      PolyMatrix V = g.unimodular(Ring::XInv, r, 3).with_ring(Ring::Laurent);
      PolyMatrix T = U * monomial_diagonal(field, type) * V;
      SplittingData s = birkhoff_factorize(T);
      EXPECT_EQ(s.type, type);
      expect_certificate(T, s);
      auto [c, e] = laurent_unit_decompose(determinant(T));
      (void)c;
      EXPECT_EQ(std::accumulate(s.type.begin(), s.type.end(), std::int64_t{0}), e);
    }
  }
}

TEST(Splitting, TypeOfSumsAndTwists) {
  EXPECT_EQ(splitting_type(direct_sum(O(3), O(-2))), (Type{3, -2}));
  EXPECT_TRUE(splitting_type(QcohSheaf(Q)).empty());
  EXPECT_THROW(splitting_type(direct_sum(O(0), QcohSheaf::torsion(Point::infinity(Q), 1))), Error);
  testing::Gen g(3, Q);
  for (int trial = 0; trial < 15; ++trial) {
    Type type = testing::random_type(g, 3, 3);
    QcohSheaf F = testing::scrambled_bundle(g, type);
    EXPECT_EQ(splitting_type(F), type);
    Type shifted = type;
    for (auto& t : shifted) t += 1;
    EXPECT_EQ(splitting_type(twist(F, 1)), shifted);
    EXPECT_EQ(classify(twist(twist(F, 2), -3)), classify(twist(F, -1)));
  }
}

TEST(Splitting, StandardFormIsAnIsomorphism) {
  testing::Gen g(8, Q);
  for (int trial = 0; trial < 10; ++trial) {
    QcohSheaf F = testing::scrambled_bundle(g, testing::random_type(g, 3, 3));
    SheafMorphism psi = standard_form_map(F), inv = standard_form_inverse(F);
    EXPECT_EQ(compose(inv, psi), SheafMorphism::identity(psi.source()));
    EXPECT_EQ(compose(psi, inv), SheafMorphism::identity(F));
  }
}

TEST(Filtration, QuotientsAreLabelledLineBundles) {
  auto T = PolyMatrix::from_rows(Ring::Laurent, Q, {{L(1), L(0)}, {L(0, 0), L(-1)}});
  testing::Gen g(41, Q);
  std::vector<QcohSheaf> cases{direct_sum(O(2), O(-1)), QcohSheaf::from_transition_matrix(T), O(4)};
  for (int i = 0; i < 5; ++i) cases.push_back(testing::scrambled_bundle(g, testing::random_type(g, 3, 3)));
  for (const auto& F : cases) {
    Filtration f = line_filtration(F);
    ASSERT_EQ(f.stages.size(), F.rank() + 1);
    Type labels = f.labels, type = splitting_type(F);
    std::sort(labels.begin(), labels.end());
    std::sort(type.begin(), type.end());
    EXPECT_EQ(labels, type);
    EXPECT_TRUE(f.stages.front().is_zero());
    for (std::size_t k = 0; k < f.steps.size(); ++k) {
      EXPECT_TRUE(is_monomorphism(f.steps[k]));
      EXPECT_TRUE(validate(f.stages[k + 1]).valid);
      EXPECT_EQ(classify(cokernel(f.steps[k]).object), classify(O(f.labels[k])));
    }
    for (const auto& m : f.into_total) EXPECT_TRUE(is_monomorphism(m));
    EXPECT_TRUE(is_epimorphism(f.into_total.back()));
  }
}

TEST(Zigzag, Examples) {
  ZigzagState split = coordinate_decomposition(direct_sum(O(0), O(0)));
  ZigzagResult empty = zigzag_closure(split, {});
  EXPECT_TRUE(empty.I.empty());
  EXPECT_TRUE(empty.J.empty());
  ZigzagResult one = zigzag_closure(split, {1});
  EXPECT_EQ(one.I, (std::set<std::size_t>{1}));
  EXPECT_EQ(one.J, (std::set<std::size_t>{1}));

  auto lower = PolyMatrix::from_rows(Ring::Laurent, Q, {{L(0), L(0, 0)}, {L(0), L(0)}});
  ZigzagState mixed = coordinate_decomposition(QcohSheaf::from_transition_matrix(lower));
  ZigzagResult all = zigzag_closure(mixed, {0});
  EXPECT_EQ(all.I, (std::set<std::size_t>{0, 1}));
  EXPECT_EQ(all.J, (std::set<std::size_t>{0, 1}));
  EXPECT_TRUE(localizations_agree(mixed, all.I, all.J));

  auto upper = PolyMatrix::from_rows(Ring::Laurent, Q, {{L(0), L(0)}, {L(0, 0), L(0)}});
  ZigzagState triangular = coordinate_decomposition(QcohSheaf::from_transition_matrix(upper));
  ZigzagResult first = zigzag_closure(triangular, {0});
  EXPECT_EQ(first.I, (std::set<std::size_t>{0}));
  EXPECT_EQ(first.J, (std::set<std::size_t>{0}));
}

TEST(Zigzag, ClosureIsTwoSidedAndValid) {
  testing::Gen g(2, Q);
  for (int trial = 0; trial < 15; ++trial) {
    QcohSheaf F = testing::scrambled_bundle(g, testing::random_type(g, 4, 2), 1);
    ZigzagState st = coordinate_decomposition(F);
    std::set<std::size_t> seed;
    for (std::size_t i = 0; i < F.rank(); ++i)
      if (g.coin(0.3)) seed.insert(i);
    ZigzagResult z = zigzag_closure(st, seed);
    EXPECT_TRUE(std::includes(z.I.begin(), z.I.end(), seed.begin(), seed.end()));
    EXPECT_TRUE(localizations_agree(st, z.I, z.J));
    EXPECT_TRUE(validate(z.subsheaf).valid);
    EXPECT_EQ(z.I.size(), z.J.size());
  }
}

}  // namespace
}  // namespace qcoh
