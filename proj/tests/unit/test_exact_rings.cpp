#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "qcoh/error.hpp"
#include "qcoh/smith.hpp"

namespace qcoh {
namespace {

const Field Q = Field::rationals();

Poly X(std::int64_t e, long c = 1, Ring r = Ring::Laurent) { return Poly::monomial(r, Scalar(Q, c), e); }
Poly C(long c, Ring r = Ring::Laurent) { return Poly::constant(r, Q, c); }

void expect_smith_certificate(const PolyMatrix& A, Ring ring) {
  SmithForm s = smith_normal_form(A, ring);
  EXPECT_EQ(s.U * A * s.V, s.D);
  EXPECT_EQ(s.U * s.U_inv, PolyMatrix::identity(ring, A.field(), A.rows()));
  EXPECT_EQ(s.V * s.V_inv, PolyMatrix::identity(ring, A.field(), A.cols()));
  EXPECT_TRUE(s.U.fits(ring));
  EXPECT_TRUE(s.V.fits(ring));
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) EXPECT_TRUE(s.D(i, j).is_zero());
  auto d = s.diagonal();
  for (std::size_t i = 0; i + 1 < d.size(); ++i) EXPECT_TRUE(euclid::divides(d[i], d[i + 1], ring));
  for (std::size_t i = 0; i < s.rank; ++i) EXPECT_EQ(euclid::normalize(d[i], ring).second, d[i]);
  if (A.square() && A.rows() > 0) {
    EXPECT_TRUE(euclid::is_unit(determinant(s.U), ring));
    EXPECT_TRUE(euclid::is_unit(determinant(s.V), ring));
  }
}

TEST(Scalar, RationalArithmeticIsExact) {
  Scalar a = Scalar::parse(Q, "1/3"), b = Scalar::parse(Q, "2/3");
  EXPECT_TRUE((a + b).is_one());
  EXPECT_EQ((a / b).to_string(), "1/2");
  EXPECT_THROW(Scalar::parse(Q, "1/0"), Error);
}

TEST(Scalar, PrimeFieldResiduesAreCanonical) {
  Field f7 = Field::prime(7);
  Scalar a(f7, -1L);
  EXPECT_EQ(a.residue(), 6u);
  EXPECT_TRUE((a * a).is_one());
  EXPECT_EQ(Scalar(f7, mpq_class(1, 3)) * Scalar(f7, 3L), Scalar::one(f7));
  EXPECT_THROW(Field::prime(8), Error);
  EXPECT_EQ(Field::parse("Fp:7"), f7);
}

TEST(Poly, RingTagsGuardExponents) {
  EXPECT_THROW(Poly::from_terms(Ring::X, Q, {{-1, Scalar(Q, 1L)}}), Error);
  Poly p = X(1, 1, Ring::X) + X(-1, 1, Ring::XInv);
  EXPECT_EQ(p.ring(), Ring::Laurent);
  EXPECT_EQ(p.to_string(), "x + x^-1");
}

TEST(Euclid, LaurentDivisionUsesSpan) {
  Poly a = X(3) + X(-2);
  Poly b = X(1) + C(1);
  auto [q, r] = euclid::divmod(a, b, Ring::Laurent);
  EXPECT_EQ(q * b + r, a);
  EXPECT_TRUE(r.is_zero() || euclid::norm(r, Ring::Laurent) < euclid::norm(b, Ring::Laurent));
  EXPECT_TRUE(euclid::is_unit(X(-4, 5), Ring::Laurent));
}

TEST(Euclid, LaurentResidueIsCanonical) {
  Poly d = X(2) - C(2);
  Poly f = X(-3) + X(5);
  Poly r = euclid::reduce(f, d, Ring::Laurent);
  EXPECT_TRUE(r.fits(Ring::X));
  EXPECT_LT(r.degree(), 2);
  EXPECT_TRUE(euclid::divides(d, f - r, Ring::Laurent));
}

TEST(Euclid, XInvReducesByReflection) {
  Poly d = X(-2, 1, Ring::XInv);
  Poly f = X(-3, 1, Ring::XInv) + X(-1, 4, Ring::XInv) + C(2, Ring::XInv);
  EXPECT_EQ(euclid::reduce(f, d, Ring::XInv), X(-1, 4) + C(2));
}

TEST(Smith, IdentityIsFixed) {
  auto I = PolyMatrix::identity(Ring::X, Q, 2);
  SmithForm s = smith_normal_form(I);
  EXPECT_EQ(s.D, I);
  EXPECT_EQ(s.U, I);
  EXPECT_EQ(s.V, I);
}

TEST(Smith, DiagonalAlreadyOrdered) {
  auto A = PolyMatrix::diagonal(Ring::X, Q, {X(1, 1, Ring::X), X(2, 1, Ring::X)});
  EXPECT_EQ(smith_normal_form(A).D, A);
}

TEST(Smith, UnitEntryPivot) {
  auto A = PolyMatrix::from_rows(Ring::X, Q, {{X(1), C(1)}, {C(0), X(1)}}).with_ring(Ring::X);
  SmithForm s = smith_normal_form(A);
  EXPECT_EQ(s.D, PolyMatrix::diagonal(Ring::X, Q, {C(1), X(2)}));
  expect_smith_certificate(A, Ring::X);
}

TEST(Smith, ZeroMatrixGivesZeroDiagonal) {
  PolyMatrix Z(Ring::X, Q, 2, 3);
  SmithForm s = smith_normal_form(Z);
  EXPECT_EQ(s.rank, 0u);
  EXPECT_TRUE(s.D.is_zero());
}

TEST(Smith, RandomCertificatesAndFractionFieldRank) {
  for (Field f : {Q, Field::prime(7)}) {
    testing::Gen g(20261016, f);
    for (int trial = 0; trial < 200; ++trial) {
      Ring ring = std::array{Ring::X, Ring::XInv, Ring::Laurent}[trial % 3];
      std::size_t r = static_cast<std::size_t>(g.uniform(1, 4)), c = static_cast<std::size_t>(g.uniform(1, 4));
      PolyMatrix A = g.matrix(ring, r, c, 3, 0.4);
      if (g.coin(0.3) && r > 1) A.add_row_multiple(r - 1, 0, g.poly(ring, 2));
      SCOPED_TRACE(A.to_string());
      expect_smith_certificate(A, ring);
      EXPECT_EQ(smith_normal_form(A, ring).rank, testing::fraction_field_rank(A));
    }
  }
}

TEST(LaurentUnit, Decompose) {
  auto [c0, e0] = laurent_unit_decompose(C(1));
  EXPECT_TRUE(c0.is_one());
  EXPECT_EQ(e0, 0);
  auto [c, e] = laurent_unit_decompose(X(-2, 3));
  EXPECT_EQ(c, Scalar(Q, 3L));
  EXPECT_EQ(e, -2);
  EXPECT_EQ(Poly::monomial(Ring::Laurent, c, e), X(-2, 3));
  try {
    laurent_unit_decompose(X(1) + C(1));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NotAUnit);
  }
  try {
    laurent_unit_decompose(Poly(Ring::Laurent, Q));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::ZeroInput);
  }
}

TEST(SolveLinear, Examples) {
  auto I = PolyMatrix::identity(Ring::X, Q, 2);
  auto b = PolyMatrix::column_vector(Ring::X, Q, {X(3, 2, Ring::X), C(5, Ring::X)});
  EXPECT_EQ(*solve_linear(I, b), b);
  auto A = PolyMatrix::from_rows(Ring::X, Q, {{X(1, 1, Ring::X)}});
  auto one = PolyMatrix::column_vector(Ring::X, Q, {C(1, Ring::X)});
  EXPECT_FALSE(solve_linear(A, one, Ring::X).has_value());
  auto xi = solve_linear(A, one, Ring::Laurent);
  ASSERT_TRUE(xi.has_value());
  EXPECT_EQ((*xi)(0, 0), X(-1));
  EXPECT_THROW(solve_linear(I, PolyMatrix::column_vector(Ring::X, Q, {C(1)})), Error);
}

TEST(SolveLinear, RandomSolutionsVerify) {
  testing::Gen g(77, Q);
  for (int trial = 0; trial < 100; ++trial) {
    Ring ring = std::array{Ring::X, Ring::XInv, Ring::Laurent}[trial % 3];
    PolyMatrix A = g.matrix(ring, 3, 3, 2, 0.3);
    PolyMatrix b = g.coin() ? A * g.matrix(ring, 3, 1, 2) : g.matrix(ring, 3, 1, 2);
    auto xi = solve_linear(A, b, ring);
    if (xi) {
      EXPECT_EQ(A * *xi, b);
      EXPECT_TRUE(xi->fits(ring));
    } else {
      SmithForm s = smith_normal_form(A, ring);
      PolyMatrix c = s.U * b;
      bool obstructed = false;
      for (std::size_t i = 0; i < c.rows(); ++i)
        obstructed |= i < s.rank ? !euclid::divides(s.D(i, i), c(i, 0), ring) : !c(i, 0).is_zero();
      EXPECT_TRUE(obstructed);
    }
  }
}

TEST(Inverse, UnimodularRoundTrip) {
  testing::Gen g(5, Field::prime(7));
  for (Ring ring : {Ring::X, Ring::XInv, Ring::Laurent}) {
    for (int trial = 0; trial < 20; ++trial) {
      PolyMatrix U = g.unimodular(ring, 3, 3);
      EXPECT_EQ(U * inverse(U, ring), PolyMatrix::identity(ring, g.field(), 3));
    }
  }
  auto A = PolyMatrix::from_rows(Ring::X, Q, {{X(1, 1, Ring::X)}});
  EXPECT_THROW(inverse(A, Ring::X), Error);
  EXPECT_EQ(inverse(A, Ring::Laurent)(0, 0), X(-1));
}

TEST(Determinant, MatchesExpansion) {
  auto A = PolyMatrix::from_rows(Ring::Laurent, Q, {{X(1), C(1)}, {C(0), X(-1)}});
  EXPECT_EQ(determinant(A), C(1));
  auto B = PolyMatrix::from_rows(Ring::Laurent, Q, {{C(0), C(1), C(0)}, {C(1), C(0), C(0)}, {C(0), C(0), X(2)}});
  EXPECT_EQ(determinant(B), -X(2));
}

TEST(Kernel, BasisIsAnnihilated) {
  testing::Gen g(11, Q);
  for (int trial = 0; trial < 30; ++trial) {
    PolyMatrix A = g.matrix(Ring::X, 2, 4, 2);
    PolyMatrix K = kernel_basis(A, Ring::X);
    EXPECT_EQ(K.cols(), 4 - testing::fraction_field_rank(A));
    EXPECT_TRUE((A * K).is_zero());
  }
}

}  // namespace
}  // namespace qcoh
