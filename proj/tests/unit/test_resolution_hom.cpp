#include <gtest/gtest.h>

#include "generators.hpp"
#include "qcoh/classify.hpp"
#include "qcoh/hom.hpp"
#include "qcoh/resolution.hpp"
#include "qcoh/sheaf_ops.hpp"

namespace qcoh {
namespace {

const Field Q = Field::rationals();
QcohSheaf O(std::int64_t n) { return QcohSheaf::line_bundle(Q, n); }
QcohSheaf at0(int m) { return QcohSheaf::torsion(Point::finite(Scalar::zero(Q)), m); }
QcohSheaf at1(int m) { return QcohSheaf::torsion(Point::finite(Scalar(Q, 1)), m); }
QcohSheaf atinf(int m) { return QcohSheaf::torsion(Point::infinity(Q), m); }

// A labelled building block with known Hom dimensions against the others.
struct Piece {
  enum Kind { Line, Zero, One, Inf } kind;
  int value;
  QcohSheaf sheaf() const {
    switch (kind) {
      case Line: return O(value);
      case Zero: return at0(value);
      case One: return at1(value);
      default: return atinf(value);
    }
  }
};

int hom_oracle(const Piece& a, const Piece& b) {
  if (a.kind == Piece::Line && b.kind == Piece::Line) return std::max(0, b.value - a.value + 1);
  if (a.kind == Piece::Line) return b.value;
  if (b.kind == Piece::Line) return 0;
  return a.kind == b.kind ? std::min(a.value, b.value) : 0;
}

std::vector<Piece> random_pieces(testing::Gen& g, int count) {
  std::vector<Piece> out;
  for (int i = 0; i < count; ++i) {
    auto kind = static_cast<Piece::Kind>(g.uniform(0, 3));
    out.push_back({kind, kind == Piece::Line ? g.uniform(-2, 2) : g.uniform(1, 2)});
  }
  return out;
}

QcohSheaf sum_of(const std::vector<Piece>& pieces) {
  std::vector<QcohSheaf> parts;
  for (const auto& p : pieces) parts.push_back(p.sheaf());
  return direct_sum(parts, Q);
}

TEST(Resolution, Examples) {
  LineBundleResolution r = resolve(O(3));
  EXPECT_TRUE(r.E1.is_zero());
  EXPECT_EQ(r.e0_twists, (std::vector<std::int64_t>{3}));
  LineBundleResolution t = resolve(at0(1));
  EXPECT_EQ(t.e0_twists, (std::vector<std::int64_t>{0}));
  EXPECT_EQ(t.e1_twists, (std::vector<std::int64_t>{-1}));
  EXPECT_EQ(check_resolution(t), "");
  LineBundleResolution s = resolve(direct_sum(O(2), at0(1)));
  EXPECT_EQ(s.e0_twists, (std::vector<std::int64_t>{2, 0}));
  EXPECT_EQ(s.e1_twists, (std::vector<std::int64_t>{-1}));
}

TEST(Resolution, RandomSheavesAndOffsets) {
  testing::Gen g(101, Q);
  for (int trial = 0; trial < 12; ++trial) {
    QcohSheaf F = sum_of(random_pieces(g, g.uniform(1, 3)));
    if (g.coin()) F = direct_sum(F, testing::scrambled_bundle(g, testing::random_type(g, 2, 2), 1));
    LineBundleResolution r = resolve(F);
    EXPECT_EQ(check_resolution(r), "");
    EXPECT_EQ(classify(cokernel(r.d).object), classify(F));
    LineBundleResolution o = resolve_with_offset(F, g.uniform(0, 2));
    EXPECT_EQ(check_resolution(o), "");
  }
}

TEST(HomSpace, PairwiseOracle) {
  std::vector<Piece> pieces{{Piece::Line, -2}, {Piece::Line, 0}, {Piece::Line, 1}, {Piece::Zero, 1}, {Piece::Zero, 2},
                            {Piece::One, 2},   {Piece::Inf, 1}};
  for (const auto& a : pieces)
    for (const auto& b : pieces) {
      HomSpace h = hom_space(a.sheaf(), b.sheaf());
      EXPECT_EQ(static_cast<int>(h.dimension()), hom_oracle(a, b)) << a.kind << a.value << " " << b.kind << b.value;
      for (const auto& f : h.basis()) EXPECT_EQ(f.check(), "");
    }
}

TEST(HomSpace, SumsAreAdditive) {
  testing::Gen g(77, Q);
  for (int trial = 0; trial < 8; ++trial) {
    auto as = random_pieces(g, g.uniform(1, 3)), bs = random_pieces(g, g.uniform(1, 3));
    int expected = 0;
    for (const auto& a : as)
      for (const auto& b : bs) expected += hom_oracle(a, b);
    HomSpace h = hom_space(sum_of(as), sum_of(bs));
    EXPECT_EQ(static_cast<int>(h.dimension()), expected);
  }
}

TEST(HomSpace, CoordinatesRoundTrip) {
  testing::Gen g(5, Q);
  QcohSheaf G = direct_sum(testing::scrambled_bundle(g, {1, -1}), at0(2));
  QcohSheaf F = direct_sum(testing::scrambled_bundle(g, {2, 0}), atinf(1));
  HomSpace h = hom_space(G, F);
  ASSERT_GT(h.dimension(), 0u);
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < h.dimension(); ++i) c.push_back(g.scalar());
  EXPECT_EQ(h.coordinates(h.combination(c)), c);
}

}  // namespace
}  // namespace qcoh
