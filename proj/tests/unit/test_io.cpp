#include <gtest/gtest.h>

#include "generators.hpp"
#include "qcoh/classify.hpp"
#include "qcoh/error.hpp"
#include "qcoh/io.hpp"

namespace qcoh {
namespace {

using io::Json;
const Field Q = Field::rationals();

std::string parse_error_of(const Json& j) {
  try {
    io::parse_sheaf(j, Q, "");
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(Io, PolynomialText) {
  Poly p = io::parse_poly(Ring::Laurent, Q, "3/4x^-2 + x - 1");
  EXPECT_EQ(p.coeff(-2), Scalar(Q, mpq_class(3, 4)));
  EXPECT_EQ(p.coeff(1), Scalar::one(Q));
  EXPECT_EQ(p.coeff(0), Scalar(Q, -1L));
  EXPECT_EQ(io::parse_poly(Ring::X, Q, "2*x^(3)"), Poly::monomial(Ring::X, Scalar(Q, 2L), 3));
  EXPECT_EQ(io::parse_poly(Ring::XInv, Q, "-x^-1"), Poly::monomial(Ring::XInv, Scalar(Q, -1L), -1));
  EXPECT_THROW(io::parse_poly(Ring::X, Q, "x^-1"), Error);
  EXPECT_THROW(io::parse_poly(Ring::X, Q, "x^"), Error);
  EXPECT_THROW(io::parse_poly(Ring::X, Q, "3y"), Error);
  Field F7 = Field::prime(7);
  EXPECT_EQ(io::parse_poly(Ring::X, F7, "8x").coeff(1), Scalar::one(F7));
}

TEST(Io, PolynomialMapRoundTrip) {
  testing::Gen g(11, Q);
  for (int t = 0; t < 50; ++t) {
    Poly p = g.poly(Ring::Laurent, 5);
    Json j = io::to_json(p);
    EXPECT_EQ(io::parse_poly(j, Ring::Laurent, Q, ""), p);
    EXPECT_EQ(io::parse_poly(Ring::Laurent, Q, p.is_zero() ? "0" : p.to_string()), p);
  }
}

TEST(Io, ShorthandsAgreeWithConstructors) {
  EXPECT_EQ(io::parse_sheaf(Json{{"line_bundle", -3}}, Q).sheaf, QcohSheaf::line_bundle(Q, -3));
  Json t = Json::parse(R"({"torsion": {"point": "inf", "mult": 2}})");
  EXPECT_EQ(io::parse_sheaf(t, Q).sheaf, QcohSheaf::torsion(Point::infinity(Q), 2));
  Json sum = Json::parse(R"({"direct_sum": [{"line_bundle": 1}, {"torsion": {"point": "0", "mult": 1}}]})");
  StructureReport r = classify(io::parse_sheaf(sum, Q).sheaf);
  EXPECT_EQ(r.type, std::vector<std::int64_t>({1}));
  EXPECT_EQ(r.torsion.at_zero, std::vector<std::int64_t>({1}));
  Json diag = Json::parse(R"({"transition": [["x^2", "0"], ["0", "x^-1"]]})");
  EXPECT_EQ(classify(io::parse_sheaf(diag, Q).sheaf).type, std::vector<std::int64_t>({2, -1}));
}

TEST(Io, ExplicitFormWithNonDiagonalRelations) {
  // k[x]^2 modulo x(e1 + e2); sigma kills the torsion generator e1 + e2.
  Json j = Json::parse(R"({
    "M": {"ring": "x", "gens": 2, "relations": [["x"], ["x"]]},
    "P": {"ring": "laurent", "gens": 1, "relations": []},
    "N": {"ring": "xinv", "gens": 1, "relations": []},
    "sigma": [["1", "-1"]],
    "tau": [["1"]]
  })");
  SheafPresentation pres = io::parse_sheaf(j, Q);
  EXPECT_TRUE(validate(pres.sheaf).valid);
  StructureReport r = classify(pres.sheaf);
  EXPECT_EQ(r.type, std::vector<std::int64_t>({0}));
  EXPECT_EQ(r.torsion.at_zero, std::vector<std::int64_t>({1}));
}

TEST(Io, SheafRoundTrip) {
  for (Field f : {Q, Field::prime(7)}) {
    testing::Gen g(5, f);
    for (int t = 0; t < 30; ++t) {
      QcohSheaf F = testing::scrambled_bundle(g, testing::random_type(g, 3, 3));
      if (g.coin()) F = direct_sum(F, testing::random_torsion(g));
      Json j = io::to_json(F);
      SheafPresentation back = io::parse_sheaf(Json::parse(j.dump()), f);
      EXPECT_EQ(back.sheaf, F);
      EXPECT_TRUE(validate(back.sheaf).valid);
      EXPECT_EQ(io::to_json(back.sheaf).dump(), j.dump());
    }
  }
}

TEST(Io, ComplexRoundTrip) {
  QcohSheaf A = QcohSheaf::line_bundle(Q, 1);
  BoundedComplex C = disc(A, 0);
  Json j = io::to_json(C);
  BoundedComplex back = io::parse_complex(Json::parse(j.dump()), Q);
  EXPECT_EQ(back.lo(), -1);
  EXPECT_EQ(back.hi(), 0);
  EXPECT_EQ(io::to_json(back).dump(), j.dump());
  EXPECT_TRUE(is_exact(back));
}

TEST(Io, ErrorsCitePathAndToken) {
  std::string msg = parse_error_of(Json::parse(R"({"transition": [["x^2", "0"], ["0", "x^?"]]})"));
  EXPECT_NE(msg.find("/transition/1/1"), std::string::npos) << msg;
  EXPECT_NE(msg.find("x^?"), std::string::npos) << msg;
  msg = parse_error_of(Json::parse(R"({"M": {"gens": 1}})"));
  EXPECT_NE(msg.find("missing key 'P'"), std::string::npos) << msg;
  msg = parse_error_of(Json::parse(R"({"direct_sum": [{"line_bundle": "two"}]})"));
  EXPECT_NE(msg.find("/direct_sum/0/line_bundle"), std::string::npos) << msg;
}

TEST(Io, MorphismOutsideWindowRejected) {
  Json j = Json::parse(R"({"window": [0, 0], "objects": {"1": {"line_bundle": 0}}})");
  EXPECT_THROW(io::parse_complex(j, Q), Error);
}

}  // namespace
}  // namespace qcoh
