#include <benchmark/benchmark.h>

#include <random>

#include "qcoh/classify.hpp"
#include "qcoh/derived_ext.hpp"
#include "qcoh/ext.hpp"
#include "qcoh/smith.hpp"
#include "qcoh/splitting.hpp"

namespace {

using namespace qcoh;

/// Upper unitriangular over k[x] (or k[x^-1]) with monomial entries of degree <= 2.
PolyMatrix triangular(Field f, Ring ring, std::size_t r, std::mt19937& rng) {
  PolyMatrix m = PolyMatrix::identity(ring, f, r);
  std::uniform_int_distribution<int> deg(0, 2), coef(-3, 3);
  const int sign = ring == Ring::XInv ? -1 : 1;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) m(i, j) = Poly::monomial(ring, Scalar(f, static_cast<long>(coef(rng))), sign * deg(rng));
  return m;
}

PolyMatrix scrambled_transition(Field f, std::size_t r, std::mt19937& rng) {
  std::vector<std::int64_t> type;
  std::uniform_int_distribution<int> twist(-4, 4);
  for (std::size_t i = 0; i < r; ++i) type.push_back(twist(rng));
  PolyMatrix A = triangular(f, Ring::X, r, rng).with_ring(Ring::Laurent);
  PolyMatrix B = triangular(f, Ring::XInv, r, rng).transposed().with_ring(Ring::Laurent);
  return A * monomial_diagonal(f, type) * B;
}

void BM_BirkhoffFactorize(benchmark::State& state) {
  std::mt19937 rng(1);
  const Field f = state.range(1) ? Field::prime(7) : Field::rationals();
  PolyMatrix T = scrambled_transition(f, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(birkhoff_factorize(T));
}
BENCHMARK(BM_BirkhoffFactorize)->ArgsProduct({{2, 4, 6}, {0, 1}});

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937 rng(2);
  const Field Q = Field::rationals();
  const auto r = static_cast<std::size_t>(state.range(0));
  PolyMatrix M(Ring::X, Q, r, r);
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, 3);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      M(i, j) = Poly::monomial(Ring::X, Scalar(Q, static_cast<long>(coef(rng))), deg(rng)) + Poly::constant(Ring::X, Q, 1);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(M, Ring::X));
}
BENCHMARK(BM_SmithNormalForm)->Arg(2)->Arg(4)->Arg(6);

void BM_ExtGrid(benchmark::State& state) {
  const Field Q = Field::rationals();
  for (auto _ : state) {
    std::size_t total = 0;
    for (int n = -6; n <= 6; ++n)
      for (int m = -6; m <= 6; ++m) total += ext1_line(n, QcohSheaf::line_bundle(Q, m)).dimension();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ExtGrid);

void BM_ClassifyWithTorsion(benchmark::State& state) {
  std::mt19937 rng(3);
  const Field Q = Field::rationals();
  QcohSheaf F = direct_sum(QcohSheaf::from_transition_matrix(scrambled_transition(Q, 3, rng)),
                           QcohSheaf::torsion(Point::finite(Scalar(Q, 2L)), static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(classify(QcohSheaf(F.M(), F.P(), F.N(), F.sigma(), F.tau())));
}
BENCHMARK(BM_ClassifyWithTorsion)->Arg(1)->Arg(3)->Arg(5);

void BM_DerivedExt(benchmark::State& state) {
  const Field Q = Field::rationals();
  QcohSheaf F = direct_sum(QcohSheaf::line_bundle_sum(Q, {2, -1}), QcohSheaf::torsion(Point::infinity(Q), 2));
  QcohSheaf G = direct_sum(QcohSheaf::line_bundle(Q, static_cast<std::int64_t>(state.range(0))),
                           QcohSheaf::torsion(Point::finite(Scalar::zero(Q)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(global_ext(F, G, 1));
}
BENCHMARK(BM_DerivedExt)->Arg(-2)->Arg(0)->Arg(3);

}  // namespace
BENCHMARK_MAIN();
