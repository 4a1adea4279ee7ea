#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qcoh/poly_matrix.hpp"

namespace qcoh::testing {

/// Deterministic generator of random algebraic data for property tests.
class Gen {
 public:
  Gen(std::uint64_t seed, Field field) : rng_(seed), field_(field) {}

  Field field() const { return field_; }
  std::mt19937_64& rng() { return rng_; }

  int uniform(int lo, int hi);
  bool coin(double p = 0.5);
  Scalar scalar(int bound = 3);
  Scalar nonzero_scalar(int bound = 3);
  /// Random polynomial with exponents in the ring-appropriate window of width max_deg.
  Poly poly(Ring ring, int max_deg, double density = 0.6);
  PolyMatrix matrix(Ring ring, std::size_t rows, std::size_t cols, int max_deg, double zero_prob = 0.3);
  /// Product of random elementary operations; determinant is a nonzero scalar.
  PolyMatrix unimodular(Ring ring, std::size_t n, int max_deg, int steps = 6);

 private:
  std::mt19937_64 rng_;
  Field field_;
};

}  // namespace qcoh::testing

#include "qcoh/sheaf.hpp"

namespace qcoh::testing {

/// Twists of a random sum of line bundles, in descending order.
std::vector<std::int64_t> random_type(Gen& g, int max_rank, int bound);
/// Locally free sheaf with gluing U * diag(x^type) * V for random unimodular U, V.
QcohSheaf scrambled_bundle(Gen& g, const std::vector<std::int64_t>& type, int unimodular_degree = 2);
/// Unimodular matrix over k[x] or k[x^-1] whose entries have degree at most max_degree
/// in the ring variable.
PolyMatrix bounded_unimodular(Gen& g, Ring ring, std::size_t n, int max_degree);
/// Random skyscraper at 0, infinity or 1 with multiplicity up to max_mult.
QcohSheaf random_torsion(Gen& g, int max_mult = 2);

}  // namespace qcoh::testing
