#include "generators.hpp"
#include <algorithm>

namespace qcoh::testing {

int Gen::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool Gen::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Scalar Gen::scalar(int bound) { return Scalar(field_, static_cast<long>(uniform(-bound, bound))); }

Scalar Gen::nonzero_scalar(int bound) {
  while (true) {
    Scalar s = scalar(bound);
    if (!s.is_zero()) return s;
  }
}

Poly Gen::poly(Ring ring, int max_deg, double density) {
  int lo = 0, hi = max_deg;
  if (ring == Ring::XInv) lo = -max_deg, hi = 0;
  if (ring == Ring::Laurent) lo = -max_deg / 2 - (max_deg % 2), hi = max_deg / 2;
  Poly p(ring, field_);
  for (int e = lo; e <= hi; ++e)
    if (coin(density)) p += Poly::monomial(ring, scalar(), e);
  return p;
}

PolyMatrix Gen::matrix(Ring ring, std::size_t rows, std::size_t cols, int max_deg, double zero_prob) {
  PolyMatrix m(ring, field_, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (!coin(zero_prob)) m(r, c) = poly(ring, max_deg);
  return m;
}

PolyMatrix Gen::unimodular(Ring ring, std::size_t n, int max_deg, int steps) {
  PolyMatrix m = PolyMatrix::identity(ring, field_, n);
  if (n == 0) return m;
  for (std::size_t i = 0; i < n; ++i) m.scale_row(i, Poly::constant(ring, nonzero_scalar()));
  if (n == 1) return m;
  for (int s = 0; s < steps; ++s) {
    std::size_t a = static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1));
    std::size_t b = static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 2));
    if (b >= a) ++b;
    if (coin(0.5))
      m.add_row_multiple(a, b, poly(ring, max_deg));
    else
      m.add_col_multiple(a, b, poly(ring, max_deg));
  }
  return m;
}

}  // namespace qcoh::testing

namespace qcoh::testing {

std::vector<std::int64_t> random_type(Gen& g, int max_rank, int bound) {
  std::vector<std::int64_t> type(static_cast<std::size_t>(g.uniform(1, max_rank)));
  for (auto& t : type) t = g.uniform(-bound, bound);
  std::sort(type.rbegin(), type.rend());
  return type;
}

QcohSheaf scrambled_bundle(Gen& g, const std::vector<std::int64_t>& type, int unimodular_degree) {
  const std::size_t r = type.size();
  PolyMatrix U = g.unimodular(Ring::X, r, unimodular_degree).with_ring(Ring::Laurent);
  PolyMatrix V = g.unimodular(Ring::XInv, r, unimodular_degree).with_ring(Ring::Laurent);
  std::vector<Poly> diag;
  for (auto t : type) diag.push_back(Poly::x_power(Ring::Laurent, g.field(), t));
  return QcohSheaf::from_transition_matrix(U * PolyMatrix::diagonal(Ring::Laurent, g.field(), diag) * V);
}

PolyMatrix bounded_unimodular(Gen& g, Ring ring, std::size_t n, int max_degree) {
  auto degree = [&](const Poly& p) -> std::int64_t { return ring == Ring::X ? p.degree() : -p.low_degree(); };
  while (true) {
    PolyMatrix m = g.unimodular(ring, n, g.uniform(1, max_degree), g.uniform(1, 2 * static_cast<int>(n)));
    bool ok = true;
    for (std::size_t r = 0; r < n && ok; ++r)
      for (std::size_t c = 0; c < n && ok; ++c) ok = m(r, c).is_zero() || degree(m(r, c)) <= max_degree;
    if (ok) return m;
  }
}

QcohSheaf random_torsion(Gen& g, int max_mult) {
  const int mult = g.uniform(1, max_mult);
  switch (g.uniform(0, 2)) {
    case 0:
      return QcohSheaf::torsion(Point::finite(Scalar::zero(g.field())), mult);
    case 1:
      return QcohSheaf::torsion(Point::infinity(g.field()), mult);
    default:
      return QcohSheaf::torsion(Point::finite(Scalar::one(g.field())), mult);
  }
}

}  // namespace qcoh::testing
