#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qcoh/poly_matrix.hpp"

namespace qcoh {

/// Certificate of a Smith reduction: U * A * V = D, with the inverses of U and V.
struct SmithForm {
  PolyMatrix U, D, V;
  PolyMatrix U_inv, V_inv;
  std::size_t rank = 0;

  /// Diagonal entries d_0 | d_1 | ... (zeros past rank).
  std::vector<Poly> diagonal() const;
};

/// Smith normal form over any of the three coordinate rings. Pivots are chosen by
/// minimal Euclidean norm with ties broken by lowest (row, col); nonzero diagonal
/// entries are normalized (see euclid::normalize).
SmithForm smith_normal_form(const PolyMatrix& A, Ring ring);
inline SmithForm smith_normal_form(const PolyMatrix& A) { return smith_normal_form(A, A.ring()); }

/// Some solution xi of A * xi = b over `ring`, or nullopt. b may have several columns.
std::optional<PolyMatrix> solve_linear(const PolyMatrix& A, const PolyMatrix& b, Ring ring);
inline std::optional<PolyMatrix> solve_linear(const PolyMatrix& A, const PolyMatrix& b) {
  return solve_linear(A, b, join(A.ring(), b.ring()));
}

/// Columns form a basis of the (free) kernel { xi : A xi = 0 } over `ring`.
PolyMatrix kernel_basis(const PolyMatrix& A, Ring ring);

std::size_t rank(const PolyMatrix& A);

/// Inverse over `ring`; throws NotInvertible when A is not unimodular there.
PolyMatrix inverse(const PolyMatrix& A, Ring ring);

/// Fraction-free (Bareiss) determinant, computed in k[x,x^-1].
Poly determinant(const PolyMatrix& A);

/// u = c * x^e. Throws ZeroInput for u = 0 and NotAUnit when u is not a monomial.
std::pair<Scalar, std::int64_t> laurent_unit_decompose(const Poly& u);

/// Inverse of a unit of `ring` (nonzero constant, or monomial over k[x,x^-1]).
Poly unit_inverse(const Poly& u, Ring ring);

}  // namespace qcoh
