#pragma once

#include <cstdint>
#include <vector>

#include "qcoh/poly_matrix.hpp"

namespace qcoh {

/// A * T * B = diag(x^type[0], ..., x^type[r-1]) with A in GL(k[x]), B in GL(k[x^-1]).
struct SplittingData {
  std::vector<std::int64_t> type;  ///< descending
  PolyMatrix A, B;
  PolyMatrix A_inv, B_inv;
};

/// Birkhoff factorization of a Laurent matrix with unit determinant. Throws NotInvertible.
SplittingData birkhoff_factorize(const PolyMatrix& T);

/// diag(x^type) as a Laurent matrix.
PolyMatrix monomial_diagonal(Field field, const std::vector<std::int64_t>& type);

}  // namespace qcoh
