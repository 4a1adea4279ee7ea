#pragma once

#include <cstdint>
#include <vector>

#include "qcoh/poly_matrix.hpp"

/// Reference computations independent of the library's algorithms.
namespace qcoh::testing {

/// Rank over the fraction field by cross-multiplying Gaussian elimination.
std::size_t fraction_field_rank(const PolyMatrix& A);

/// dim k[x,x^-1] / (x^n k[x] + x^m k[x^-1]) by listing surviving monomials.
int ext_line_oracle(int n, int m);
/// dim k[x] ∩ x^(m-n) k[x^-1] by listing common monomials.
int hom_line_oracle(int n, int m);

}  // namespace qcoh::testing
