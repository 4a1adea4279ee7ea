#include "oracles.hpp"

namespace qcoh::testing {

std::size_t fraction_field_rank(const PolyMatrix& A) {
  PolyMatrix M = A.with_ring(Ring::Laurent);
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
    std::size_t p = r;
    while (p < M.rows() && M(p, c).is_zero()) ++p;
    if (p == M.rows()) continue;
    M.swap_rows(r, p);
    for (std::size_t i = r + 1; i < M.rows(); ++i) {
      if (M(i, c).is_zero()) continue;
      Poly a = M(r, c), b = M(i, c);
      for (std::size_t j = c; j < M.cols(); ++j) M(i, j) = a * M(i, j) - b * M(r, j);
    }
    ++r;
  }
  return r;
}

int ext_line_oracle(int n, int m) {
  int count = 0;
  // Monomials outside [lo, hi] are always covered by one of the two summands.
  for (int e = std::min(n, m) - 2; e <= std::max(n, m) + 2; ++e) {
    bool in_first = e >= n;
    bool in_second = e <= m;
    if (!in_first && !in_second) ++count;
  }
  return count;
}

int hom_line_oracle(int n, int m) {
  int count = 0;
  for (int e = std::min(0, m - n) - 2; e <= std::max(0, m - n) + 2; ++e)
    if (e >= 0 && e <= m - n) ++count;
  return count;
}

}  // namespace qcoh::testing
