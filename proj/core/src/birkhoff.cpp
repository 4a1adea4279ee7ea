#include "qcoh/birkhoff.hpp"

#include <algorithm>
#include <numeric>

#include "qcoh/error.hpp"
#include "qcoh/klinalg.hpp"
#include "qcoh/smith.hpp"

namespace qcoh {

PolyMatrix monomial_diagonal(Field field, const std::vector<std::int64_t>& type) {
  std::vector<Poly> d;
  for (auto n : type) d.push_back(Poly::x_power(Ring::Laurent, field, n));
  return PolyMatrix::diagonal(Ring::Laurent, field, d);
}

namespace {

// Lowest exponent occurring in column j.
std::int64_t column_order(const PolyMatrix& M, std::size_t j) {
  bool found = false;
  std::int64_t best = 0;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    if (M(i, j).is_zero()) continue;
    std::int64_t lo = M(i, j).low_degree();
    if (!found || lo < best) best = lo, found = true;
  }
  if (!found) throw Error(ErrorKind::NotInvertible, "zero column in transition matrix");
  return best;
}

}  // namespace

// Works on the k[x^-1]-lattice spanned by the columns of T. Each column b_j has an
// order (lowest exponent) and a leading vector (its coefficient at that exponent).
// While the leading vectors are dependent, a k[x^-1]-combination anchored at the
// column of smallest order raises that order; the sum of orders is bounded by the
// exponent of det T, so the loop terminates. Afterwards E = [x^-ord_j b_j] is
// invertible over k[x] and E^-1 T B = diag(x^ord_j).
SplittingData birkhoff_factorize(const PolyMatrix& T) {
  if (!T.square()) throw Error(ErrorKind::NotInvertible, "transition matrix must be square");
  const std::size_t r = T.rows();
  const Field field = T.field();
  Poly det = determinant(T);
  if (det.is_zero() || !det.is_monomial())
    throw Error(ErrorKind::NotInvertible, "determinant " + det.to_string() + " is not a unit of k[x,x^-1]");
  const std::int64_t det_exp = det.low_degree();

  PolyMatrix work = T.with_ring(Ring::Laurent);
  PolyMatrix B = PolyMatrix::identity(Ring::XInv, field, r);
  PolyMatrix B_inv = B;
  std::vector<std::int64_t> ord(r);
  for (std::size_t j = 0; j < r; ++j) ord[j] = column_order(work, j);

  while (true) {
    KMatrix lead(field, r, r);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < r; ++i) lead(i, j) = work(i, j).coeff(ord[j]);
    KMatrix null = nullspace(lead);
    if (null.cols() == 0) break;
    std::size_t anchor = r;
    for (std::size_t j = 0; j < r; ++j)
      if (!null(j, 0).is_zero() && (anchor == r || ord[j] < ord[anchor])) anchor = j;
    const Scalar scale = null(anchor, 0).inverse();
    for (std::size_t j = 0; j < r; ++j) {
      if (j == anchor || null(j, 0).is_zero()) continue;
      Poly f = Poly::monomial(Ring::XInv, null(j, 0) * scale, ord[anchor] - ord[j]);
      work.add_col_multiple(anchor, j, f);
      B.add_col_multiple(anchor, j, f);
      B_inv.add_row_multiple(j, anchor, -f);
    }
    std::int64_t next = column_order(work, anchor);
    if (next <= ord[anchor]) throw Error(ErrorKind::NotInvertible, "Birkhoff reduction failed to progress");
    ord[anchor] = next;
    if (std::accumulate(ord.begin(), ord.end(), std::int64_t{0}) > det_exp)
      throw Error(ErrorKind::NotInvertible, "Birkhoff order bound exceeded");
  }

  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return ord[a] > ord[b]; });
  work = work.select_cols(perm);
  B = B.select_cols(perm);
  B_inv = B_inv.select_rows(perm);
  std::vector<std::int64_t> type(r);
  for (std::size_t k = 0; k < r; ++k) type[k] = ord[perm[k]];

  PolyMatrix E(Ring::X, field, r, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) E(i, j) = work(i, j).shifted(-type[j]).with_ring(Ring::X);
  PolyMatrix A = inverse(E, Ring::X);
  return SplittingData{std::move(type), std::move(A), std::move(B), std::move(E), std::move(B_inv)};
}

}  // namespace qcoh
