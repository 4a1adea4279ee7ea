#include "qcoh/smith.hpp"

#include "qcoh/error.hpp"

namespace qcoh {

std::vector<Poly> SmithForm::diagonal() const {
  std::vector<Poly> out;
  const std::size_t n = std::min(D.rows(), D.cols());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(D(i, i));
  return out;
}

Poly unit_inverse(const Poly& u, Ring ring) {
  if (!euclid::is_unit(u, ring)) throw Error(ErrorKind::NotAUnit, u.to_string() + " is not a unit");
  auto [c, e] = laurent_unit_decompose(u);
  return Poly::monomial(ring, c.inverse(), -e);
}

std::pair<Scalar, std::int64_t> laurent_unit_decompose(const Poly& u) {
  if (u.is_zero()) throw Error(ErrorKind::ZeroInput, "zero is not a unit");
  if (!u.is_monomial()) throw Error(ErrorKind::NotAUnit, u.to_string() + " has more than one term");
  const auto& [e, c] = *u.terms().begin();
  return {c, e};
}

namespace {

class SmithReducer {
 public:
  SmithReducer(const PolyMatrix& A, Ring ring)
      : ring_(ring),
        D_(A.with_ring(ring)),
        U_(PolyMatrix::identity(ring, A.field(), A.rows())),
        Uinv_(U_),
        V_(PolyMatrix::identity(ring, A.field(), A.cols())),
        Vinv_(V_) {}

  SmithForm run() {
    const std::size_t m = D_.rows(), n = D_.cols();
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
      auto pivot = best_entry(t, t, m, t, n);
      if (!pivot) break;
      move_to(t, pivot->first, pivot->second);
      while (true) {
        if (clear_cross(t)) continue;
        if (fix_divisibility(t)) continue;
        break;
      }
      auto [unit, normal] = euclid::normalize(D_(t, t), ring_);
      if (!unit.is_one()) scale_row(t, unit);
    }
    SmithForm out{std::move(U_), std::move(D_), std::move(V_), std::move(Uinv_), std::move(Vinv_), t};
    return out;
  }

 private:
  using Pos = std::pair<std::size_t, std::size_t>;

  std::optional<Pos> best_entry(std::size_t t, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
    (void)t;
    std::optional<Pos> best;
    std::int64_t best_norm = 0;
    for (std::size_t r = r0; r < r1; ++r)
      for (std::size_t c = c0; c < c1; ++c) {
        const Poly& p = D_(r, c);
        if (p.is_zero()) continue;
        std::int64_t nrm = euclid::norm(p, ring_);
        if (!best || nrm < best_norm) {
          best = Pos{r, c};
          best_norm = nrm;
        }
      }
    return best;
  }

  void move_to(std::size_t t, std::size_t r, std::size_t c) {
    if (r != t) {
      D_.swap_rows(t, r);
      U_.swap_rows(t, r);
      Uinv_.swap_cols(t, r);
    }
    if (c != t) {
      D_.swap_cols(t, c);
      V_.swap_cols(t, c);
      Vinv_.swap_rows(t, c);
    }
  }

  void add_row(std::size_t dst, std::size_t src, const Poly& f) {
    D_.add_row_multiple(dst, src, f);
    U_.add_row_multiple(dst, src, f);
    Uinv_.add_col_multiple(src, dst, -f);
  }

  void add_col(std::size_t dst, std::size_t src, const Poly& f) {
    D_.add_col_multiple(dst, src, f);
    V_.add_col_multiple(dst, src, f);
    Vinv_.add_row_multiple(src, dst, -f);
  }

  void scale_row(std::size_t r, const Poly& unit) {
    D_.scale_row(r, unit);
    U_.scale_row(r, unit);
    Uinv_.scale_col(r, unit_inverse(unit, ring_));
  }

  // Reduce row t and column t by the pivot. Returns true if a smaller remainder
  // was moved into the pivot position and the sweep must restart.
  bool clear_cross(std::size_t t) {
    const std::size_t m = D_.rows(), n = D_.cols();
    for (std::size_t i = t + 1; i < m; ++i) {
      if (D_(i, t).is_zero()) continue;
      Poly q = euclid::divmod(D_(i, t), D_(t, t), ring_).first;
      add_row(i, t, -q);
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (D_(t, j).is_zero()) continue;
      Poly q = euclid::divmod(D_(t, j), D_(t, t), ring_).first;
      add_col(j, t, -q);
    }
    std::optional<Pos> best;
    std::int64_t best_norm = euclid::norm(D_(t, t), ring_);
    for (std::size_t i = t + 1; i < m; ++i)
      if (!D_(i, t).is_zero()) {
        std::int64_t nrm = euclid::norm(D_(i, t), ring_);
        if (!best || nrm < best_norm) best = Pos{i, t}, best_norm = nrm;
      }
    for (std::size_t j = t + 1; j < n; ++j)
      if (!D_(t, j).is_zero()) {
        std::int64_t nrm = euclid::norm(D_(t, j), ring_);
        if (!best || nrm < best_norm) best = Pos{t, j}, best_norm = nrm;
      }
    if (!best) return false;
    move_to(t, best->first, best->second);
    return true;
  }

  bool fix_divisibility(std::size_t t) {
    const std::size_t m = D_.rows(), n = D_.cols();
    for (std::size_t i = t + 1; i < m; ++i)
      for (std::size_t j = t + 1; j < n; ++j)
        if (!euclid::divides(D_(t, t), D_(i, j), ring_)) {
          add_row(t, i, Poly::constant(ring_, D_.field(), 1));
          return true;
        }
    return false;
  }

  Ring ring_;
  PolyMatrix D_, U_, Uinv_, V_, Vinv_;
};

}  // namespace

SmithForm smith_normal_form(const PolyMatrix& A, Ring ring) { return SmithReducer(A, ring).run(); }

std::optional<PolyMatrix> solve_linear(const PolyMatrix& A, const PolyMatrix& b, Ring ring) {
  if (A.rows() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, "solve_linear: A has " + std::to_string(A.rows()) + " rows, b has " +
                                                  std::to_string(b.rows()));
  if (!b.fits(ring)) throw Error(ErrorKind::RingMismatch, "right-hand side does not lie in the ring");
  SmithForm s = smith_normal_form(A, ring);
  PolyMatrix c = s.U * b.with_ring(ring);
  PolyMatrix eta(ring, A.field(), A.cols(), b.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t k = 0; k < c.cols(); ++k) {
      if (i < s.rank) {
        auto [q, r] = euclid::divmod(c(i, k), s.D(i, i), ring);
        if (!r.is_zero()) return std::nullopt;
        eta(i, k) = q;
      } else if (!c(i, k).is_zero()) {
        return std::nullopt;
      }
    }
  return (s.V * eta).with_ring(ring);
}

PolyMatrix kernel_basis(const PolyMatrix& A, Ring ring) {
  SmithForm s = smith_normal_form(A, ring);
  std::vector<std::size_t> idx;
  for (std::size_t j = s.rank; j < A.cols(); ++j) idx.push_back(j);
  return s.V.select_cols(idx);
}

std::size_t rank(const PolyMatrix& A) { return smith_normal_form(A, Ring::Laurent).rank; }

PolyMatrix inverse(const PolyMatrix& A, Ring ring) {
  if (!A.square()) throw Error(ErrorKind::NotInvertible, "non-square matrix");
  SmithForm s = smith_normal_form(A, ring);
  if (s.rank != A.rows()) throw Error(ErrorKind::NotInvertible, "singular matrix");
  for (std::size_t i = 0; i < s.rank; ++i)
    if (!euclid::is_unit(s.D(i, i), ring))
      throw Error(ErrorKind::NotInvertible, "invariant factor " + s.D(i, i).to_string() + " is not a unit");
  // D is the identity after normalization.
  return (s.V * s.U).with_ring(ring);
}

Poly determinant(const PolyMatrix& A) {
  if (!A.square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = A.rows();
  Field f = A.field();
  if (n == 0) return Poly::constant(Ring::Laurent, f, 1);
  PolyMatrix M = A.with_ring(Ring::Laurent);
  Poly prev = Poly::constant(Ring::Laurent, f, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && M(r, k).is_zero()) ++r;
      if (r == n) return Poly(Ring::Laurent, f);
      M.swap_rows(k, r);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        M(i, j) = euclid::exact_div(M(k, k) * M(i, j) - M(i, k) * M(k, j), prev, Ring::Laurent);
    prev = M(k, k);
  }
  Poly d = M(n - 1, n - 1).with_ring(Ring::Laurent);
  return negate ? -d : d;
}

}  // namespace qcoh
