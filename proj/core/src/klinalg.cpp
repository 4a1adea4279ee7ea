#include "qcoh/klinalg.hpp"

#include "qcoh/error.hpp"

namespace qcoh {

KMatrix::KMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

KMatrix KMatrix::identity(Field field, std::size_t n) {
  KMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

bool KMatrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

KMatrix KMatrix::transposed() const {
  KMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

KMatrix KMatrix::select_cols(const std::vector<std::size_t>& idx) const {
  KMatrix m(field_, rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < idx.size(); ++j) m(r, j) = (*this)(r, idx[j]);
  return m;
}

KMatrix operator*(const KMatrix& a, const KMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "k-matrix product");
  KMatrix m(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += aik * b(k, j);
    }
  return m;
}

KMatrix operator+(const KMatrix& a, const KMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "k-matrix sum");
  KMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

KMatrix operator-(const KMatrix& a, const KMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "k-matrix difference");
  KMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

bool operator==(const KMatrix& a, const KMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::size_t> rref(KMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const KMatrix& m) {
  KMatrix w = m;
  return rref(w).size();
}

KMatrix nullspace(const KMatrix& m) {
  KMatrix w = m;
  auto pivots = rref(w);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  KMatrix basis(m.field(), m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    basis(f, k) = Scalar::one(m.field());
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -w(i, f);
  }
  return basis;
}

std::optional<KMatrix> solve(const KMatrix& m, const KMatrix& b) {
  if (m.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "k-linear solve");
  KMatrix aug(m.field(), m.rows(), m.cols() + b.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, m.cols() + c) = b(r, c);
  }
  auto pivots = rref(aug);
  KMatrix x(m.field(), m.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= m.cols()) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(pivots[i], c) = aug(i, m.cols() + c);
  }
  return x;
}

}  // namespace qcoh
