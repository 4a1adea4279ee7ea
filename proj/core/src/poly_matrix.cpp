#include "qcoh/poly_matrix.hpp"

#include <sstream>

#include "qcoh/error.hpp"

namespace qcoh {

PolyMatrix::PolyMatrix(Ring ring, Field field, std::size_t rows, std::size_t cols)
    : ring_(ring), field_(field), rows_(rows), cols_(cols), data_(rows * cols, Poly(ring, field)) {}

PolyMatrix PolyMatrix::identity(Ring ring, Field field, std::size_t n) {
  PolyMatrix m(ring, field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(ring, field, 1);
  return m;
}

PolyMatrix PolyMatrix::diagonal(Ring ring, Field field, const std::vector<Poly>& entries) {
  PolyMatrix m(ring, field, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

PolyMatrix PolyMatrix::from_rows(Ring ring, Field field, const std::vector<std::vector<Poly>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  PolyMatrix m(ring, field, rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

PolyMatrix PolyMatrix::column_vector(Ring ring, Field field, const std::vector<Poly>& entries) {
  PolyMatrix m(ring, field, entries.size(), 1);
  for (std::size_t r = 0; r < entries.size(); ++r) m(r, 0) = entries[r];
  return m;
}

PolyMatrix PolyMatrix::column(std::size_t c) const { return select_cols({c}); }

std::vector<Poly> PolyMatrix::column_entries(std::size_t c) const {
  std::vector<Poly> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

PolyMatrix PolyMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  PolyMatrix m(ring_, field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(idx[i], c);
  return m;
}

PolyMatrix PolyMatrix::select_cols(const std::vector<std::size_t>& idx) const {
  PolyMatrix m(ring_, field_, rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < idx.size(); ++j) m(r, j) = (*this)(r, idx[j]);
  return m;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix m(ring_, field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

bool PolyMatrix::fits(Ring ring) const {
  for (const auto& p : data_)
    if (!p.fits(ring)) return false;
  return true;
}

PolyMatrix PolyMatrix::with_ring(Ring ring) const {
  PolyMatrix m = *this;
  m.ring_ = ring;
  for (auto& p : m.data_) p = p.with_ring(ring);
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void PolyMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void PolyMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Poly& f) {
  if (f.is_zero()) return;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!(*this)(src, c).is_zero()) (*this)(dst, c) += f * (*this)(src, c);
}

void PolyMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Poly& f) {
  if (f.is_zero()) return;
  for (std::size_t r = 0; r < rows_; ++r)
    if (!(*this)(r, src).is_zero()) (*this)(r, dst) += f * (*this)(r, src);
}

void PolyMatrix::scale_row(std::size_t r, const Poly& f) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = f * (*this)(r, c);
}

void PolyMatrix::scale_col(std::size_t c, const Poly& f) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = f * (*this)(r, c);
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorKind::DimensionMismatch, "product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                                  " and " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  PolyMatrix m(join(a.ring_, b.ring_), a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Poly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += aik * b(k, j);
    }
  return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "sum of mismatched matrices");
  PolyMatrix m(join(a.ring_, b.ring_), a.field_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
  return m;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorKind::DimensionMismatch, "difference of mismatched matrices");
  PolyMatrix m(join(a.ring_, b.ring_), a.field_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] - b.data_[i];
  return m;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix m = *this;
  for (auto& p : m.data_) p = -p;
  return m;
}

PolyMatrix PolyMatrix::scaled(const Poly& f) const {
  PolyMatrix m = *this;
  m.ring_ = join(ring_, f.ring());
  for (auto& p : m.data_) p = f * p;
  return m;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "hstack row mismatch");
  PolyMatrix m(join(a.ring(), b.ring()), a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "vstack column mismatch");
  PolyMatrix m(join(a.ring(), b.ring()), a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r) m(a.rows() + r, c) = b(r, c);
  }
  return m;
}

PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix m(join(a.ring(), b.ring()), a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix m(join(a.ring(), b.ring()), a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

std::ostream& operator<<(std::ostream& os, const PolyMatrix& m) { return os << m.to_string(); }

}  // namespace qcoh
