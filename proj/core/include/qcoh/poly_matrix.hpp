#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qcoh/poly.hpp"

namespace qcoh {

/// Dense row-major matrix of Laurent polynomials with a declared coordinate ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Ring ring, Field field, std::size_t rows, std::size_t cols);

  static PolyMatrix identity(Ring ring, Field field, std::size_t n);
  static PolyMatrix diagonal(Ring ring, Field field, const std::vector<Poly>& entries);
  static PolyMatrix from_rows(Ring ring, Field field, const std::vector<std::vector<Poly>>& rows);
  static PolyMatrix column_vector(Ring ring, Field field, const std::vector<Poly>& entries);

  Ring ring() const noexcept { return ring_; }
  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Poly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  PolyMatrix column(std::size_t c) const;
  std::vector<Poly> column_entries(std::size_t c) const;
  PolyMatrix select_rows(const std::vector<std::size_t>& idx) const;
  PolyMatrix select_cols(const std::vector<std::size_t>& idx) const;
  PolyMatrix transposed() const;
  /// Retag every entry; throws RingMismatch when an entry does not fit.
  PolyMatrix with_ring(Ring ring) const;
  bool fits(Ring ring) const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += f * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Poly& f);
  /// col[dst] += f * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Poly& f);
  void scale_row(std::size_t r, const Poly& f);
  void scale_col(std::size_t c, const Poly& f);

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  PolyMatrix operator-() const;
  PolyMatrix scaled(const Poly& f) const;
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  std::string to_string() const;

 private:
  Ring ring_ = Ring::Laurent;
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> data_;
};

PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);

std::ostream& operator<<(std::ostream& os, const PolyMatrix& m);

}  // namespace qcoh
