#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qcoh/scalar.hpp"

namespace qcoh {

/// Dense matrix over the base field, used for finite-dimensional k-linear systems.
class KMatrix {
 public:
  KMatrix() = default;
  KMatrix(Field field, std::size_t rows, std::size_t cols);
  static KMatrix identity(Field field, std::size_t n);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  KMatrix transposed() const;
  KMatrix select_cols(const std::vector<std::size_t>& idx) const;

  friend KMatrix operator*(const KMatrix& a, const KMatrix& b);
  friend KMatrix operator+(const KMatrix& a, const KMatrix& b);
  friend KMatrix operator-(const KMatrix& a, const KMatrix& b);
  friend bool operator==(const KMatrix& a, const KMatrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form computed in place; returns the pivot columns.
std::vector<std::size_t> rref(KMatrix& m);
std::size_t rank(const KMatrix& m);
/// Columns span the nullspace.
KMatrix nullspace(const KMatrix& m);
/// Some solution of m * x = b, or nullopt.
std::optional<KMatrix> solve(const KMatrix& m, const KMatrix& b);

}  // namespace qcoh
