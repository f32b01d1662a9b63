#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "cwtop/errors.hpp"

namespace cwtop {

using Int = mpz_class;

// Dense matrix over Z with exact arbitrary-precision entries, row-major.
// Zero rows or columns are legal (an m x 0 matrix presents the free group Z^m).
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

  IntegerMatrix(std::initializer_list<std::initializer_list<long>> data) {
    rows_ = data.size();
    cols_ = rows_ == 0 ? 0 : data.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : data) {
      if (row.size() != cols_) throw DimensionMismatch("ragged initializer");
      for (long v : row) entries_.emplace_back(v);
    }
  }

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const std::vector<Int>& entries() const { return entries_; }

  bool operator==(const IntegerMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }
  bool operator!=(const IntegerMatrix& o) const { return !(*this == o); }

  IntegerMatrix transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntegerMatrix operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape");
    IntegerMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t l = 0; l < cols_; ++l) {
        const Int& a = (*this)(i, l);
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(l, j);
      }
    return out;
  }

  std::vector<Int> operator*(const std::vector<Int>& v) const {
    if (cols_ != v.size()) throw DimensionMismatch("matrix-vector shape");
    std::vector<Int> out(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  std::vector<Int> column(std::size_t j) const {
    std::vector<Int> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  // Exact determinant by fraction-free (Bareiss) elimination.
  Int determinant() const;

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[a] += q * row[b]
  void add_row(std::size_t a, std::size_t b, const Int& q) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += q * (*this)(b, j);
  }
  // col[a] += q * col[b]
  void add_col(std::size_t a, std::size_t b, const Int& q) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += q * (*this)(i, b);
  }
  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
  }
  void negate_col(std::size_t a) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) = -(*this)(i, a);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

inline std::vector<Int> unit_vector(std::size_t length, std::size_t index) {
  std::vector<Int> v(length, Int(0));
  v.at(index) = 1;
  return v;
}

}  // namespace cwtop
