#pragma once

#include <cstddef>
#include <vector>

#include "opensys/polynomial.hpp"

namespace opensys {

/// A dense matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const std::vector<Rational>& row);
  /// In-place reduced row echelon form; zero rows are removed. Returns the
  /// pivot column of each remaining row.
  std::vector<std::size_t> reduce();

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Coefficient rows [a_0 .. a_{n-1} | b] of degree <= 1 polynomials
/// a.x + b = 0, with the variables permuted by `column_of` (variable k goes
/// to column column_of[k]). Throws NotLinear.
RationalMatrix affine_rows(const std::vector<Polynomial>& equations, const std::vector<std::size_t>& column_of);

}  // namespace opensys
