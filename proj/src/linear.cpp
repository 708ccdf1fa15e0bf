#include "opensys/linear.hpp"

#include "opensys/error.hpp"

namespace opensys {

void RationalMatrix::append_row(const std::vector<Rational>& row) {
  if (row.size() != cols_) throw DimensionMismatch("row length does not match the matrix");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<std::size_t> RationalMatrix::reduce() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && (*this)(p, c) == 0) ++p;
    if (p == rows_) continue;
    if (p != r) {
      for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(p, k), (*this)(r, k));
    }
    Rational inv = 1 / (*this)(r, c);
    for (std::size_t k = c; k < cols_; ++k) (*this)(r, k) *= inv;
    for (std::size_t q = 0; q < rows_; ++q) {
      if (q == r || (*this)(q, c) == 0) continue;
      Rational factor = (*this)(q, c);
      for (std::size_t k = c; k < cols_; ++k) (*this)(q, k) -= factor * (*this)(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  rows_ = r;
  data_.resize(rows_ * cols_);
  return pivots;
}

RationalMatrix affine_rows(const std::vector<Polynomial>& equations, const std::vector<std::size_t>& column_of) {
  const std::size_t n = column_of.size();
  RationalMatrix m(0, n + 1);
  std::vector<Rational> row(n + 1);
  for (const auto& p : equations) {
    if (!p.is_linear()) throw NotLinear("equation of degree " + std::to_string(p.degree()));
    if (p.nvars() != n) throw DimensionMismatch("equation over the wrong variables");
    for (auto& v : row) v = 0;
    for (const auto& [e, c] : p.terms()) {
      std::size_t k = 0;
      while (k < n && e[k] == 0) ++k;
      if (k == n) {
        row[n] = c;
      } else {
        row[column_of[k]] = c;
      }
    }
    m.append_row(row);
  }
  return m;
}

}  // namespace opensys
