#pragma once

#include <cstddef>
#include <vector>

#include "giftex/numeric.hpp"

namespace giftex {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  static RationalMatrix identity(std::size_t n);

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

using RationalVector = std::vector<Rational>;
using IntegerRow = std::vector<Integer>;

/// Basis of {x : m x = 0}. Fraction-free forward elimination with the first
/// nonzero entry in column order as pivot, then one basis vector per free
/// column (that column set to 1, other free columns 0).
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Same over integer rows of width `cols` (rows are consumed).
std::vector<RationalVector> nullspace(std::vector<IntegerRow> rows, std::size_t cols);

/// m * v.
RationalVector multiply(const RationalMatrix& m, const RationalVector& v);

}  // namespace giftex
