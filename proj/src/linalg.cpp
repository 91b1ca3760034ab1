#include "giftex/linalg.hpp"

#include <stdexcept>

namespace giftex {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

namespace {

void divide_by_content(IntegerRow& row) {
  Integer g(0);
  for (const auto& x : row) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

std::vector<RationalVector> nullspace(std::vector<IntegerRow> rows, std::size_t cols) {
  for (auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("nullspace: ragged rows");
    divide_by_content(r);
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    const IntegerRow& piv = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      // row_r <- piv[c] * row_r - row_r[c] * piv, cleared by content.
      Integer g, a, b;
      mpz_gcd(g.get_mpz_t(), piv[c].get_mpz_t(), rows[r][c].get_mpz_t());
      a = piv[c] / g;
      b = rows[r][c] / g;
      auto& row = rows[r];
      for (std::size_t j = c; j < cols; ++j) {
        if (piv[j] == 0) {
          if (row[j] != 0) row[j] *= a;
        } else {
          row[j] = a * row[j] - b * piv[j];
        }
      }
      divide_by_content(row);
    }
    pivot_cols.push_back(c);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t i = rank; i-- > 0;) {
      const std::size_t c = pivot_cols[i];
      Rational acc(0);
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (rows[i][j] != 0 && x[j] != 0) acc += Rational(rows[i][j]) * x[j];
      }
      x[c] = -acc / Rational(rows[i][c]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  std::vector<IntegerRow> rows(m.rows(), IntegerRow(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l(1);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      rows[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
  }
  return nullspace(std::move(rows), m.cols());
}

RationalVector multiply(const RationalMatrix& m, const RationalVector& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("multiply: dimension mismatch");
  RationalVector out(m.rows(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

}  // namespace giftex
