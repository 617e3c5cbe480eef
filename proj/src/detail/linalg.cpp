#include "detail/linalg.hpp"

#include <utility>

namespace pfcrn::detail {

Echelon reduce(Matrix m, std::size_t cols) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    out.pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  out.rref = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m, std::size_t cols) { return reduce(m, cols).pivots.size(); }

Matrix nullspace(const Matrix& m, std::size_t cols) {
  Echelon e = reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RowVec v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

RowVec primitive_integer(RowVec v) {
  Integer den = 1, num = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  for (auto& x : v) {
    x *= den;
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
  }
  if (num != 0)
    for (auto& x : v) x /= num;
  return v;
}

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

}  // namespace pfcrn::detail
