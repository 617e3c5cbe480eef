#pragma once

// Small dense exact linear algebra over the rationals. Matrices are row-major
// vectors of rows; every routine works on a copy.

#include "pfcrn/rational.hpp"

#include <vector>

namespace pfcrn::detail {

using RowVec = std::vector<Rational>;
using Matrix = std::vector<RowVec>;

struct Echelon {
  Matrix rref;                       // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row of rref
};

Echelon reduce(Matrix m, std::size_t cols);

std::size_t rank(const Matrix& m, std::size_t cols);

// Basis of {v : m v = 0}, one vector per free column.
Matrix nullspace(const Matrix& m, std::size_t cols);

// Scales v to integer entries with gcd 1, keeping the sign of every entry.
RowVec primitive_integer(RowVec v);

// Determinant of a square matrix.
Rational determinant(Matrix m);

}  // namespace pfcrn::detail
