#pragma once

#include <cstddef>
#include <vector>

#include "ldp/affine.hpp"
#include "ldp/error.hpp"
#include "ldp/rational.hpp"

namespace ldp {

using Matrix = std::vector<std::vector<Rational>>;

// Solves M x = rhs by Gauss-Jordan elimination over the rationals.  The
// right-hand side may be Rational or AffineForm (anything closed under
// subtraction and scaling by a Rational).  Throws InternalError if M is
// singular.
template <class T>
std::vector<T> solve_linear(Matrix m, std::vector<T> rhs) {
  const std::size_t n = m.size();
  if (rhs.size() != n) throw InternalError("solve_linear: dimension mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw InternalError("solve_linear: singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    const Rational pv = m[col][col];
    for (std::size_t k = col; k < n; ++k) m[col][k] /= pv;
    rhs[col] = rhs[col] / pv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
      rhs[r] = rhs[r] - f * rhs[col];
    }
  }
  return rhs;
}

Rational determinant(Matrix m);

// Sylvester criterion on -M.
bool is_negative_definite(const Matrix& m);

}  // namespace ldp
