#include "ldp/linalg.hpp"

namespace ldp {

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

bool is_negative_definite(const Matrix& m) {
  const std::size_t n = m.size();
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix lead(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = -m[i][j];
    }
    if (determinant(lead).sign() <= 0) return false;
  }
  return true;
}

}  // namespace ldp
