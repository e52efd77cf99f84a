#include "plumbline/linalg.hpp"

#include <stdexcept>

namespace plumbline {

Matrix<Q> inverse_q(const Matrix<Q>& a) {
  std::size_t n = a.size();
  Matrix<Q> m(n, std::vector<Q>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m[piv][c]) == 0) ++piv;
    if (piv == n) throw std::domain_error("inverse_q: singular matrix");
    std::swap(m[piv], m[c]);
    Q inv = 1 / m[c][c];
    for (std::size_t j = 0; j < 2 * n; ++j) m[c][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(m[i][c]) == 0) continue;
      Q f = m[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  Matrix<Q> inv(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

Int bareiss_leading_minors(const Matrix<Int>& a_in, std::vector<Int>& minors) {
  Matrix<Int> a = a_in;
  std::size_t n = a.size();
  minors.clear();
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    // After step k-1, a[k][k] equals the k-th leading principal minor.
    minors.push_back(a[k][k]);
    if (a[k][k] == 0) return 0;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
    }
    prev = a[k][k];
  }
  return n == 0 ? Int(1) : a[n - 1][n - 1];
}

}  // namespace plumbline
