// Exact dense linear algebra over a field (Q or symbolic rational functions)
// and division-free determinants over a commutative ring (polynomials).
#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "plumbline/rational.hpp"

namespace plumbline {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Rank by Gaussian elimination with exact field arithmetic.  `is_zero`
// decides zero-ness of an element (needed for symbolic fields).
template <class T, class IsZero>
std::size_t rank_of(Matrix<T> a, IsZero is_zero) {
  std::size_t rows = a.size();
  if (rows == 0) return 0;
  std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero(a[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (is_zero(a[i][c])) continue;
      T factor = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - factor * a[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank_q(const Matrix<Q>& a) {
  return rank_of(a, [](const Q& x) { return sgn(x) == 0; });
}

// Exact inverse of a square rational matrix; throws std::domain_error if singular.
Matrix<Q> inverse_q(const Matrix<Q>& a);

// Determinant of an integer matrix by fraction-free (Bareiss) elimination
// without pivoting.  `minors` receives the leading principal minors
// d_1, ..., d_n (the Bareiss pivots); elimination stops at the first zero.
Int bareiss_leading_minors(const Matrix<Int>& a, std::vector<Int>& minors);

// Determinant over a commutative ring with no division: Laplace expansion
// along the first column with memoisation over row subsets.  Cost grows like
// n * 2^n ring operations, which is fine for the n <= 8 matrices used here.
template <class T>
T det_division_free(const Matrix<T>& a, const T& zero, const T& one) {
  std::size_t n = a.size();
  if (n == 0) return one;
  // memo[mask] = determinant of the minor formed by rows in `mask` and the
  // last popcount(mask) columns.
  std::map<unsigned long, T> memo;
  auto rec = [&](auto&& self, unsigned long mask, std::size_t col) -> T {
    if (col == n) return one;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    T total = zero;
    int sign_pos = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (!(mask & (1UL << r))) continue;
      const T& entry = a[r][col];
      T minor = self(self, mask & ~(1UL << r), col + 1);
      T term = entry * minor;
      if (sign_pos % 2 == 0)
        total = total + term;
      else
        total = total - term;
      ++sign_pos;
    }
    memo.emplace(mask, total);
    return total;
  };
  if (n > 60) throw std::length_error("det_division_free: matrix too large");
  return rec(rec, (n == 64 ? ~0UL : ((1UL << n) - 1)), 0);
}

}  // namespace plumbline
