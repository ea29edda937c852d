#pragma once

// Borel conjugation of an upper-triangular matrix into good form: entry (i, j)
// vanishes whenever the diagonal entries i and j differ.
//
// Works over any field type F with +, -, *, / and ==. Conjugating by
// b = I + c E_kj with c = v_kj / (v_jj - v_kk) kills entry (k, j) and only
// touches column j above row k and row k right of column j, so sweeping the
// columns left to right and each column bottom-up never refills a zero.

#include <stdexcept>
#include <vector>

namespace weylcomp {

template <typename F>
using DenseMatrix = std::vector<std::vector<F>>;

template <typename F>
struct GoodForm {
  DenseMatrix<F> b;       // upper unipotent
  DenseMatrix<F> result;  // b^{-1} v b
};

template <typename F>
DenseMatrix<F> dense_identity(std::size_t n, const F& one) {
  const F zero = one - one;
  DenseMatrix<F> m(n, std::vector<F>(n, zero));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = one;
  return m;
}

template <typename F>
DenseMatrix<F> dense_multiply(const DenseMatrix<F>& a, const DenseMatrix<F>& b) {
  const std::size_t n = a.size();
  const F zero = a[0][0] - a[0][0];
  DenseMatrix<F> r(n, std::vector<F>(n, zero));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) r[i][j] = r[i][j] + a[i][k] * b[k][j];
  return r;
}

/// `one` fixes the field (needed for F_p, whose elements carry the modulus).
template <typename F>
GoodForm<F> good_form_conjugate(DenseMatrix<F> v, const F& one) {
  const std::size_t n = v.size();
  const F zero = one - one;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].size() != n) throw std::invalid_argument("good_form_conjugate: matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (!(v[i][j] == zero)) throw std::invalid_argument("good_form_conjugate: matrix is not upper triangular");
  }
  DenseMatrix<F> b = dense_identity(n, one);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t k = j; k-- > 0;) {
      if (v[k][k] == v[j][j] || v[k][j] == zero) continue;
      const F c = v[k][j] / (v[j][j] - v[k][k]);
      // v <- (I - cE_kj) v (I + cE_kj)
      for (std::size_t i = 0; i < n; ++i) v[i][j] = v[i][j] + c * v[i][k];
      for (std::size_t m = 0; m < n; ++m) v[k][m] = v[k][m] - c * v[j][m];
      // b <- b (I + cE_kj)
      for (std::size_t i = 0; i < n; ++i) b[i][j] = b[i][j] + c * b[i][k];
    }
  }
  return {std::move(b), std::move(v)};
}

}  // namespace weylcomp
