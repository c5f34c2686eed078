#pragma once

// Division-free determinants.  Truncated rings have zero divisors, so no
// pivoting or fraction-based elimination is used.

#include <algorithm>
#include <numeric>
#include <vector>

#include "slicefrac/errors.hpp"
#include "slicefrac/ring.hpp"

namespace sf {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
void check_square(const Matrix<T>& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw StructuralError("determinant of a non-square matrix");
}

// Berkowitz: characteristic polynomial of growing leading blocks through
// Toeplitz products; only ring operations.
template <class T>
T det_division_free(const Matrix<T>& m) {
  check_square(m);
  const size_t n = m.size();
  if (n == 0) throw StructuralError("determinant of an empty matrix");
  const T zero = zero_like(m[0][0]);
  const T one = one_like(m[0][0]);
  std::vector<T> vect{one, zero - m[0][0]};
  for (size_t r = 1; r < n; ++r) {
    std::vector<T> t;
    t.reserve(r + 2);
    t.push_back(one);
    t.push_back(zero - m[r][r]);
    std::vector<T> v(r, zero);
    for (size_t i = 0; i < r; ++i) v[i] = m[i][r];
    for (size_t k = 2; k <= r + 1; ++k) {
      T s = zero;
      for (size_t i = 0; i < r; ++i) s = s + m[r][i] * v[i];
      t.push_back(zero - s);
      if (k == r + 1) break;
      std::vector<T> w(r, zero);
      for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) w[i] = w[i] + m[i][j] * v[j];
      v = std::move(w);
    }
    std::vector<T> next(r + 2, zero);
    for (size_t k = 0; k < r + 2; ++k)
      for (size_t j = 0; j <= std::min(k, r); ++j) next[k] = next[k] + t[k - j] * vect[j];
    vect = std::move(next);
  }
  return (n % 2 == 0) ? vect[n] : T(zero - vect[n]);
}

// Reference expansion over all permutations; only for small test matrices.
template <class T>
T det_leibniz(const Matrix<T>& m) {
  check_square(m);
  const size_t n = m.size();
  std::vector<size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  T total = zero_like(m[0][0]);
  do {
    int inv = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inv;
    T prod = one_like(m[0][0]);
    for (size_t i = 0; i < n; ++i) prod = prod * m[i][p[i]];
    total = (inv % 2) ? T(total - prod) : T(total + prod);
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace sf
