#pragma once

// Truncated series in the boundary variable z with coefficients in a ring T.

#include <algorithm>
#include <vector>

#include "slicefrac/bipoly.hpp"
#include "slicefrac/errors.hpp"
#include "slicefrac/ring.hpp"

namespace sf {

template <class T>
class ZSeries {
 public:
  ZSeries() = default;
  ZSeries(int len, const T& zero) : c_(size_t(len + 1), zero) {}
  explicit ZSeries(std::vector<T> c) : c_(std::move(c)) {
    if (c_.empty()) throw StructuralError("empty z-series");
  }

  int len() const { return int(c_.size()) - 1; }
  const T& operator[](int k) const { return c_.at(size_t(k)); }
  T& operator[](int k) { return c_.at(size_t(k)); }
  const std::vector<T>& coeffs() const { return c_; }

  ZSeries truncate(int len) const {
    return ZSeries(std::vector<T>(c_.begin(), c_.begin() + std::min(len, this->len()) + 1));
  }

  friend ZSeries operator+(const ZSeries& a, const ZSeries& b) {
    const int L = std::min(a.len(), b.len());
    std::vector<T> c;
    for (int k = 0; k <= L; ++k) c.push_back(a[k] + b[k]);
    return ZSeries(std::move(c));
  }
  friend ZSeries operator-(const ZSeries& a, const ZSeries& b) {
    const int L = std::min(a.len(), b.len());
    std::vector<T> c;
    for (int k = 0; k <= L; ++k) c.push_back(a[k] - b[k]);
    return ZSeries(std::move(c));
  }
  friend ZSeries operator*(const ZSeries& a, const ZSeries& b) {
    const int L = std::min(a.len(), b.len());
    std::vector<T> c(size_t(L + 1), zero_like(a[0]));
    for (int i = 0; i <= L; ++i)
      for (int j = 0; i + j <= L; ++j) c[size_t(i + j)] = c[size_t(i + j)] + a[i] * b[j];
    return ZSeries(std::move(c));
  }
  // Multiplication by z (drops the top coefficient).
  ZSeries times_z() const {
    std::vector<T> c(c_.size(), zero_like(c_[0]));
    for (size_t k = 1; k < c_.size(); ++k) c[k] = c_[k - 1];
    return ZSeries(std::move(c));
  }
  ZSeries scaled(const T& s) const {
    std::vector<T> c;
    for (const auto& x : c_) c.push_back(x * s);
    return ZSeries(std::move(c));
  }

  ZSeries inv() const {
    const T c0inv = invert(c_[0]);
    std::vector<T> r(c_.size(), zero_like(c_[0]));
    r[0] = c0inv;
    for (size_t k = 1; k < c_.size(); ++k) {
      T s = zero_like(c_[0]);
      for (size_t j = 1; j <= k; ++j) s = s + c_[j] * r[k - j];
      r[k] = zero_like(c_[0]) - s * c0inv;
    }
    return ZSeries(std::move(r));
  }

 private:
  std::vector<T> c_;
};

using BiZSeries = ZSeries<BiPoly>;

}  // namespace sf
