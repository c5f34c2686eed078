#pragma once

// Continued fractions of Stieltjes type and of the new type (a level term and
// a descent term per rung): expansion to z-series, coefficient extraction by
// Hankel and Hankel-type determinants, the reflected sequence J-tilde and the
// finite-fraction reflection identity.
//
// Coefficient vectors are 1-based: entry 0 is an unused zero.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "slicefrac/bipoly.hpp"
#include "slicefrac/det.hpp"
#include "slicefrac/errors.hpp"
#include "slicefrac/param_series.hpp"
#include "slicefrac/ring.hpp"
#include "slicefrac/slices.hpp"
#include "slicefrac/zseries.hpp"

namespace sf {

enum class FractionKind { Stieltjes, Newtype };

template <class T>
struct FractionSpec {
  FractionKind kind = FractionKind::Stieltjes;
  // Stieltjes: c_1..c_K.  Newtype: Y_1..Y_K.
  std::vector<T> coeffs;
  // A finite fraction stops exactly after the last coefficient.
  bool finite = false;
};

namespace detail {

// 1 / (1 - z X), no division needed since the constant term is 1.
template <class T>
ZSeries<T> geometric(const ZSeries<T>& X) {
  const int L = X.len();
  const T zero = zero_like(X[0]);
  std::vector<T> s(size_t(L + 1), zero);
  s[0] = one_like(X[0]);
  for (int k = 1; k <= L; ++k) {
    T acc = zero;
    for (int j = 0; j < k; ++j) acc += X[j] * s[size_t(k - 1 - j)];
    s[size_t(k)] = acc;
  }
  return ZSeries<T>(std::move(s));
}

template <class T>
ZSeries<T> constant_series(const T& c, int L) {
  ZSeries<T> s(L, zero_like(c));
  s[0] = c;
  return s;
}

}  // namespace detail

// Bottom-up evaluation of the nested fraction to order z^L.  Infinite specs
// need L rungs (L coefficients for Stieltjes, 2L for the new type).
template <class T>
ZSeries<T> expand(const FractionSpec<T>& fs, int L) {
  if (L < 0) throw StructuralError("negative expansion order");
  if (fs.coeffs.empty()) throw StructuralError("fraction without coefficients");
  const T zero = zero_like(fs.coeffs[0]), one = one_like(fs.coeffs[0]);
  const int K = int(fs.coeffs.size());
  const bool stieltjes = fs.kind == FractionKind::Stieltjes;
  const int per = stieltjes ? 1 : 2;
  const int rungs_avail = (K + per - 1) / per;
  if (!fs.finite && rungs_avail < L) throw StructuralError("insufficient depth for an infinite fraction");
  if (!fs.finite && !stieltjes && K < 2 * L) throw StructuralError("insufficient depth for an infinite fraction");
  if (fs.finite && !stieltjes && K % 2 == 0) throw StructuralError("finite new-type fraction needs an odd count");
  const int rungs = std::min(rungs_avail, std::max(L, 1));
  auto coeff = [&](int k) -> T { return k <= K ? fs.coeffs[size_t(k - 1)] : zero; };

  ZSeries<T> G = detail::constant_series(one, L);
  for (int r = rungs; r >= 1; --r) {
    ZSeries<T> X(L, zero);
    if (stieltjes) {
      X = G.scaled(coeff(r));
    } else {
      X = G.scaled(coeff(2 * r));
      X[0] += coeff(2 * r - 1);
    }
    // The rung below the last one of a finite fraction is absent: G = 1 there
    // means coefficient zero, which coeff() already supplies.
    G = detail::geometric(X);
  }
  return G;
}

// Integer-indexed sequence j_n for lo <= n <= hi.
template <class T>
struct Ladder {
  int lo = 0;
  std::vector<T> j;
  int hi() const { return lo + int(j.size()) - 1; }
  const T& operator()(int n) const {
    if (n < lo || n > hi()) throw StructuralError("ladder index " + std::to_string(n) + " not populated");
    return j[size_t(n - lo)];
  }
};

// j_0 = 1, j_n = y1 J_{n-1}, j_{-n} = Jt_n.
template <class T>
Ladder<T> build_ladder(const ZSeries<T>& J, const T& y1, const ZSeries<T>& Jt) {
  Ladder<T> L;
  L.lo = -Jt.len();
  for (int n = Jt.len(); n >= 1; --n) L.j.push_back(Jt[n]);
  L.j.push_back(one_like(y1));
  for (int n = 1; n <= J.len() + 1; ++n) L.j.push_back(y1 * J[n - 1]);
  return L;
}

// Determinant of a Hankel-shaped matrix whose (r, c) entry (0-based) has
// valuation at least r + c + base.  For tau-series the entries are first
// rescaled to valuation 0; otherwise the division-free expansion passes
// through intermediates of very negative valuation and loses precision.
template <class T>
T graded_det(const Matrix<T>& m, int) {
  return det_division_free(m);
}
inline ParamSeries graded_det(Matrix<ParamSeries> m, int base) {
  const int n = int(m.size());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m[size_t(r)][size_t(c)] = m[size_t(r)][size_t(c)].shifted(-(r + c + base));
  return det_division_free(m).shifted(n * (n - 1) + n * base);
}

// det(j_{n+m-i-1+shift})_{1<=n,m<=i}; shift 0 gives H_i^(0), shift 1 H_i^(1).
template <class T>
T hankel_type(const Ladder<T>& L, int i, int shift) {
  if (i == 0) return one_like(L(0));
  Matrix<T> m(size_t(i), std::vector<T>(size_t(i), zero_like(L(0))));
  for (int n = 1; n <= i; ++n)
    for (int k = 1; k <= i; ++k) m[size_t(n - 1)][size_t(k - 1)] = L(n + k - i - 1 + shift);
  return graded_det(m, 1 - i + shift);
}

// det(F_{n+m+shift})_{0<=n,m<=i}; h_{-1} = 1.
template <class T>
T hankel(const ZSeries<T>& F, int i, int shift) {
  if (i < 0) return one_like(F[0]);
  Matrix<T> m(size_t(i + 1), std::vector<T>(size_t(i + 1), zero_like(F[0])));
  for (int n = 0; n <= i; ++n)
    for (int k = 0; k <= i; ++k) m[size_t(n)][size_t(k)] = F[n + k + shift];
  return graded_det(m, shift);
}

template <class T>
using Divider = std::function<T(const T&, const T&)>;

// c_1..c_{2 i_max} (c_{2i-1} = W_{2i-1}, c_{2i} = B_{2i}); F must reach z^{2 i_max}.
template <class T>
std::vector<T> stieltjes_coeffs(const ZSeries<T>& F, int i_max, const Divider<T>& div) {
  if (i_max < 1) throw StructuralError("i_max must be positive");
  if (F.len() < 2 * i_max) throw StructuralError("series too short for this many coefficients");
  std::vector<T> h0, h1;  // h[k + 1] = h_k
  for (int k = -1; k <= i_max; ++k) {
    h0.push_back(hankel(F, k, 0));
    h1.push_back(k < i_max ? hankel(F, k, 1) : one_like(F[0]));
  }
  auto H0 = [&](int k) -> const T& { return h0[size_t(k + 1)]; };
  auto H1 = [&](int k) -> const T& { return h1[size_t(k + 1)]; };
  std::vector<T> c(size_t(2 * i_max + 1), zero_like(F[0]));
  for (int i = 1; i <= i_max; ++i) {
    const T H1m2 = i >= 2 ? H1(i - 2) : one_like(F[0]);
    const T H0m2 = i >= 2 ? H0(i - 2) : one_like(F[0]);
    c[size_t(2 * i - 1)] = div(H1(i - 1) * H0m2, H1m2 * H0(i - 1));
    c[size_t(2 * i)] = div(H0(i) * H1m2, H0(i - 1) * H1(i - 1));
  }
  return c;
}

// Y_1..Y_K from the ladder; needs j_n for 1 - ceil(K/2) <= n <= floor(K/2) + 1.
template <class T>
std::vector<T> newtype_coeffs(const Ladder<T>& L, int K, const Divider<T>& div) {
  if (K < 1) throw StructuralError("need at least one coefficient");
  const int top = K / 2 + 1;
  std::vector<T> H0, H1;
  for (int i = 0; i <= top; ++i) {
    H0.push_back(i <= (K + 1) / 2 ? hankel_type(L, i, 0) : one_like(L(0)));
    H1.push_back(hankel_type(L, i, 1));
  }
  std::vector<T> y(size_t(K + 1), zero_like(L(0)));
  for (int k = 1; k <= K; ++k) {
    const size_t i = size_t((k + 1) / 2);
    if (k % 2)
      y[size_t(k)] = div(H1[i] * H0[i - 1], H1[i - 1] * H0[i]);
    else
      y[size_t(k)] = div(H0[i - 1] * H1[i + 1], H0[i] * H1[i]);
  }
  return y;
}

// Y-tilde_1..Y-tilde_M with M = K for odd K (finite fraction), K - 1 otherwise.
template <class T>
std::vector<T> tilde_coeffs(const std::vector<T>& Y, const Divider<T>& div) {
  const int K = int(Y.size()) - 1;
  if (K < 1) throw StructuralError("need at least one coefficient");
  const int M = K % 2 ? K : K - 1;
  const T one = one_like(Y[1]);
  std::vector<T> t(size_t(M + 1), zero_like(Y[1]));
  for (int k = 1; k <= M; ++k) {
    if (k % 2) {
      if (is_zero(Y[size_t(k)])) throw NonInvertibleError("zero odd coefficient Y_" + std::to_string(k));
      t[size_t(k)] = div(one, Y[size_t(k)]);
    } else {
      t[size_t(k)] = div(Y[size_t(k)], Y[size_t(k - 1)] * Y[size_t(k + 1)]);
    }
  }
  return t;
}

inline Rational field_divide(const Rational& a, const Rational& b) {
  if (sgn(b) == 0) throw DivisionError("division by zero");
  return a / b;
}
inline RatFunc field_divide(const RatFunc& a, const RatFunc& b) { return a / b; }
// Exact quotient in the tau grading; Laurent quotients are allowed.
inline ParamSeries tau_divide(const ParamSeries& a, const ParamSeries& b) { return laurent_divide(a, b); }

// ---- series-level entry points (tau grading) ----

// B_{2i}, W_{2i-1} as 1-based rungs c_1..c_{2 i_max}, each at the largest
// common cap the input determines.  Throws DivisionError if a quotient is not
// exact or the input cannot determine the values.
std::vector<BiPoly> stieltjes_extract(const BiZSeries& F, int i_max);

// Tau-series ladder from J_n, Y_1 (BiPoly) and J-tilde_n (Laurent tau-series).
Ladder<ParamSeries> build_jn(const BiZSeries& J, const BiPoly& y1, const std::vector<ParamSeries>& Jt);

// Y_1..Y_{2 i_max} at the largest common cap the ladder determines.
std::vector<BiPoly> newtype_extract(const Ladder<ParamSeries>& ladder, int i_max);

// J-tilde_n from the limit pair: Y_1 / (Q-P)^{2n+1} (A_0 Z(2n) + A_1 (Q-P)^2 Z(2n-2)).
// Returned as a tau-series truncated at N (negative exponents appear).
ParamSeries conjectured_tilde_j(int n, const LimitPair& lim, int N);
// Untruncated: carries whatever precision the limit pair determines.
ParamSeries conjectured_tilde_j(int n, const LimitPair& lim);
// Same value through Z-tilde_n = Z(2n)/Y^{2n}: (Y_1/Y)(A_0 Zt_n + A_1 Zt_{n-1}).
ParamSeries conjectured_tilde_j_a0a1(int n, const LimitPair& lim, int N);

// Solves for Y_1..Y_{2 i_max} at cap N through the conjectured J-tilde,
// choosing internal precision automatically.
std::vector<BiPoly> newtype_from_conjecture(int i_max, int N);
// One attempt with the solvers at cap M; the result carries the common cap
// that M determines.  Throws DivisionError if M determines nothing.
std::vector<BiPoly> newtype_from_conjecture_at(int i_max, int M);

struct ReflectionReport {
  int alpha = 0;
  std::vector<Rational> y;  // 1-based
  RatFunc J, Jt;
  // Y_2..Y_{2 alpha - 1} recovered from J alone through the Hankel formulas.
  std::vector<Rational> recovered;
};

// Builds J and J-tilde of the finite fraction with 2 alpha - 1 random nonzero
// weights and verifies the reflection identity, the value of Y_1, the degree
// pattern, and that the weights are recovered.  Throws VerificationError.
ReflectionReport finite_reflection_check(int alpha, std::uint64_t seed);
ReflectionReport finite_reflection_check(const std::vector<Rational>& y);

// Power-series coefficients of a rational function regular at 0.
ZSeries<Rational> series_of(const RatFunc& f, int L);

struct UnderdeterminationWitness {
  std::vector<Rational> y_true, y_other;  // 1-based, 2k entries
  ZSeries<Rational> J_true, J_other;      // re-expanded from each Y set
};

// Perturbs J-tilde_1 and extracts a second, different Y ladder with the same J.
UnderdeterminationWitness underdetermination_witness(std::uint64_t seed, int k = 3);

// H_i^(0) = prod (Y_{2m}/Y_{2m+1})^{i-m}, H_i^(1) = Y_1 Y_3 ... Y_{2i-1} H_i^(0).
// Returns an empty string on success.
std::string hankel_closed_check(std::uint64_t seed, int i_max);

}  // namespace sf
