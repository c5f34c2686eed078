#pragma once

// Hard pieces and heaps of pieces on the graph G^(alpha): vertices
// 1..2 alpha - 1, each k adjacent to k + 1 and each even 2j to 2j + 2 (odd
// sites are level steps, even sites are descents).  G'^(alpha) adds vertex
// 2 alpha, adjacent to 2 alpha - 2 and 2 alpha - 1.  Heap generating
// functions are ratios of hard-piece polynomials; they are checked against the
// finite continued fractions, never enumerated piece by piece.
//
// Weight vectors are 1-based like the continued-fraction coefficients.

#include <cstdint>
#include <vector>

#include "slicefrac/contfrac.hpp"
#include "slicefrac/report.hpp"

namespace sf {

enum class HardGraph { G, Gprime };
enum class HeapBase { One, OneTwo };

template <class T>
struct HardPieceTable {
  int alpha = 0;
  HardGraph variant = HardGraph::G;
  std::vector<T> weights;  // y_1..y_{2 alpha - 1}, plus y_{2 alpha} on G'
  std::vector<T> X;        // X_0..X_alpha
};

namespace detail {

// Configurations of m hard pieces on the first n vertices of G, m = 0..ceil(n/2).
// State bits: vertex k-1 occupied (1), vertex k-2 occupied (2).
template <class T>
std::vector<T> graph_hard_pieces(const std::vector<T>& w, int n, const T& one) {
  const T zero = zero_like(one);
  const size_t top = size_t((n + 1) / 2);
  std::vector<std::vector<T>> st(4, std::vector<T>(top + 1, zero));
  st[0][0] = one;
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<T>> nx(4, std::vector<T>(top + 1, zero));
    for (int s = 0; s < 4; ++s) {
      const int empty = (s & 1) << 1;
      for (size_t m = 0; m <= top; ++m) nx[size_t(empty)][m] += st[size_t(s)][m];
      const bool blocked = (s & 1) || (k % 2 == 0 && (s & 2));
      if (blocked) continue;
      for (size_t m = 0; m < top; ++m) nx[size_t(empty | 1)][m + 1] += w[size_t(k)] * st[size_t(s)][m];
    }
    st = std::move(nx);
  }
  std::vector<T> X(top + 1, zero);
  for (const auto& v : st)
    for (size_t m = 0; m <= top; ++m) X[m] += v[m];
  return X;
}

}  // namespace detail

template <class T>
HardPieceTable<T> hard_pieces(int alpha, HardGraph variant, const std::vector<T>& weights) {
  if (alpha < 1) throw StructuralError("alpha must be positive");
  const int n = 2 * alpha - 1 + (variant == HardGraph::Gprime ? 1 : 0);
  if (int(weights.size()) != n + 1)
    throw StructuralError("expected " + std::to_string(n) + " weights, got " + std::to_string(int(weights.size()) - 1));
  HardPieceTable<T> t;
  t.alpha = alpha;
  t.variant = variant;
  t.weights = weights;
  std::vector<T> w(weights.begin(), weights.begin() + 2 * alpha);
  if (variant == HardGraph::Gprime) w[size_t(2 * alpha - 1)] += weights[size_t(2 * alpha)];
  t.X = detail::graph_hard_pieces(w, 2 * alpha - 1, one_like(weights[1]));
  return t;
}

// Heaps on G^(alpha) with base {1} (weights Y) or {1, 2} (weights Y-tilde), to
// order z^L: X(.., -z y_k, ..) with the base weights zeroed, over X(-z y).
template <class T>
ZSeries<T> heap_gf(int alpha, HeapBase base, const std::vector<T>& weights, int L) {
  const HardPieceTable<T> den = hard_pieces(alpha, HardGraph::G, weights);
  std::vector<T> w = weights;
  const T zero = zero_like(weights[1]), one = one_like(weights[1]);
  w[1] = zero;
  if (base == HeapBase::OneTwo && alpha >= 2) w[2] = zero;
  const std::vector<T> num = detail::graph_hard_pieces(w, 2 * alpha - 1, one);
  // Coefficient of z^m is (-1)^m X_m.
  auto signed_coeff = [&](const std::vector<T>& x, int m) -> T {
    if (m >= int(x.size())) return zero;
    return m % 2 ? -x[size_t(m)] : x[size_t(m)];
  };
  if (den.X[0] != one) throw StructuralError("hard-piece denominator does not start with 1");
  std::vector<T> s;
  for (int k = 0; k <= L; ++k) {
    T acc = signed_coeff(num, k);
    for (int m = 1; m <= std::min(k, alpha); ++m) acc -= signed_coeff(den.X, m) * s[size_t(k - m)];
    s.push_back(acc);
  }
  return ZSeries<T>(std::move(s));
}

// K^(alpha) = 1 + z Y_1 J^(alpha) expanded from the finite fraction.
template <class T>
ZSeries<T> finite_k_series(const std::vector<T>& weights, int L) {
  FractionSpec<T> fs{FractionKind::Newtype, std::vector<T>(weights.begin() + 1, weights.end()), true};
  const ZSeries<T> J = expand(fs, L);
  std::vector<T> k{one_like(weights[1])};
  for (int n = 1; n <= L; ++n) k.push_back(weights[1] * J[n - 1]);
  return ZSeries<T>(std::move(k));
}

// j^(alpha)_n for lo <= n <= hi from the finite fraction with weights Y and
// its reflection with weights Y-tilde.
template <class T>
Ladder<T> finite_ladder(const std::vector<T>& weights, int lo, int hi, const Divider<T>& div) {
  if (lo > 0 || hi < 0) throw StructuralError("ladder range must contain 0");
  const std::vector<T> yt = tilde_coeffs(weights, div);
  const ZSeries<T> K = finite_k_series(weights, hi);
  const ZSeries<T> Jt =
      expand(FractionSpec<T>{FractionKind::Newtype, std::vector<T>(yt.begin() + 1, yt.end()), true}, -lo);
  Ladder<T> L;
  L.lo = lo;
  for (int n = lo; n < 0; ++n) L.j.push_back(Jt[-n]);
  for (int n = 0; n <= hi; ++n) L.j.push_back(K[n]);
  return L;
}

// Heap generating functions from both routes agree for base {1} and {1, 2}.
Report heap_gf_check(int alpha, std::uint64_t seed);

// X_m = X_alpha X-tilde_{alpha-m} and
// X_m(0) = X_alpha (X-tilde_{alpha-m} - X-tilde_{alpha-m}(0,0)) for all m.
Report complementation_check(int alpha, std::uint64_t seed);

// sum_m (-1)^m X_m j_{n-m} = 0 for |n| <= 2 alpha + 2.
Report linear_relation_check(int alpha, std::uint64_t seed);

// Constant weights Y (odd sites) and P (even sites); k_n is the specialized
// ladder.  The A/B relations use hard pieces x on G^(i-1), the C/D relations
// x' on G'^(i-1), including the boundary rows n = 1 and n = i + 1.
// Seeded versions draw Y, P as small rationals; the others use Y and P as
// indeterminates.
Report linear_relation_ab_check(int i, std::uint64_t seed);
Report linear_relation_ab_check(int i);
Report linear_relation_gprime_check(int i, std::uint64_t seed);
Report linear_relation_gprime_check(int i);

// The coupled H_i^(0), H_i^(1) system, its rescaling to L_i^(0), L_i^(1) and
// the three-term recursion.  Generic A_0, A_1, Y, P (seeded rationals) are
// compared with Hankel-type determinants of the specialized ladder; the
// (y, alpha) parametrization is compared with the closed forms for i <= i_max.
Report h_ladder(int i_max, std::uint64_t seed = 1);

// Closed forms of H_i^(0), H_i^(1) for random weights, the recursions through
// the single correction terms, and the stabilization of the ladder on
// G^(i-1).
Report hh_closed_check(int i_max, std::uint64_t seed);

}  // namespace sf
