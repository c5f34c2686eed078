#pragma once

// Weighted Dyck-type path generating functions, by dynamic programming over
// (position, height, direction of the previous step).  Templated over the
// weight ring: BiPoly for series, MPoly for symbolic identities.

#include <string>
#include <vector>

#include "slicefrac/bipoly.hpp"
#include "slicefrac/errors.hpp"
#include "slicefrac/mpoly.hpp"
#include "slicefrac/ring.hpp"

namespace sf {

enum class WeightKind { Bicolored, Context, Elongated };

// Bicolored: first = B_i, second = W_i.  Context: first = P_i, second = Q_i.
// Elongated: first = Y_i (every index), tails split by parity:
// tail_first for odd indices, tail_second for even ones.
// Index 0 is stored but never used by a descent.
template <class T>
struct WeightTable {
  WeightKind kind = WeightKind::Bicolored;
  std::vector<T> first, second;
  T tail_first, tail_second;
  // Throw instead of falling back to the tail.
  bool strict = false;

  const T& get(const std::vector<T>& seq, const T& tail, int i) const {
    if (i >= 0 && i < int(seq.size())) return seq[size_t(i)];
    if (strict) throw StructuralError("weight index " + std::to_string(i) + " outside stored range");
    return tail;
  }
  const T& a(int i) const { return get(first, tail_first, i); }
  const T& b(int i) const { return get(second, tail_second, i); }
  const T& y(int i) const {
    if (i >= 0 && i < int(first.size())) return first[size_t(i)];
    if (strict) throw StructuralError("weight index " + std::to_string(i) + " outside stored range");
    return (i % 2) ? tail_first : tail_second;
  }
  const T& unit_sample() const { return tail_first; }
};

struct PathSpec {
  int n = 0;  // half-length
  int d = 0;  // start height
  int k = 0;  // number of final steps forced to descend
};

namespace detail {

inline void check_spec(const PathSpec& s) {
  if (s.n < 0 || s.d < 0 || s.k < 0 || s.k > 2 * s.n) throw StructuralError("invalid path parameters");
}

// dp[h][dir] over heights d..d+n; dir 0 = previous step up (or none), 1 = down.
template <class T, class DescentWeight>
T dyck_dp(const PathSpec& s, const T& sample, DescentWeight descent) {
  check_spec(s);
  const T zero = zero_like(sample), one = one_like(sample);
  if (s.n == 0) return one;
  const int H = s.n + 1;
  std::vector<std::vector<T>> cur(size_t(H), std::vector<T>(2, zero)), next;
  std::vector<std::vector<bool>> live(size_t(H), std::vector<bool>(2, false)), nlive;
  cur[0][0] = one;
  live[0][0] = true;
  const int L = 2 * s.n;
  for (int step = 0; step < L; ++step) {
    const bool must_descend = step >= L - s.k;
    next.assign(size_t(H), std::vector<T>(2, zero));
    nlive.assign(size_t(H), std::vector<bool>(2, false));
    for (int r = 0; r < H; ++r)
      for (int dir = 0; dir < 2; ++dir) {
        if (!live[size_t(r)][size_t(dir)]) continue;
        const T& v = cur[size_t(r)][size_t(dir)];
        const int remaining = L - step - 1;
        if (!must_descend && r + 1 < H && r + 1 <= remaining) {
          next[size_t(r + 1)][0] += v;
          nlive[size_t(r + 1)][0] = true;
        }
        if (r >= 1 && r - 1 <= remaining) {
          next[size_t(r - 1)][1] += v * descent(s.d + r, dir == 0);
          nlive[size_t(r - 1)][1] = true;
        }
      }
    cur.swap(next);
    live.swap(nlive);
  }
  return cur[0][0] + cur[0][1];
}

}  // namespace detail

template <class T>
T z_bicolored(const PathSpec& s, const WeightTable<T>& w) {
  if (w.kind != WeightKind::Bicolored) throw StructuralError("z_bicolored needs a bicolored table");
  return detail::dyck_dp(s, w.unit_sample(), [&](int h, bool) -> const T& {
    return ((h - s.d) % 2 == 0) ? w.a(h) : w.b(h);
  });
}

template <class T>
T z_context(const PathSpec& s, const WeightTable<T>& w) {
  if (w.kind != WeightKind::Context) throw StructuralError("z_context needs a context table");
  return detail::dyck_dp(s, w.unit_sample(), [&](int h, bool after_ascent) -> const T& {
    return after_ascent ? w.b(h) : w.a(h);
  });
}

// Elementary +-1 steps plus level steps of horizontal length 2; height 0 only.
template <class T>
T z_elongated(const PathSpec& s, const WeightTable<T>& w) {
  if (w.kind != WeightKind::Elongated) throw StructuralError("z_elongated needs an elongated table");
  if (s.d != 0) throw StructuralError("elongated paths are defined at start height 0 only");
  if (s.k != 0) throw StructuralError("elongated paths take no final-descent restriction");
  detail::check_spec(s);
  const T& sample = w.unit_sample();
  const T zero = zero_like(sample);
  const int L = 2 * s.n, H = s.n + 1;
  std::vector<std::vector<T>> f(size_t(L + 1), std::vector<T>(size_t(H), zero));
  f[0][0] = one_like(sample);
  for (int x = 1; x <= L; ++x)
    for (int h = 0; h < H && h <= L - x; ++h) {
      T acc = zero;
      if (h >= 1) acc += f[size_t(x - 1)][size_t(h - 1)];
      if (h + 1 < H) acc += f[size_t(x - 1)][size_t(h + 1)] * w.y(2 * (h + 1));
      if (x >= 2) acc += f[size_t(x - 2)][size_t(h)] * w.y(2 * h + 1);
      f[size_t(x)][size_t(h)] = std::move(acc);
    }
  return f[size_t(L)][0];
}

// Constant-weight specialization at height 0.  Bicolored: descents from even
// heights weigh wa (= B), from odd heights wb (= W).  Context: wb (= Q) after
// an ascent, wa (= P) after a descent.
template <class T>
T z_const(int n, const T& wa, const T& wb, WeightKind kind, int k = 0) {
  PathSpec s{n, 0, k};
  if (kind == WeightKind::Bicolored)
    return detail::dyck_dp(s, wa, [&](int h, bool) -> const T& { return (h % 2 == 0) ? wa : wb; });
  if (kind == WeightKind::Context)
    return detail::dyck_dp(s, wa, [&](int, bool after_ascent) -> const T& { return after_ascent ? wb : wa; });
  throw StructuralError("z_const supports bicolored and context kinds");
}

// Helpers to build tables whose tails repeat the last stored entry.
template <class T>
WeightTable<T> make_table(WeightKind kind, std::vector<T> first, std::vector<T> second = {}) {
  WeightTable<T> w;
  w.kind = kind;
  if (first.size() < 2) throw StructuralError("weight table needs index 0 and at least one entry");
  if (kind == WeightKind::Elongated) {
    const int top = int(first.size()) - 1;
    w.tail_first = first[size_t(top % 2 ? top : top - 1)];
    w.tail_second = first[size_t(top % 2 ? top - 1 : top)];
  } else {
    if (second.size() != first.size()) throw StructuralError("weight sequences differ in length");
    w.tail_first = first.back();
    w.tail_second = second.back();
  }
  w.first = std::move(first);
  w.second = std::move(second);
  return w;
}

}  // namespace sf
