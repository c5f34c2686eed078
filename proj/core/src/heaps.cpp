#include "slicefrac/heaps.hpp"

#include <string>
#include <type_traits>

#include "slicefrac/closed_forms.hpp"

namespace sf {

namespace {

using std::to_string;

std::vector<Rational> random_weights(std::uint64_t seed, int count) {
  RationalSampler s(seed);
  std::vector<Rational> y{Rational(0)};
  for (int k = 0; k < count; ++k) y.push_back(s.nonzero());
  return y;
}

template <class T>
Divider<T> plain_div() {
  return [](const T& a, const T& b) { return a / b; };
}

template <class T>
void expect(Report& rep, const std::string& name, const T& lhs, const std::type_identity_t<T>& rhs) {
  if (lhs != rhs) throw VerificationError(rep.name + ": " + name + " fails");
}

template <class T>
T power(const T& x, int k) {
  T r = one_like(x);
  for (int e = 0; e < k; ++e) r *= x;
  return r;
}

// Hard pieces of G cut to the listed weights (n = size - 1 vertices).
template <class T>
std::vector<T> path_x(const std::vector<T>& w, const T& one) {
  return detail::graph_hard_pieces(w, int(w.size()) - 1, one);
}

template <class T>
std::vector<T> alternating(const T& odd, const T& even, int n) {
  std::vector<T> w{zero_like(odd)};
  for (int k = 1; k <= n; ++k) w.push_back(k % 2 ? odd : even);
  return w;
}

// k_n for -depth <= n <= depth + 1: k_0 = 1, k_n = Y Z_{n-1}, k_{-n} = Z-tilde_n,
// Z the infinite fraction with Y, P and Z-tilde the one with 1/Y, P/Y^2.
template <class T>
Ladder<T> constant_ladder(const T& Y, const T& P, int depth) {
  const int K = 2 * depth;
  const T yt = one_like(Y) / Y, pt = P / (Y * Y);
  auto coeffs = [&](const T& a, const T& b) {
    std::vector<T> c = alternating(a, b, K);
    return std::vector<T>(c.begin() + 1, c.end());
  };
  const ZSeries<T> Z = expand(FractionSpec<T>{FractionKind::Newtype, coeffs(Y, P), false}, depth);
  const ZSeries<T> Zt = expand(FractionSpec<T>{FractionKind::Newtype, coeffs(yt, pt), false}, depth);
  return build_ladder(Z, Y, Zt);
}

template <class T>
T linear_sum(const Ladder<T>& L, const std::vector<T>& x, int n) {
  T acc = zero_like(L(0));
  for (int m = 0; m < int(x.size()); ++m) {
    const T term = x[size_t(m)] * L(n - m);
    if (m % 2)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

template <class T>
void ab_relations(Report& rep, int i, const T& Y, const T& P) {
  if (i < 1) throw StructuralError("i must be positive");
  const T one = one_like(Y);
  const Ladder<T> k = constant_ladder(Y, P, i + 1);
  const std::vector<T> x = path_x(alternating(Y, P, i >= 2 ? 2 * i - 3 : 0), one);
  const T& top = x[size_t(i - 1)];
  expect(rep, "x_{i-1} = Y^{i-1}", top, power(Y, i - 1));
  auto R = [&](int n) {
    T acc = zero_like(Y);
    for (int m = 0; m < i; ++m) {
      const T term = k(n - i + m) * x[size_t(i - 1 - m)] / top;
      if (m % 2)
        acc -= term;
      else
        acc += term;
    }
    return acc;
  };
  for (int n = 2; n <= i; ++n) expect(rep, "A row n=" + to_string(n), R(n), zero_like(Y));
  const T Pi = power(P, i - 1);
  expect(rep, "B row n=1", R(1), Pi / power(Y, 2 * (i - 1)));
  const T sign = (i - 1) % 2 ? T(-one) : one;
  expect(rep, "B row n=i+1", R(i + 1), sign * Pi * Y * Y / power(Y, i));
  rep.add("i", i);
  rep.add("rows", "n=1..i+1");
}

template <class T>
void cd_relations(Report& rep, int i, const T& Y, const T& P) {
  if (i < 1) throw StructuralError("i must be positive");
  const T one = one_like(Y);
  const Ladder<T> k = constant_ladder(Y, P, i + 1);
  std::vector<T> x;
  if (i == 1) {
    x = {one};
  } else {
    x = hard_pieces(i - 1, HardGraph::Gprime, alternating(Y, P, 2 * (i - 1))).X;
    expect(rep, "x'_{i-1} = Y^{i-2}(Y+P)", x[size_t(i - 1)], power(Y, i - 2) * (Y + P));
  }
  expect(rep, "x'_0 = 1", x[0], one);
  for (int n = 2; n <= i; ++n) expect(rep, "C row n=" + to_string(n), linear_sum(k, x, n), zero_like(Y));
  const T Pi = power(P, i - 1);
  const T sign = (i - 1) % 2 ? T(-one) : one;
  expect(rep, "D row n=1", linear_sum(k, x, 1), sign * Pi * Y * Y / power(Y, i));
  expect(rep, "D row n=i+1", linear_sum(k, x, i + 1), Y * Pi * (Y + P));
  rep.add("i", i);
  rep.add("rows", "n=1..i+1");
}

// Y and P drawn so that the specialized fractions make sense.
std::pair<Rational, Rational> random_yp(std::uint64_t seed) {
  RationalSampler s(seed);
  Rational Y = s.nonzero(), P = s.nonzero();
  while (sgn(Y + P) == 0) P = s.nonzero();
  return {Y, P};
}

RatFunc2 indeterminate_y() { return RatFunc2::var(); }
RatFunc2 indeterminate_p() { return RatFunc2(RatFunc::var()); }

template <class T>
struct HSystem {
  std::vector<T> H0, H1, L0, L1;  // L rescaled from H
};

template <class T>
HSystem<T> run_h_system(const T& A0, const T& A1, const T& Y1, const T& Y, const T& P, int i_max) {
  const T one = one_like(Y);
  HSystem<T> s;
  s.H0.push_back(one);
  s.H1.push_back(one);
  for (int i = 1; i <= i_max; ++i) {
    const T Pi = power(P, i - 1);
    const T& h0 = s.H0.back();
    const T& h1 = s.H1.back();
    const T n0 = A0 * Y1 * Pi / power(Y, 2 * i - 1) * h1 + A1 * Y1 * Pi / power(Y, i - 1) * h0;
    const T n1 = A0 * Y1 * Pi / power(Y, i - 1) * h1 + A1 * Y1 * Pi * (Y + P) * h0;
    s.H0.push_back(n0);
    s.H1.push_back(n1);
  }
  for (int i = 0; i <= i_max; ++i) {
    const T scale = power(T(Y / P), i * (i - 1) / 2);
    s.L0.push_back(scale * s.H0[size_t(i)]);
    s.L1.push_back(scale * s.H1[size_t(i)] * Y / power(Y, i));
  }
  return s;
}

template <class T>
struct LSystem {
  std::vector<T> L0, L1;
};

// The rescaled system run directly from L_0^(0) = 1, L_0^(1) = Y.
template <class T>
LSystem<T> run_l_system(const T& A0, const T& A1, const T& Y1, const T& Y, const T& P, int i_max) {
  const T c00 = A1 * Y1, c01 = A0 * Y1 / (Y * Y);
  const T c10 = A1 * Y1 * (Y + P), c11 = A0 * Y1 / Y;
  LSystem<T> s;
  s.L0.push_back(one_like(Y));
  s.L1.push_back(Y);
  for (int i = 1; i <= i_max; ++i) {
    const T l0 = c01 * s.L1.back() + c00 * s.L0.back();
    const T l1 = c11 * s.L1.back() + c10 * s.L0.back();
    s.L0.push_back(l0);
    s.L1.push_back(l1);
  }
  return s;
}

// The three-term recursion shared by L^(0) and L^(1), and its initial values.
template <class T>
void check_l_recursions(Report& rep, const LSystem<T>& s, const T& A0, const T& A1, const T& Y1, const T& Y,
                        const T& P, const std::string& tag) {
  const int i_max = int(s.L0.size()) - 1;
  const T c = Y1 * (A0 / Y + A1);
  expect(rep, tag + " Y_1 (A_0/Y + A_1) = 1", c, one_like(Y));
  const T w = A0 * A1 * Y1 * Y1 / (Y * Y) * P;
  for (int i = 1; i < i_max; ++i) {
    expect(rep, tag + " L^(0) recursion i=" + to_string(i), s.L0[size_t(i + 1)],
           s.L0[size_t(i)] + w * s.L0[size_t(i - 1)]);
    expect(rep, tag + " L^(1) recursion i=" + to_string(i), s.L1[size_t(i + 1)],
           s.L1[size_t(i)] + w * s.L1[size_t(i - 1)]);
  }
  expect(rep, tag + " L_0^(0) = 1", s.L0[0], one_like(Y));
  expect(rep, tag + " L_1^(0) = 1", s.L0[1], one_like(Y));
  expect(rep, tag + " L_0^(1) = Y", s.L1[0], Y);
  expect(rep, tag + " L_1^(1) = Y_1", s.L1[1], Y1);
  for (int i = 1; i <= i_max; ++i)
    expect(rep, tag + " L^(1) from L^(0) i=" + to_string(i), s.L1[size_t(i)],
           Y * s.L0[size_t(i)] + (Y1 - Y) * s.L0[size_t(i - 1)]);
}

}  // namespace

Report heap_gf_check(int alpha, std::uint64_t seed) {
  if (alpha < 1) throw StructuralError("alpha must be positive");
  Report rep("heap_gf");
  const std::vector<Rational> y = random_weights(seed, 2 * alpha - 1);
  const std::vector<Rational> yt = tilde_coeffs(y, plain_div<Rational>());
  const int L = 2 * alpha + 3;
  const ZSeries<Rational> k_heaps = heap_gf(alpha, HeapBase::One, y, L);
  const ZSeries<Rational> k_frac = finite_k_series(y, L);
  if (k_heaps.coeffs() != k_frac.coeffs()) throw VerificationError("base {1} heaps differ from K^(alpha)");
  const ZSeries<Rational> jt_heaps = heap_gf(alpha, HeapBase::OneTwo, yt, L);
  const ZSeries<Rational> jt_frac =
      expand(FractionSpec<Rational>{FractionKind::Newtype, std::vector<Rational>(yt.begin() + 1, yt.end()), true}, L);
  if (jt_heaps.coeffs() != jt_frac.coeffs()) throw VerificationError("base {1,2} heaps differ from J-tilde^(alpha)");
  rep.add("alpha", alpha);
  rep.add("order", L);
  rep.add("base {1}", "matches K^(alpha)");
  rep.add("base {1,2}", "matches J-tilde^(alpha)");
  return rep;
}

Report complementation_check(int alpha, std::uint64_t seed) {
  if (alpha < 1) throw StructuralError("alpha must be positive");
  Report rep("complementation");
  const std::vector<Rational> y = random_weights(seed, 2 * alpha - 1);
  const std::vector<Rational> yt = tilde_coeffs(y, plain_div<Rational>());
  const std::vector<Rational> X = hard_pieces(alpha, HardGraph::G, y).X;
  const std::vector<Rational> Xt = hard_pieces(alpha, HardGraph::G, yt).X;
  std::vector<Rational> y0 = y, yt00 = yt;
  y0[1] = 0;
  yt00[1] = 0;
  if (alpha >= 2) yt00[2] = 0;
  const std::vector<Rational> X0 = path_x(y0, Rational(1));
  const std::vector<Rational> Xt00 = path_x(yt00, Rational(1));
  auto at = [](const std::vector<Rational>& v, int m) { return m < int(v.size()) ? v[size_t(m)] : Rational(0); };

  Rational odd = 1;
  for (int k = 1; k <= alpha; ++k) odd *= y[size_t(2 * k - 1)];
  expect(rep, "X_alpha = Y_1 Y_3 ...", X[size_t(alpha)], odd);
  expect(rep, "X-tilde_alpha = 1/X_alpha", Xt[size_t(alpha)], Rational(1 / odd));
  for (int m = 0; m <= alpha; ++m) {
    expect(rep, "X_m, m=" + to_string(m), X[size_t(m)], Rational(X[size_t(alpha)] * Xt[size_t(alpha - m)]));
    expect(rep, "X_m(0), m=" + to_string(m), at(X0, m),
           Rational(X[size_t(alpha)] * (Xt[size_t(alpha - m)] - at(Xt00, alpha - m))));
  }
  rep.add("alpha", alpha);
  rep.add("identities", 2 * (alpha + 1) + 2);
  return rep;
}

Report linear_relation_check(int alpha, std::uint64_t seed) {
  if (alpha < 1) throw StructuralError("alpha must be positive");
  Report rep("linear_relation");
  const std::vector<Rational> y = random_weights(seed, 2 * alpha - 1);
  const int R = 2 * alpha + 2;
  const Ladder<Rational> L = finite_ladder(y, -(R + alpha), R, plain_div<Rational>());
  const std::vector<Rational> X = hard_pieces(alpha, HardGraph::G, y).X;
  for (int n = -R; n <= R; ++n) expect(rep, "n=" + to_string(n), linear_sum(L, X, n), Rational(0));
  rep.add("alpha", alpha);
  rep.add("range", "|n| <= " + to_string(R));
  return rep;
}

Report linear_relation_ab_check(int i, std::uint64_t seed) {
  Report rep("linear_relation_ab");
  const auto [Y, P] = random_yp(seed);
  ab_relations(rep, i, Y, P);
  rep.add("weights", "Y=" + Y.get_str() + " P=" + P.get_str());
  return rep;
}

Report linear_relation_ab_check(int i) {
  Report rep("linear_relation_ab");
  ab_relations(rep, i, indeterminate_y(), indeterminate_p());
  rep.add("weights", "indeterminate");
  return rep;
}

Report linear_relation_gprime_check(int i, std::uint64_t seed) {
  Report rep("linear_relation_gprime");
  const auto [Y, P] = random_yp(seed);
  cd_relations(rep, i, Y, P);
  rep.add("weights", "Y=" + Y.get_str() + " P=" + P.get_str());
  if (i >= 2) {
    // General weights on G'^(alpha): the ladder comes from the fraction with
    // Y_{2 alpha - 1} + Y_{2 alpha} in the last slot.
    const int alpha = i - 1;
    std::vector<Rational> y = random_weights(seed ^ 0x9e3779b97f4a7c15ULL, 2 * alpha);
    while (sgn(y[size_t(2 * alpha - 1)] + y[size_t(2 * alpha)]) == 0) y[size_t(2 * alpha)] += 1;
    std::vector<Rational> yp(y.begin(), y.end() - 1);
    yp[size_t(2 * alpha - 1)] += y[size_t(2 * alpha)];
    const std::vector<Rational> X = hard_pieces(alpha, HardGraph::Gprime, y).X;
    const int R = 2 * alpha + 2;
    const Ladder<Rational> L = finite_ladder(yp, -(R + alpha), R, plain_div<Rational>());
    for (int n = -R; n <= R; ++n) expect(rep, "general G' n=" + to_string(n), linear_sum(L, X, n), Rational(0));
    rep.add("general G' relation", "|n| <= " + to_string(R));
  }
  return rep;
}

Report linear_relation_gprime_check(int i) {
  Report rep("linear_relation_gprime");
  cd_relations(rep, i, indeterminate_y(), indeterminate_p());
  rep.add("weights", "indeterminate");
  return rep;
}

Report h_ladder(int i_max, std::uint64_t seed) {
  if (i_max < 2) throw StructuralError("i_max must be at least 2");
  Report rep("h_ladder");

  // Generic values: the system against the determinants it was derived from.
  {
    RationalSampler s(seed);
    Rational Y, P, A0, A1;
    // Y_1 (A_0/Y + A_1) = 1 and A_0 + A_1 Q = 1 are the only constraints kept.
    do {
      Y = s.nonzero();
      P = s.nonzero();
      A1 = s.nonzero();
      A0 = 1 - A1 * (Y + P);
    } while (sgn(A0) == 0 || sgn(A0 + A1 * Y) == 0 || sgn(Y + P) == 0);
    const Rational Y1 = Y / (A0 + A1 * Y);
    const Ladder<Rational> k = constant_ladder(Y, P, i_max + 1);
    Ladder<Rational> j;
    j.lo = -i_max;
    for (int n = -i_max; n <= i_max + 1; ++n) j.j.push_back(Y1 / Y * (A0 * k(n) + A1 * k(n + 1)));
    expect(rep, "j_0 = 1", j(0), Rational(1));
    const HSystem<Rational> hs = run_h_system(A0, A1, Y1, Y, P, i_max);
    const LSystem<Rational> ls = run_l_system(A0, A1, Y1, Y, P, i_max);
    for (int i = 1; i <= i_max; ++i) {
      expect(rep, "H^(0) determinant i=" + to_string(i), hankel_type(j, i, 0), hs.H0[size_t(i)]);
      expect(rep, "H^(1) determinant i=" + to_string(i), hankel_type(j, i, 1), hs.H1[size_t(i)]);
      expect(rep, "L^(0) rescaling i=" + to_string(i), hs.L0[size_t(i)], ls.L0[size_t(i)]);
      expect(rep, "L^(1) rescaling i=" + to_string(i), hs.L1[size_t(i)], ls.L1[size_t(i)]);
    }
    check_l_recursions(rep, ls, A0, A1, Y1, Y, P, "generic");
    rep.add("generic", "A0=" + A0.get_str() + " A1=" + A1.get_str() + " Y=" + Y.get_str() + " P=" + P.get_str());
  }

  // The (y, alpha) parametrization: closed forms.
  {
    const YAlphaValues v = yalpha_values();
    const RatFunc2 one(1);
    const LSystem<RatFunc2> sys = run_l_system(v.A0, v.A1, v.Y1, v.Y, v.P, i_max);
    check_l_recursions(rep, sys, v.A0, v.A1, v.Y1, v.Y, v.P, "(y,alpha)");
    expect(rep, "w = -1/(y + 1/y + 2)", v.w, -(v.y + v.y.inv() + RatFunc2(2)).inv());
    expect(rep, "L_2^(0) = (1+y+y^2)/(1+y)^2", sys.L0[2], (one + v.y + v.y * v.y) / (one + v.y).pow(2));
    expect(rep, "alpha from d", v.alpha, (v.d + v.y) / (v.y * v.y * (one + v.d * v.y)));
    for (int i = 0; i <= i_max; ++i) {
      expect(rep, "L_i^(0) closed i=" + to_string(i), sys.L0[size_t(i)], l0_closed(i));
      expect(rep, "L_i^(1) closed i=" + to_string(i), sys.L1[size_t(i)], l1_closed(i));
    }
  }
  rep.add("i_max", i_max);
  return rep;
}

Report hh_closed_check(int i_max, std::uint64_t seed) {
  if (i_max < 2) throw StructuralError("i_max must be at least 2");
  Report rep("hh_closed");
  const std::string closed = hankel_closed_check(seed, i_max);
  if (!closed.empty()) throw VerificationError("hh_closed: " + closed);
  rep.add("closed forms", "i <= " + to_string(i_max));

  const int alpha = i_max + 2;
  const std::vector<Rational> y = random_weights(seed, 2 * alpha - 1);
  const std::vector<Rational> yt = tilde_coeffs(y, plain_div<Rational>());
  const Ladder<Rational> j = finite_ladder(y, -(i_max + 1), i_max + 2, plain_div<Rational>());
  std::vector<Rational> H0, H1;
  for (int i = 0; i <= i_max; ++i) {
    H0.push_back(hankel_type(j, i, 0));
    H1.push_back(hankel_type(j, i, 1));
  }
  expect(rep, "H_1^(0) = 1", H0[1], Rational(1));
  expect(rep, "H_2^(0) = Y_2/Y_3", H0[2], Rational(y[2] / y[3]));
  Rational odd = 1;
  for (int i = 1; i <= i_max; ++i) {
    odd *= y[size_t(2 * i - 1)];
    expect(rep, "H^(1)/H^(0) i=" + to_string(i), Rational(H1[size_t(i)] / H0[size_t(i)]), odd);
  }

  Rational even = 1, even_t = 1;
  for (int i = 2; i <= i_max + 1; ++i) {
    even *= y[size_t(2 * i - 2)];
    even_t *= yt[size_t(2 * i - 2)];
    if (i <= i_max) {
      expect(rep, "H^(0) correction recursion i=" + to_string(i), H0[size_t(i)], Rational(even_t * H1[size_t(i - 1)]));
      expect(rep, "H^(1) correction recursion i=" + to_string(i), H1[size_t(i)],
             Rational(y[1] * even * H0[size_t(i - 1)]));
    }
    // Heaps living on G^(i-1), and the consecutive finite fraction on G^(i).
    const std::vector<Rational> sub(y.begin(), y.begin() + 2 * (i - 1));
    const std::vector<Rational> next(y.begin(), y.begin() + 2 * i);
    const Ladder<Rational> js = finite_ladder(sub, -(i - 1), i, plain_div<Rational>());
    const Ladder<Rational> jn = finite_ladder(next, -(i - 1), i, plain_div<Rational>());
    for (int n = 0; n <= i - 1; ++n) {
      expect(rep, "stable j_n", js(n), j(n));
      expect(rep, "stable consecutive j_n", js(n), jn(n));
    }
    for (int n = 0; n <= i - 2; ++n) {
      expect(rep, "stable j_-n", js(-n), j(-n));
      expect(rep, "stable consecutive j_-n", js(-n), jn(-n));
    }
    expect(rep, "j_-(i-1) correction i=" + to_string(i), Rational(j(-(i - 1)) - js(-(i - 1))), even_t);
    expect(rep, "j_i correction i=" + to_string(i), Rational(j(i) - js(i)), Rational(y[1] * even));
  }
  rep.add("recursions and stabilization", "i <= " + to_string(i_max + 1));
  return rep;
}

}  // namespace sf
