#include "slicefrac/contfrac.hpp"

#include <algorithm>

#include "slicefrac/grading.hpp"
#include "slicefrac/paths.hpp"

namespace sf {

namespace {

ZSeries<ParamSeries> to_tau(const BiZSeries& F) {
  std::vector<ParamSeries> c;
  for (const auto& x : F.coeffs()) c.push_back(bipoly_to_tau(x));
  return ZSeries<ParamSeries>(std::move(c));
}

// Converts entries 1.. of a 1-based vector at their largest common cap.
std::vector<BiPoly> to_bipoly_common(const std::vector<ParamSeries>& v) {
  int cap = ParamSeries::kExact;
  for (size_t k = 1; k < v.size(); ++k) cap = std::min(cap, v[k].cap());
  if (cap < 0) throw DivisionError("input series do not determine the extracted coefficients");
  std::vector<BiPoly> out{BiPoly(cap)};
  for (size_t k = 1; k < v.size(); ++k) out.push_back(tau_to_bipoly(v[k], cap));
  return out;
}

ParamSeries tau_one() { return ParamSeries::constant(kTau, RatFunc(1), ParamSeries::kExact); }
ParamSeries tau_var() { return ParamSeries::monomial(kTau, RatFunc(1), 1, ParamSeries::kExact); }

struct LimitTau {
  ParamSeries P, Q, Y, Y1, A0, A1;
};

LimitTau limit_tau(const LimitPair& lim) {
  LimitTau r;
  r.P = bipoly_to_tau(lim.first);
  r.Q = bipoly_to_tau(lim.second);
  r.Y = r.Q - r.P;
  const ParamSeries one = tau_one();
  const ParamSeries two_q = r.Q + r.Q;
  r.Y1 = laurent_divide(r.Y * (one - r.P - two_q), one - two_q);
  r.A0 = laurent_divide(r.P * (one - r.P - r.Q), tau_var());
  r.A1 = -laurent_divide(r.P, tau_var());
  return r;
}

ParamSeries z_tau(int n, const LimitPair& lim) {
  if (n < 0) return ParamSeries(kTau, ParamSeries::kExact);
  return bipoly_to_tau(z_const(n, lim.first, lim.second, WeightKind::Bicolored));
}

ParamSeries truncate_checked(const ParamSeries& s, int N) {
  if (s.cap() < N) throw DivisionError("limit pair too short for the requested order");
  return s.truncate(N);
}

}  // namespace

ParamSeries conjectured_tilde_j(int n, const LimitPair& lim) {
  if (n < 1) throw StructuralError("J-tilde_n needs n >= 1");
  const LimitTau L = limit_tau(lim);
  const ParamSeries bracket = L.A0 * z_tau(n, lim) + L.A1 * L.Y * L.Y * z_tau(n - 1, lim);
  return laurent_divide(L.Y1 * bracket, L.Y.pow(2 * n + 1));
}

namespace {

std::vector<Rational> random_weights(std::uint64_t seed, int count) {
  RationalSampler s(seed);
  std::vector<Rational> y{Rational(0)};
  for (int k = 0; k < count; ++k) y.push_back(s.nonzero());
  return y;
}

ZSeries<Rational> expand_finite(const std::vector<Rational>& y, int L) {
  FractionSpec<Rational> fs{FractionKind::Newtype, std::vector<Rational>(y.begin() + 1, y.end()), true};
  return expand(fs, L);
}

RatFunc finite_fraction(const std::vector<Rational>& y) {
  const int K = int(y.size()) - 1;
  const int alpha = (K + 1) / 2;
  const RatFunc z = RatFunc::var();
  RatFunc G(1);
  for (int r = alpha; r >= 1; --r) {
    RatFunc level = RatFunc(y[size_t(2 * r - 1)]);
    if (2 * r <= K) level += RatFunc(y[size_t(2 * r)]) * G;
    G = (RatFunc(1) - z * level).inv();
  }
  return G;
}

const Divider<Rational> kRationalDiv = [](const Rational& a, const Rational& b) { return field_divide(a, b); };
const Divider<ParamSeries> kTauDiv = [](const ParamSeries& a, const ParamSeries& b) { return tau_divide(a, b); };

}  // namespace

std::vector<BiPoly> stieltjes_extract(const BiZSeries& F, int i_max) {
  return to_bipoly_common(stieltjes_coeffs(to_tau(F), i_max, kTauDiv));
}

Ladder<ParamSeries> build_jn(const BiZSeries& J, const BiPoly& y1, const std::vector<ParamSeries>& Jt) {
  std::vector<ParamSeries> jt{tau_one()};
  for (size_t n = 1; n < Jt.size(); ++n) jt.push_back(Jt[n]);
  return build_ladder(to_tau(J), bipoly_to_tau(y1), ZSeries<ParamSeries>(std::move(jt)));
}

std::vector<BiPoly> newtype_extract(const Ladder<ParamSeries>& ladder, int i_max) {
  return to_bipoly_common(newtype_coeffs(ladder, 2 * i_max, kTauDiv));
}

ParamSeries conjectured_tilde_j(int n, const LimitPair& lim, int N) {
  return truncate_checked(conjectured_tilde_j(n, lim), N);
}

ParamSeries conjectured_tilde_j_a0a1(int n, const LimitPair& lim, int N) {
  if (n < 1) throw StructuralError("J-tilde_n needs n >= 1");
  const LimitTau L = limit_tau(lim);
  auto zt = [&](int m) { return laurent_divide(z_tau(m, lim), L.Y.pow(2 * m)); };
  const ParamSeries r = laurent_divide(L.Y1, L.Y) * (L.A0 * zt(n) + L.A1 * zt(n - 1));
  return truncate_checked(r, N);
}

std::vector<BiPoly> newtype_from_conjecture_at(int i_max, int M) {
  if (i_max < 1 || M < 0) throw StructuralError("need i_max >= 1 and M >= 0");
  const SliceFamily pq = solve_pq(M);
  const LimitPair lim = solve_limit(M);
  std::vector<ParamSeries> J, Jt{tau_one()};
  for (int n = 0; n <= i_max; ++n) J.push_back(bipoly_to_tau(j_n(n, pq)));
  for (int n = 1; n < i_max; ++n) Jt.push_back(conjectured_tilde_j(n, lim));
  const Ladder<ParamSeries> ladder =
      build_ladder(ZSeries<ParamSeries>(std::move(J)), limit_tau(lim).Y1, ZSeries<ParamSeries>(std::move(Jt)));
  return newtype_extract(ladder, i_max);
}

std::vector<BiPoly> newtype_from_conjecture(int i_max, int N) {
  if (i_max < 1 || N < 0) throw StructuralError("need i_max >= 1 and N >= 0");
  // Each extra order of internal precision is cheap; the tracked caps tell us
  // when enough has been carried.
  for (int M = N + 2; M <= N + 6 * i_max + 6; M += 2) {
    std::vector<BiPoly> y;
    try {
      y = newtype_from_conjecture_at(i_max, M);
    } catch (const DivisionError&) {
      continue;
    }
    if (y[0].cap() < N) continue;
    for (auto& v : y) v = v.truncate(N);
    return y;
  }
  throw DivisionError("could not reach the requested order");
}

ZSeries<Rational> series_of(const RatFunc& f, int L) {
  const RatPoly& num = f.num();
  const RatPoly& den = f.den();
  const Rational d0 = den.coeff(0);
  if (sgn(d0) == 0) throw DivisionError("rational function has a pole at 0");
  std::vector<Rational> s;
  for (int k = 0; k <= L; ++k) {
    Rational acc = num.coeff(k);
    for (int j = 1; j <= std::min(k, den.degree()); ++j) acc -= den.coeff(j) * s[size_t(k - j)];
    s.push_back(acc / d0);
  }
  return ZSeries<Rational>(std::move(s));
}

ReflectionReport finite_reflection_check(int alpha, std::uint64_t seed) {
  if (alpha < 1) throw StructuralError("alpha must be positive");
  return finite_reflection_check(random_weights(seed, 2 * alpha - 1));
}

ReflectionReport finite_reflection_check(const std::vector<Rational>& y) {
  const int K = int(y.size()) - 1;
  if (K < 1 || K % 2 == 0) throw StructuralError("finite fraction needs 2 alpha - 1 weights");
  ReflectionReport rep;
  rep.alpha = (K + 1) / 2;
  rep.y = y;
  const std::vector<Rational> yt = tilde_coeffs(y, kRationalDiv);
  rep.J = finite_fraction(y);
  rep.Jt = finite_fraction(yt);

  const RatFunc z = RatFunc::var();
  const RatFunc J_inv = rep.J.eval(z.inv());
  if (rep.Jt != -(RatFunc(y[1]) / z) * J_inv)
    throw VerificationError("reflection identity fails: " + rep.Jt.str("z") + " vs " + J_inv.str("z"));
  if (rep.J.den().degree() != rep.alpha || rep.J.num().degree() != rep.alpha - 1)
    throw VerificationError("unexpected numerator/denominator degrees " + std::to_string(rep.J.num().degree()) +
                            "/" + std::to_string(rep.J.den().degree()));
  // z J(z) -> lead(num) / lead(den) at infinity.
  const Rational lim = rep.J.num().lead() / rep.J.den().lead();
  if (-1 / lim != y[1]) throw VerificationError("Y_1 does not match the behaviour of J at infinity");

  const Rational y1 = -1 / lim;
  const Ladder<Rational> L =
      build_ladder(series_of(rep.J, rep.alpha), y1, series_of(rep.Jt, rep.alpha));
  rep.recovered = newtype_coeffs(L, K, kRationalDiv);
  if (rep.recovered != y) throw VerificationError("Hankel-type formulas do not recover the weights");
  return rep;
}

UnderdeterminationWitness underdetermination_witness(std::uint64_t seed, int k) {
  if (k < 2) throw StructuralError("witness needs k >= 2");
  const std::vector<Rational> y = random_weights(seed, 2 * k + 1);
  const ZSeries<Rational> J = expand_finite(y, k + 1);
  const ZSeries<Rational> Jt = expand_finite(tilde_coeffs(y, kRationalDiv), k + 1);
  ZSeries<Rational> Jt_other = Jt;
  Jt_other[1] += 1;

  UnderdeterminationWitness w;
  w.y_true = newtype_coeffs(build_ladder(J, y[1], Jt), 2 * k, kRationalDiv);
  w.y_other = newtype_coeffs(build_ladder(J, y[1], Jt_other), 2 * k, kRationalDiv);
  auto reexpand = [&](const std::vector<Rational>& c) {
    return expand(FractionSpec<Rational>{FractionKind::Newtype, std::vector<Rational>(c.begin() + 1, c.end()), false}, k);
  };
  w.J_true = reexpand(w.y_true);
  w.J_other = reexpand(w.y_other);
  if (w.y_true == w.y_other) throw VerificationError("perturbed J-tilde gave the same coefficients");
  if (w.J_true.coeffs() != w.J_other.coeffs() || w.J_true.coeffs() != J.truncate(k).coeffs())
    throw VerificationError("re-expanded J differs between the two coefficient sets");
  return w;
}

std::string hankel_closed_check(std::uint64_t seed, int i_max) {
  const std::vector<Rational> y = random_weights(seed, 2 * i_max + 1);
  const ZSeries<Rational> J = expand_finite(y, i_max);
  const ZSeries<Rational> Jt = expand_finite(tilde_coeffs(y, kRationalDiv), i_max);
  const Ladder<Rational> L = build_ladder(J, y[1], Jt);
  Rational odd = 1;
  for (int i = 1; i <= i_max; ++i) {
    Rational h0 = 1;
    for (int m = 1; m < i; ++m) {
      const Rational r = y[size_t(2 * m)] / y[size_t(2 * m + 1)];
      for (int e = 0; e < i - m; ++e) h0 *= r;
    }
    odd *= y[size_t(2 * i - 1)];
    if (hankel_type(L, i, 0) != h0) return "H_" + std::to_string(i) + "^(0) mismatch";
    if (hankel_type(L, i, 1) != odd * h0) return "H_" + std::to_string(i) + "^(1) mismatch";
  }
  return {};
}

}  // namespace sf
