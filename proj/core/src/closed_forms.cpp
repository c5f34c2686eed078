#include "slicefrac/closed_forms.hpp"

#include <array>
#include <string>
#include <vector>

#include "slicefrac/errors.hpp"

namespace sf {

namespace {

constexpr char kX = 'x';
constexpr char kY = 'y';

char var_of(ParamFamily f) { return f == ParamFamily::XGamma ? kX : kY; }

ParamSeries exact_poly(char v, std::vector<RatFunc> c) { return ParamSeries::poly(v, c, ParamSeries::kExact); }

ParamSeries exact_const(char v, const RatFunc& c) { return ParamSeries::constant(v, c, ParamSeries::kExact); }

// 1 - c v^k
ParamSeries one_minus(char v, const RatFunc& c, int k) {
  ParamSeries s = exact_const(v, RatFunc(1));
  s -= ParamSeries::monomial(v, c, k, ParamSeries::kExact);
  return s;
}

ParamSeries divide(const ParamSeries& a, const ParamSeries& b, int M) {
  if (b.coeff(0).is_zero()) throw ConversionError("closed-form denominator vanishes at the origin");
  return series_divide(a, b, M);
}

// The shared denominators: D(x, gamma) and E(y, alpha).
ParamSeries denominator(ParamFamily f) {
  const RatFunc p = RatFunc::var();
  const RatFunc p2 = p * p;
  if (f == ParamFamily::XGamma)
    // x + x^3 + g - 6 x^2 g + x^4 g + x g^2 + x^3 g^2
    return exact_poly(kX, {p, RatFunc(1) + p2, RatFunc(-6) * p, RatFunc(1) + p2, p});
  // 1 + y + a y - 6 a y^2 + a y^3 + a^2 y^3 + a^2 y^4
  return exact_poly(kY, {RatFunc(1), RatFunc(1) + p, RatFunc(-6) * p, p + p2, p2});
}

struct Factor {
  int param_power;  // coefficient is param^param_power
  int offset;       // exponent = base + offset
};
struct ProductForm {
  std::array<Factor, 2> num, den;
};

// i-dependent ratios multiplying the limit value, base exponent 2k or i.
const ProductForm kBEven{{{{0, 0}, {1, 3}}}, {{{1, 1}, {0, 2}}}};
const ProductForm kBOdd{{{{-1, 1}, {0, 4}}}, {{{0, 2}, {-1, 3}}}};
const ProductForm kWEven{{{{0, 0}, {-1, 3}}}, {{{-1, 1}, {0, 2}}}};
const ProductForm kWOdd{{{{1, 1}, {0, 4}}}, {{{0, 2}, {1, 3}}}};
const ProductForm kP{{{{0, 0}, {1, 3}}}, {{{0, 1}, {1, 2}}}};
const ProductForm kQ{{{{0, 0}, {2, 3}}}, {{{1, 1}, {1, 2}}}};
const ProductForm kYOdd{{{{0, 1}, {1, 3}}}, {{{0, 2}, {1, 2}}}};

ParamSeries apply(const ProductForm& f, int base, char v, const ParamSeries& limit, int M) {
  const RatFunc p = RatFunc::var();
  auto factor = [&](const Factor& x) { return one_minus(v, p.pow(x.param_power), base + x.offset); };
  return divide(limit * factor(f.num[0]) * factor(f.num[1]), factor(f.den[0]) * factor(f.den[1]), M);
}

void check_cap(const ParamPoint& p, ParamFamily want) {
  if (p.family != want) throw StructuralError("wrong parametrization family");
  if (p.cap < 1) throw StructuralError("closed forms need cap >= 1");
}

// Lowest order where s is nonzero, or -1 when s vanishes to order M.
int first_nonzero(const ParamSeries& s, int M) {
  if (s.cap() < M) throw VerificationError("residual not determined to order " + std::to_string(M));
  for (int k = std::min(0, s.valuation()); k <= M; ++k)
    if (!s.coeff(k).is_zero()) return k;
  return -1;
}

void expect_zero(const ParamSeries& s, int M, const std::string& what) {
  const int k = first_nonzero(s, M);
  if (k >= 0) throw VerificationError(what + ": nonzero at order " + std::to_string(k));
}

ParamSeries compose(const BiPoly& p, const std::vector<ParamSeries>& tbp, const std::vector<ParamSeries>& twp) {
  ParamSeries s = exact_const(tbp[0].var(), RatFunc());
  for (const auto& t : p.terms()) s += (tbp[size_t(t.a)] * twp[size_t(t.b)]).scaled(RatFunc(t.coeff));
  return s;
}

}  // namespace

TT eval_tt(const ParamPoint& p) {
  if (p.cap < 1) throw StructuralError("closed forms need cap >= 1");
  const char v = var_of(p.family);
  const RatFunc a = RatFunc::var();
  const ParamSeries D = denominator(p.family);
  const ParamSeries D2 = D * D;
  const ParamSeries s = ParamSeries::monomial(v, RatFunc(1), 1, ParamSeries::kExact);
  if (p.family == ParamFamily::XGamma) {
    const ParamSeries g_minus_x = exact_poly(kX, {a, RatFunc(-1)});
    const ParamSeries nb = s * g_minus_x.pow(3) * one_minus(kX, a, 3);
    const ParamSeries nw = s * exact_poly(kX, {a, RatFunc(), RatFunc(), RatFunc(-1)}) * one_minus(kX, a, 1).pow(3);
    return {divide(nb, D2, p.cap), divide(nw, D2, p.cap)};
  }
  const ParamSeries nb = s * one_minus(kY, a, 1).pow(3) * one_minus(kY, a, 3);
  const ParamSeries nw = s.scaled(a) * one_minus(kY, RatFunc(1), 1).pow(3) * one_minus(kY, a * a, 3);
  return {divide(nb, D2, p.cap), divide(nw, D2, p.cap)};
}

LimitSeries eval_limit(const ParamPoint& p) {
  if (p.cap < 1) throw StructuralError("closed forms need cap >= 1");
  const char v = var_of(p.family);
  const RatFunc a = RatFunc::var();
  const ParamSeries D = denominator(p.family);
  const ParamSeries s = ParamSeries::monomial(v, RatFunc(1), 1, ParamSeries::kExact);
  if (p.family == ParamFamily::XGamma) {
    const ParamSeries g_minus_x = exact_poly(kX, {a, RatFunc(-1)});
    return {divide(s * g_minus_x * g_minus_x, D, p.cap), divide(s * one_minus(kX, a, 1).pow(2), D, p.cap)};
  }
  return {divide(s * one_minus(kY, a, 1).pow(2), D, p.cap),
          divide(s.scaled(a) * one_minus(kY, RatFunc(1), 1).pow(2), D, p.cap)};
}

BWSeries eval_bw_closed(int i, const ParamPoint& p) {
  check_cap(p, ParamFamily::XGamma);
  if (i < 0) throw StructuralError("negative slice index");
  const LimitSeries L = eval_limit(p);
  const int base = i - i % 2;
  if (i % 2 == 0) return {apply(kBEven, base, kX, L.first, p.cap), apply(kWEven, base, kX, L.second, p.cap)};
  return {apply(kBOdd, base, kX, L.first, p.cap), apply(kWOdd, base, kX, L.second, p.cap)};
}

PQYSeries eval_pqy_closed(int i, const ParamPoint& p) {
  check_cap(p, ParamFamily::YAlpha);
  if (i < 0) throw StructuralError("negative slice index");
  const LimitSeries L = eval_limit(p);
  const ParamSeries Y = L.second - L.first;
  PQYSeries r{apply(kP, i, kY, L.first, p.cap), apply(kQ, i, kY, L.second, p.cap),
              apply(kP, i, kY, L.first, p.cap), apply(kYOdd, i, kY, Y, p.cap)};
  if (r.Y_even != r.P) throw VerificationError("Y_2i differs from P_i");
  if (i >= 1 && !(r.Q - r.P).equal_up_to(apply(kYOdd, i - 1, kY, Y, p.cap), p.cap))
    throw VerificationError("Q_i - P_i differs from Y_{2i-1} at i=" + std::to_string(i));
  return r;
}

Report verify_recursion(SliceKind kind, int i_lo, int i_hi, int M) {
  if (M < 2) throw StructuralError("verify_recursion needs M >= 2");
  if (i_lo < 1 || i_hi < i_lo) throw StructuralError("bad index range");
  Report rep("recursion");
  if (kind == SliceKind::BW) {
    const ParamPoint pt{ParamFamily::XGamma, M};
    const TT t = eval_tt(pt);
    std::vector<BWSeries> v;
    for (int i = 0; i <= i_hi + 1; ++i) v.push_back(eval_bw_closed(i, pt));
    for (int i = i_lo; i <= i_hi; ++i) {
      const auto& c = v[size_t(i)];
      const auto& dn = v[size_t(i - 1)];
      const auto& up = v[size_t(i + 1)];
      expect_zero(c.B - t.tb - c.B * (dn.W + c.B + up.W), M, "B_" + std::to_string(i) + " equation");
      expect_zero(c.W - t.tw - c.W * (dn.B + c.W + up.B), M, "W_" + std::to_string(i) + " equation");
    }
    rep.add("system", "B/W");
  } else {
    const ParamPoint pt{ParamFamily::YAlpha, M};
    const TT t = eval_tt(pt);
    std::vector<PQYSeries> v;
    for (int i = 0; i <= i_hi + 1; ++i) v.push_back(eval_pqy_closed(i, pt));
    for (int i = i_lo; i <= i_hi; ++i) {
      const auto& c = v[size_t(i)];
      const auto& dn = v[size_t(i - 1)];
      const auto& up = v[size_t(i + 1)];
      const std::string si = std::to_string(i);
      if (kind == SliceKind::PQ) {
        expect_zero(c.P - t.tb - c.P * (dn.P + c.Q + up.Q), M, "P_" + si + " equation");
        expect_zero(c.Q - t.tw - c.Q * (dn.P + c.Q) - c.P * up.Q, M, "Q_" + si + " equation");
      } else {
        // Y_{2i} = P_i, Y_{2i-1} = odd value at i-1, Y_{2i+1} = odd value at i.
        const ParamSeries& e = c.Y_even;
        const ParamSeries& o = dn.Y_odd;
        expect_zero(e - t.tb - e * (dn.Y_even + o + e + c.Y_odd + up.Y_even), M, "Y_" + std::to_string(2 * i) + " equation");
        expect_zero(o - (t.tw - t.tb) - o * (dn.Y_even + o + e), M, "Y_" + std::to_string(2 * i - 1) + " equation");
      }
    }
    rep.add("system", kind == SliceKind::PQ ? "P/Q" : "Y");
  }
  rep.add("indices", std::to_string(i_lo) + ".." + std::to_string(i_hi));
  rep.add("order", M);
  return rep;
}

Report param_equivalence(int M) {
  if (M < 0) throw StructuralError("negative order");
  const int cap = std::max(M, 1);
  const TT tx = eval_tt({ParamFamily::XGamma, cap}), ty = eval_tt({ParamFamily::YAlpha, cap});
  const LimitSeries lx = eval_limit({ParamFamily::XGamma, cap}), ly = eval_limit({ParamFamily::YAlpha, cap});
  const RatFunc g = RatFunc::var();
  const RatFunc alpha_of_g = (g * g).inv();
  // c(alpha) y^k -> c(1/gamma^2) gamma^k x^k
  auto sub = [&](const ParamSeries& s) {
    return s.map_coeffs([&](const RatFunc& c) { return c.eval(alpha_of_g); }, g, kX);
  };
  const std::pair<const char*, std::pair<ParamSeries, ParamSeries>> pairs[] = {
      {"t_black", {sub(ty.tb), tx.tb}},
      {"t_white", {sub(ty.tw), tx.tw}},
      {"P=B", {sub(ly.first), lx.first}},
      {"Q=W", {sub(ly.second), lx.second}},
  };
  Report rep("param_equivalence");
  for (const auto& [name, v] : pairs) {
    if (!v.first.equal_up_to(v.second, M)) throw VerificationError(std::string(name) + " differs after substitution");
    rep.add(name, "equal");
  }
  rep.add("order", M);
  return rep;
}

Report series_match(int N) {
  if (N < 1) throw StructuralError("series_match needs N >= 1");
  Report rep("series_match");
  auto powers = [&](const ParamSeries& t) {
    std::vector<ParamSeries> p{exact_const(t.var(), RatFunc(1))};
    for (int k = 1; k <= N; ++k) p.push_back(p.back() * t);
    return p;
  };
  auto check = [&](const BiPoly& solver, const ParamSeries& closed, const std::vector<ParamSeries>& tbp,
                   const std::vector<ParamSeries>& twp, const std::string& what) {
    if (!compose(solver, tbp, twp).equal_up_to(closed, N)) throw VerificationError(what + " differs from its closed form");
  };

  const ParamPoint px{ParamFamily::XGamma, N};
  const TT tx = eval_tt(px);
  const auto xb = powers(tx.tb), xw = powers(tx.tw);
  const SliceFamily bw = solve_bw(N);
  for (int i = 0; i <= bw.i_max; ++i) {
    const BWSeries c = eval_bw_closed(i, px);
    check(bw.first[size_t(i)], c.B, xb, xw, "B_" + std::to_string(i));
    check(bw.second[size_t(i)], c.W, xb, xw, "W_" + std::to_string(i));
  }

  const ParamPoint py{ParamFamily::YAlpha, N};
  const TT ty = eval_tt(py);
  const auto yb = powers(ty.tb), yw = powers(ty.tw);
  const SliceFamily pq = solve_pq(N), ys = solve_y(N);
  for (int i = 0; i <= pq.i_max; ++i) {
    const PQYSeries c = eval_pqy_closed(i, py);
    check(pq.first[size_t(i)], c.P, yb, yw, "P_" + std::to_string(i));
    check(pq.second[size_t(i)], c.Q, yb, yw, "Q_" + std::to_string(i));
    check(ys.first[size_t(2 * i)], c.Y_even, yb, yw, "Y_" + std::to_string(2 * i));
    if (2 * i + 1 < int(ys.first.size())) check(ys.first[size_t(2 * i + 1)], c.Y_odd, yb, yw, "Y_" + std::to_string(2 * i + 1));
  }
  rep.add("B/W indices", "0.." + std::to_string(bw.i_max));
  rep.add("P/Q/Y indices", "0.." + std::to_string(pq.i_max));
  rep.add("order", N);
  return rep;
}

YAlphaValues yalpha_values() {
  YAlphaValues v;
  v.y = RatFunc2(RatFunc::var());
  v.alpha = RatFunc2::var();
  const RatFunc2 &y = v.y, &a = v.alpha;
  const RatFunc2 one(1);
  v.E = one + y + a * y - RatFunc2(6) * a * y * y + a * y.pow(3) + a * a * y.pow(3) + a * a * y.pow(4);
  v.P = y * (one - a * y).pow(2) / v.E;
  v.Q = a * y * (one - y).pow(2) / v.E;
  v.tb = y * (one - a * y).pow(3) * (one - a * y.pow(3)) / (v.E * v.E);
  v.tw = a * y * (one - y).pow(3) * (one - a * a * y.pow(3)) / (v.E * v.E);
  v.Y = v.Q - v.P;
  v.Y1 = v.Y * (one - v.P - RatFunc2(2) * v.Q) / (one - RatFunc2(2) * v.Q);
  v.A0 = v.P / v.tb * (one - v.P - v.Q);
  v.A1 = -v.P / v.tb;
  v.d = (v.Y1 - v.Y) / v.Y1;
  v.w = v.A0 * v.A1 * v.Y1 * v.Y1 / (v.Y * v.Y) * v.P;
  return v;
}

RatFunc2 l0_closed(int i) {
  const RatFunc2 y(RatFunc::var()), one(1);
  return (one - y.pow(i + 1)) / ((one + y).pow(i) * (one - y));
}

RatFunc2 l1_closed(int i) {
  const YAlphaValues v = yalpha_values();
  const RatFunc2 one(1);
  return v.Y1 * (one + v.d * v.y) * (one - v.alpha * v.y.pow(i + 2)) / ((one + v.y).pow(i) * (one - v.y));
}

Report parametrization_identities() {
  Report rep("parametrization_identities");
  auto expect = [&](const std::string& name, const auto& lhs, const auto& rhs) {
    if (lhs != rhs) throw VerificationError("identity fails: " + name);
    rep.add(name, "holds");
  };

  const YAlphaValues v = yalpha_values();
  const RatFunc2 one(1), two(2);
  const RatFunc2 &y = v.y, &a = v.alpha, &P = v.P, &Q = v.Q;
  expect("t_black = P(1-P-2Q)", v.tb, P * (one - P - two * Q));
  expect("t_white = Q(1-Q-2P)", v.tw, Q * (one - Q - two * P));
  expect("Y", v.Y, (a - one) * y * (one - a * y * y) / v.E);
  expect("Y_1", v.Y1, (a - one) * y * (one - a * y.pow(3)) / ((one + y) * v.E));
  expect("A_0", v.A0, (one - a * y * y).pow(2) / ((one - a * y) * (one - a * y.pow(3))));
  expect("A_1", v.A1, -v.E / ((one - a * y) * (one - a * y.pow(3))));
  expect("d", v.d, -y * (one - a * y) / (one - a * y.pow(3)));
  expect("alpha from d", (v.d + y) / ((one + v.d * y) * y * y), a);
  expect("w", v.w, -(y + y.inv() + two).inv());
  expect("characteristic equation", (one - two * Q).pow(2) - (two + y + y.inv()) * P * (one - P - Q), RatFunc2());

  // The same relations with P and Q free (inner P, outer Q).
  {
    const RatFunc2 p(RatFunc::var()), q = RatFunc2::var();
    const RatFunc2 tb = p * (one - p - two * q);
    const RatFunc2 Y = q - p, Y1 = Y * (one - p - two * q) / (one - two * q);
    const RatFunc2 A0 = p / tb * (one - p - q), A1 = -p / tb;
    expect("w in P, Q", A0 * A1 * Y1 * Y1 / (Y * Y) * p, -p * (one - q - p) / (one - two * q).pow(2));
    expect("d in P, Q", (Y1 - Y) / Y1, -p / (one - p - two * q));
  }

  // Constructive direction, over (y, alpha, P) with P outermost.
  {
    using RatFunc3 = Frac<RatFunc2>;
    const RatFunc3 o(1), t(2), y3(y), a3(a), p = RatFunc3::var();
    const RatFunc3 q = -p * (o + y3) * (o - a3 * y3 * y3) / (t * y3 * (o - a3 * y3)) + o / t;
    const RatFunc3 d = -p / (o - p - t * q);
    expect("alpha in P, Q", (d + y3) / ((o + d * y3) * y3 * y3),
           -(p - y3 * (o - p - t * q)) / (y3 * y3 * (o - p - t * q - y3 * p)));
    expect("Q recovery", a3, -(p - y3 * (o - p - t * q)) / (y3 * y3 * (o - p - t * q - y3 * p)));
    // Characteristic equation in P alone: P times a multiple of -y(1-ay)^2 + P E.
    const RatFunc3 chr = (o - t * q).pow(2) - (t + y3 + y3.inv()) * p * (o - p - q);
    const RatFunc3 lin = -y3 * (o - a3 * y3).pow(2) + p * RatFunc3(v.E);
    const RatFunc3 ratio = chr / (p * lin);
    const RatFunc2 at_one = ratio.num().eval(RatFunc2(1)) / ratio.den().eval(RatFunc2(1));
    if (ratio != RatFunc3(at_one))
      throw VerificationError("characteristic equation is not P times the linear equation for P");
    rep.add("characteristic equation factors", "P * (-y(1-ay)^2 + P E)");
    // Its root gives back P and, through the recovered Q, Q.
    const RatFunc3 q_at = -RatFunc3(P) * (o + y3) * (o - a3 * y3 * y3) / (t * y3 * (o - a3 * y3)) + o / t;
    expect("Q from recovered P", q_at, RatFunc3(Q));
  }
  return rep;
}

}  // namespace sf
