#include "doctest.h"
#include "slicefrac/contfrac.hpp"
#include "slicefrac/grading.hpp"
#include "slicefrac/mpoly.hpp"

using namespace sf;

namespace {

const Divider<Rational> rat_div = [](const Rational& a, const Rational& b) { return field_divide(a, b); };
const Divider<RatFunc> func_div = [](const RatFunc& a, const RatFunc& b) { return field_divide(a, b); };

std::vector<MPoly> symbols(VarList& v, const std::string& stem, int count) {
  std::vector<MPoly> out;
  for (int k = 1; k <= count; ++k) out.push_back(MPoly::var(v, stem + std::to_string(k)));
  return out;
}

BiZSeries f_series(int len, int N) {
  const SliceFamily bw = solve_bw(N);
  std::vector<BiPoly> c;
  for (int n = 0; n <= len; ++n) c.push_back(f_n(n, bw));
  return BiZSeries(std::move(c));
}

}  // namespace

TEST_CASE("expansion of both fraction types") {
  VarList v;
  const auto Y = symbols(v, "Y", 4);
  const auto nt = expand(FractionSpec<MPoly>{FractionKind::Newtype, Y, false}, 2);
  CHECK(nt[0] == MPoly(1));
  CHECK(nt[1] == Y[0] + Y[1]);
  // J_2 = (Y1+Y2)^2 + Y2 (Y3+Y4)
  CHECK(nt[2] == (Y[0] + Y[1]) * (Y[0] + Y[1]) + Y[1] * (Y[2] + Y[3]));

  const auto c = symbols(v, "c", 2);
  const auto st = expand(FractionSpec<MPoly>{FractionKind::Stieltjes, c, false}, 2);
  CHECK(st[1] == c[0]);
  CHECK(st[2] == c[0] * c[0] + c[0] * c[1]);

  const auto zero = expand(FractionSpec<Rational>{FractionKind::Stieltjes, {0, 0, 0}, false}, 3);
  CHECK(zero.coeffs() == std::vector<Rational>{1, 0, 0, 0});
  CHECK_THROWS_AS(expand(FractionSpec<Rational>{FractionKind::Newtype, {1, 2}, false}, 2), StructuralError);

  // the finite one-rung fraction is exactly geometric
  const auto g = expand(FractionSpec<Rational>{FractionKind::Newtype, {3}, true}, 4);
  CHECK(g.coeffs() == std::vector<Rational>{1, 3, 9, 27, 81});
}

TEST_CASE("Stieltjes round trip over rationals") {
  RationalSampler s(11);
  for (int i_max = 1; i_max <= 4; ++i_max) {
    std::vector<RatFunc> c;
    for (int k = 0; k < 2 * i_max; ++k) c.push_back(RatFunc(s.nonzero()) + RatFunc::var() * RatFunc(s.nonzero()));
    const auto F = expand(FractionSpec<RatFunc>{FractionKind::Stieltjes, c, false}, 2 * i_max);
    const auto back = stieltjes_coeffs(F, i_max, func_div);
    for (int k = 1; k <= 2 * i_max; ++k) CHECK(back[size_t(k)] == c[size_t(k - 1)]);
    const auto again = expand(FractionSpec<RatFunc>{FractionKind::Stieltjes, {back.begin() + 1, back.end()}, false},
                              2 * i_max);
    CHECK(again.coeffs() == F.coeffs());
  }
}

TEST_CASE("Stieltjes extraction from F_n reproduces the slice solution") {
  const int i_max = 2;
  const BiZSeries F = f_series(2 * i_max, 11);
  const auto c = stieltjes_extract(F, i_max);
  CHECK(c[1].cap() >= 6);
  CHECK(c[1] == F[1].truncate(c[1].cap()));
  const SliceFamily bw = solve_bw(6);
  CHECK(c[1] == bw.second[1]);  // W_1
  CHECK(c[2] == bw.first[2]);   // B_2
  CHECK(c[3] == bw.second[3]);  // W_3
  CHECK(c[4] == bw.first[4]);   // B_4
}

TEST_CASE("Stieltjes extraction rejects short input") {
  const BiZSeries F = f_series(4, 3);
  CHECK_THROWS(stieltjes_extract(F, 3));
}

TEST_CASE("Hankel-type determinants") {
  VarList v;
  Ladder<MPoly> L;
  L.lo = -2;
  for (int n = -2; n <= 3; ++n) L.j.push_back(n == 0 ? MPoly(1) : MPoly::var(v, "j" + std::to_string(n)));
  const MPoly jm1 = L(-1), j1 = L(1);
  CHECK(hankel_type(L, 1, 1) == j1);
  CHECK(hankel_type(L, 1, 0) == MPoly(1));
  CHECK(hankel_type(L, 2, 0) == jm1 * j1 - MPoly(1));
  CHECK(hankel_type(L, 0, 0) == MPoly(1));
}

TEST_CASE("tilde coefficients") {
  const std::vector<RatFunc> y{0, 2, 3, 5, 7, 11};
  const auto t = tilde_coeffs(y, func_div);
  CHECK(t.size() == 6);
  CHECK(t[1] == RatFunc(Rational(1, 2)));
  CHECK(t[2] == RatFunc(Rational(3, 10)));
  CHECK(t[5] == RatFunc(Rational(1, 11)));
  CHECK_THROWS_AS(tilde_coeffs(std::vector<RatFunc>{0, 0, 1, 1}, func_div), NonInvertibleError);

  // J-tilde_1 = (Y_2 + Y_3)/(Y_1 Y_3)
  const std::vector<Rational> yr{0, 2, 3, 5, 7, 11};
  const auto tr = tilde_coeffs(yr, rat_div);
  const auto Jt = expand(FractionSpec<Rational>{FractionKind::Newtype, {tr.begin() + 1, tr.end()}, true}, 2);
  CHECK(Jt[1] == Rational(4, 5));
  CHECK(Jt[2] == Rational(203, 275));
}

TEST_CASE("new-type round trip") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    RationalSampler s(seed);
    std::vector<Rational> y{0};
    for (int k = 0; k < 9; ++k) y.push_back(s.nonzero());
    const auto J = expand(FractionSpec<Rational>{FractionKind::Newtype, {y.begin() + 1, y.end()}, true}, 4);
    const auto yt = tilde_coeffs(y, rat_div);
    const auto Jt = expand(FractionSpec<Rational>{FractionKind::Newtype, {yt.begin() + 1, yt.end()}, true}, 3);
    const auto L = build_ladder(J, y[1], Jt);
    CHECK(L(0) == 1);
    CHECK(L(1) == y[1]);
    CHECK(L(-1) == Jt[1]);
    const auto back = newtype_coeffs(L, 8, rat_div);
    for (int k = 1; k <= 8; ++k) CHECK(back[size_t(k)] == y[size_t(k)]);
  }
}

TEST_CASE("conjectured J-tilde") {
  const int N = 4;
  const LimitPair lim = solve_limit(N + 8);
  const SliceFamily y = solve_y(N + 8);
  for (int n = 1; n <= 2; ++n)
    CHECK(conjectured_tilde_j(n, lim, N) == conjectured_tilde_j_a0a1(n, lim, N));
  // J-tilde_1 = (Y_2 + Y_3)/(Y_1 Y_3) with the true Y_i
  const ParamSeries Y1 = bipoly_to_tau(y.first[1]), Y2 = bipoly_to_tau(y.first[2]),
                    Y3 = bipoly_to_tau(y.first[3]);
  const ParamSeries direct = laurent_divide(Y2 + Y3, Y1 * Y3);
  CHECK(conjectured_tilde_j(1, lim, N).equal_up_to(direct, N));
  CHECK(conjectured_tilde_j(1, lim, N).valuation() == -1);
  CHECK_THROWS_AS(conjectured_tilde_j(1, solve_limit(2), 6), DivisionError);
}

TEST_CASE("new-type extraction from the conjecture reproduces solve_y") {
  const int N = 6;
  const auto y = newtype_from_conjecture(4, N);
  const SliceFamily ref = solve_y(N);
  for (int k = 1; k <= 8; ++k) CHECK(y[size_t(k)] == ref.first[size_t(k)]);
}

TEST_CASE("finite reflection") {
  const auto r1 = finite_reflection_check(std::vector<Rational>{0, 5});
  CHECK(r1.J == (RatFunc(1) - RatFunc::var() * RatFunc(5)).inv());
  CHECK(r1.Jt == (RatFunc(1) - RatFunc::var() * RatFunc(Rational(1, 5))).inv());
  const auto r2 = finite_reflection_check(std::vector<Rational>{0, 1, 2, 3});
  CHECK(r2.J.den().degree() == 2);
  CHECK(r2.J.num().degree() == 1);
  for (int alpha = 1; alpha <= 4; ++alpha)
    for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK_NOTHROW(finite_reflection_check(alpha, seed));
}

TEST_CASE("underdetermination witness") {
  const auto w = underdetermination_witness(7);
  CHECK(w.y_true != w.y_other);
  CHECK(w.J_true.coeffs() == w.J_other.coeffs());
}

TEST_CASE("closed Hankel-type determinants") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(hankel_closed_check(seed, 4).empty());
}
