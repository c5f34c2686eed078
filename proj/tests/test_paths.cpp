#include <string>

#include "doctest.h"
#include "slicefrac/paths.hpp"

using namespace sf;

namespace {

struct Symbols {
  VarList vars;
  std::vector<MPoly> B, W, P, Q, Y;
  explicit Symbols(int H) {
    for (int i = 0; i <= H; ++i) {
      B.push_back(MPoly::var(vars, "B" + std::to_string(i)));
      W.push_back(MPoly::var(vars, "W" + std::to_string(i)));
      P.push_back(MPoly::var(vars, "P" + std::to_string(i)));
      Q.push_back(MPoly::var(vars, "Q" + std::to_string(i)));
    }
    for (int i = 0; i <= 2 * H; ++i) Y.push_back(MPoly::var(vars, "Y" + std::to_string(i)));
  }
  WeightTable<MPoly> bw() const {
    auto w = make_table(WeightKind::Bicolored, B, W);
    w.strict = true;
    return w;
  }
  WeightTable<MPoly> pq() const {
    auto w = make_table(WeightKind::Context, P, Q);
    w.strict = true;
    return w;
  }
  WeightTable<MPoly> y() const {
    auto w = make_table(WeightKind::Elongated, Y);
    w.strict = true;
    return w;
  }
};

}  // namespace

TEST_CASE("bicolored paths by listing") {
  Symbols s(6);
  CHECK(z_bicolored(PathSpec{0, 0, 0}, s.bw()) == MPoly(1));
  CHECK(z_bicolored(PathSpec{1, 0, 0}, s.bw()) == s.W[1]);
  // UDUD and UUDD
  CHECK(z_bicolored(PathSpec{2, 0, 0}, s.bw()) == s.W[1] * s.W[1] + s.B[2] * s.W[1]);
  // at d = 1 the parity flips: a descent from 2 is white-weighted
  CHECK(z_bicolored(PathSpec{1, 1, 0}, s.bw()) == s.W[2]);
}

TEST_CASE("context paths by listing") {
  Symbols s(6);
  CHECK(z_context(PathSpec{1, 0, 0}, s.pq()) == s.Q[1]);
  CHECK(z_context(PathSpec{2, 0, 0}, s.pq()) == s.Q[1] * s.Q[1] + s.Q[2] * s.P[1]);
  CHECK(z_context(PathSpec{2, 0, 2}, s.pq()) == s.Q[2] * s.P[1]);
  CHECK_THROWS_AS(z_context(PathSpec{1, 0, 3}, s.pq()), StructuralError);
}

TEST_CASE("elongated paths") {
  Symbols s(8);
  CHECK(z_elongated(PathSpec{0, 0, 0}, s.y()) == MPoly(1));
  CHECK(z_elongated(PathSpec{1, 0, 0}, s.y()) == s.Y[1] + s.Y[2]);
  CHECK_THROWS_AS(z_elongated(PathSpec{1, 1, 0}, s.y()), StructuralError);

  // substituting Y_{2i-1} = Q_i - P_i, Y_{2i} = P_i turns elongated paths into context paths
  std::map<int, MPoly> sub;
  for (int i = 1; i <= 8; ++i) {
    sub[s.vars.find("Y" + std::to_string(2 * i - 1))] = s.Q[size_t(i)] - s.P[size_t(i)];
    sub[s.vars.find("Y" + std::to_string(2 * i))] = s.P[size_t(i)];
  }
  for (int n = 0; n <= 6; ++n)
    CHECK(z_elongated(PathSpec{n, 0, 0}, s.y()).substitute(sub) == z_context(PathSpec{n, 0, 0}, s.pq()));
}

TEST_CASE("constant weights") {
  VarList v;
  const MPoly B = MPoly::var(v, "B"), W = MPoly::var(v, "W");
  CHECK(z_const(1, B, W, WeightKind::Bicolored) == W);
  CHECK(z_const(2, B, W, WeightKind::Bicolored) == W * W + B * W);
  // the hatted and plain constant-weight path sums coincide
  for (int n = 0; n <= 6; ++n) CHECK(z_const(n, B, W, WeightKind::Context) == z_const(n, B, W, WeightKind::Bicolored));
  for (int n = 0; n <= 5; ++n)
    for (auto kind : {WeightKind::Bicolored, WeightKind::Context})
      CHECK(z_const(n + 1, B, W, kind, 2) == z_const(n + 1, B, W, kind) - z_const(n, B, W, kind) * W);
}

TEST_CASE("height shift covariance") {
  Symbols s(10);
  for (int d = 0; d <= 4; ++d) {
    std::vector<MPoly> Bs, Ws;
    for (int i = 0; i + d <= 10; ++i) {
      Bs.push_back(s.B[size_t(i + d)]);
      Ws.push_back(s.W[size_t(i + d)]);
    }
    auto shifted = make_table(WeightKind::Bicolored, Bs, Ws);
    shifted.strict = true;
    for (int n = 0; n <= 4; ++n)
      CHECK(z_bicolored(PathSpec{n, d, 0}, s.bw()) == z_bicolored(PathSpec{n, 0, 0}, shifted));
  }
}

TEST_CASE("zero constant term for n >= 1") {
  const int N = 4;
  std::vector<BiPoly> a, b;
  for (int i = 0; i <= 6; ++i) {
    a.push_back(BiPoly::tb(N) * Rational(i + 1));
    b.push_back(BiPoly::tw(N) + BiPoly::tb(N) * BiPoly::tw(N));
  }
  const auto bw = make_table(WeightKind::Bicolored, a, b);
  const auto pq = make_table(WeightKind::Context, a, b);
  for (int n = 1; n <= 4; ++n) {
    CHECK(z_bicolored(PathSpec{n, 0, 0}, bw).constant_term() == 0);
    CHECK(z_context(PathSpec{n, 1, 0}, pq).constant_term() == 0);
  }
}
