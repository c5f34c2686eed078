#include "doctest.h"
#include "slicefrac/closed_forms.hpp"
#include "slicefrac/heaps.hpp"

using namespace sf;

namespace {

std::vector<Rational> weights(std::uint64_t seed, int count) {
  RationalSampler s(seed);
  std::vector<Rational> y{Rational(0)};
  for (int k = 0; k < count; ++k) y.push_back(s.nonzero());
  return y;
}

// Independent sets of a graph on vertices 1..n by bitmask, grouped by size.
std::vector<Rational> brute_hard_pieces(const std::vector<Rational>& w, const std::vector<std::pair<int, int>>& edges) {
  const int n = int(w.size()) - 1;
  std::vector<Rational> X(size_t(n + 1), Rational(0));
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (auto [a, b] : edges)
      if ((mask >> (a - 1) & 1) && (mask >> (b - 1) & 1)) ok = false;
    if (!ok) continue;
    Rational p = 1;
    int c = 0;
    for (int v = 1; v <= n; ++v)
      if (mask >> (v - 1) & 1) {
        p *= w[size_t(v)];
        ++c;
      }
    X[size_t(c)] += p;
  }
  X.resize(size_t((n + 1) / 2 + 1));  // at most ceil(n/2) pieces
  return X;
}

const Divider<Rational> kDiv = [](const Rational& a, const Rational& b) { return field_divide(a, b); };

// Vertices 1..n of G: consecutive sites, and consecutive even sites.
std::vector<std::pair<int, int>> g_edges(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  for (int v = 2; v + 2 <= n; v += 2) e.emplace_back(v, v + 2);
  return e;
}

}  // namespace

TEST_CASE("hard pieces on small graphs") {
  const Rational a(2), b(3), c(5);
  const auto t1 = hard_pieces(1, HardGraph::G, std::vector<Rational>{0, a});
  CHECK(t1.X == std::vector<Rational>{1, a});
  const auto t2 = hard_pieces(2, HardGraph::G, std::vector<Rational>{0, a, b, c});
  CHECK(t2.X == std::vector<Rational>{1, a + b + c, a * c});
  CHECK_THROWS_AS(hard_pieces(2, HardGraph::G, std::vector<Rational>{0, a, b}), StructuralError);
  CHECK_THROWS_AS(hard_pieces(2, HardGraph::Gprime, std::vector<Rational>{0, a, b, c}), StructuralError);
  CHECK_THROWS_AS(hard_pieces(0, HardGraph::G, std::vector<Rational>{0}), StructuralError);
}

TEST_CASE("hard pieces agree with brute-force independent sets") {
  for (int alpha = 1; alpha <= 5; ++alpha) {
    const auto y = weights(100 + alpha, 2 * alpha);
    const std::vector<Rational> yg(y.begin(), y.end() - 1);
    const auto g = hard_pieces(alpha, HardGraph::G, yg);
    CHECK(g.X == brute_hard_pieces(yg, g_edges(2 * alpha - 1)));
    Rational odd = 1;
    for (int k = 1; k <= alpha; ++k) odd *= y[size_t(2 * k - 1)];
    CHECK(g.X[size_t(alpha)] == odd);

    // G': vertex 2 alpha touches 2 alpha - 1 and 2 alpha - 2.
    std::vector<std::pair<int, int>> edges = g_edges(2 * alpha - 1);
    edges.emplace_back(2 * alpha - 1, 2 * alpha);
    if (alpha >= 2) edges.emplace_back(2 * alpha - 2, 2 * alpha);
    const auto gp = hard_pieces(alpha, HardGraph::Gprime, y);
    CHECK(gp.X == brute_hard_pieces(y, edges));
  }
}

TEST_CASE("heap generating functions") {
  const Rational y1(3, 2);
  const ZSeries<Rational> k1 = heap_gf(1, HeapBase::One, std::vector<Rational>{0, y1}, 6);
  Rational p = 1;
  for (int n = 0; n <= 6; ++n, p *= y1) CHECK(k1[n] == p);

  for (int alpha = 1; alpha <= 4; ++alpha)
    for (std::uint64_t seed : {1u, 2u, 3u}) CHECK_NOTHROW(heap_gf_check(alpha, seed));

  // Oracle through the finite fraction as a rational function in z.
  const auto y = weights(7, 5);
  const std::vector<Rational> yt = tilde_coeffs(y, kDiv);
  const ReflectionReport r = finite_reflection_check(y);
  const ZSeries<Rational> jt = series_of(r.Jt, 8);
  CHECK(heap_gf(3, HeapBase::OneTwo, yt, 8).coeffs() == jt.coeffs());
  const ZSeries<Rational> J = series_of(r.J, 8);
  const ZSeries<Rational> K = heap_gf(3, HeapBase::One, y, 8);
  CHECK(K[0] == 1);
  for (int n = 1; n <= 8; ++n) CHECK(K[n] == y[1] * J[n - 1]);
}

TEST_CASE("complementation identities") {
  for (int alpha = 1; alpha <= 4; ++alpha)
    for (std::uint64_t seed : {11u, 12u}) CHECK_NOTHROW(complementation_check(alpha, seed));

  // m = 0: X-tilde_alpha is the inverse of Y_1 Y_3 ... Y_{2 alpha - 1}.
  const auto y = weights(5, 5);
  const auto yt = tilde_coeffs(y, kDiv);
  const auto xt = hard_pieces(3, HardGraph::G, yt).X;
  CHECK(xt[3] * y[1] * y[3] * y[5] == 1);
  CHECK(xt[0] == 1);
}

TEST_CASE("linear relation between ladder entries") {
  for (int alpha = 1; alpha <= 4; ++alpha) CHECK_NOTHROW(linear_relation_check(alpha, 20 + alpha));

  // alpha = 1: j_n = Y_1 j_{n-1} on both sides of 0.
  const std::vector<Rational> y{0, Rational(-4, 3)};
  const Ladder<Rational> L = finite_ladder(y, -5, 5, kDiv);
  for (int n = -4; n <= 5; ++n) CHECK(L(n) == y[1] * L(n - 1));
}

TEST_CASE("constant-weight relations on G and G'") {
  for (int i = 1; i <= 5; ++i) {
    CHECK_NOTHROW(linear_relation_ab_check(i, 30 + i));
    CHECK_NOTHROW(linear_relation_gprime_check(i, 40 + i));
  }
  for (int i = 1; i <= 4; ++i) {
    CHECK_NOTHROW(linear_relation_ab_check(i));
    CHECK_NOTHROW(linear_relation_gprime_check(i));
  }

  // i = 2 directly: k_1 - (Y+P) k_0 = -P and k_3 - (Y+P) k_2 = Y P (Y+P).
  const Rational Y(2, 3), P(-5, 2);
  const Rational k2 = Y * (Y + P);
  const Rational k3 = Y * (Y + P) * (Y + 2 * P);
  CHECK(Y - (Y + P) == -P);
  CHECK(k3 - (Y + P) * k2 == Y * P * (Y + P));
}

TEST_CASE("H system and L ladder") {
  const Report rep = h_ladder(6, 3);
  CHECK(rep.items.size() > 0);
  const RatFunc2 y(RatFunc::var()), one(1);
  CHECK(l0_closed(0) == one);
  CHECK(l0_closed(1) == one);
  CHECK(l0_closed(2) == (one + y + y * y) / ((one + y) * (one + y)));
  CHECK_NOTHROW(h_ladder(3, 17));
  CHECK_THROWS_AS(h_ladder(1), StructuralError);
}

TEST_CASE("Hankel-type closed forms, corrections and stabilization") {
  for (std::uint64_t seed : {1u, 2u, 3u}) CHECK_NOTHROW(hh_closed_check(4, seed));
  const Report rep = hh_closed_check(5, 9);
  CHECK(rep.name == "hh_closed");
}
