#include <cstdlib>

#include "doctest.h"
#include "slicefrac/errors.hpp"
#include "slicefrac/grading.hpp"
#include "slicefrac/slices.hpp"

using namespace sf;

namespace {

BiPoly bp(int cap, std::initializer_list<std::tuple<int, int, int>> terms) {
  BiPoly p(cap);
  for (auto [a, b, c] : terms) p.set(a, b, c);
  return p;
}

}  // namespace

TEST_CASE("solve_bw small orders") {
  CHECK(solve_bw(2).second[1] == bp(2, {{0, 1, 1}, {0, 2, 1}, {1, 1, 1}}));
  CHECK(solve_bw(1).first[1] == BiPoly::tb(1));
  const SliceFamily z = solve_bw(0);
  for (const auto& x : z.first) CHECK(x.is_zero());
  for (const auto& x : z.second) CHECK(x.is_zero());
}

TEST_CASE("solve_pq and solve_y small orders") {
  CHECK(solve_pq(1).second[1] == BiPoly::tw(1));
  CHECK(solve_y(1).first[1] == BiPoly::tw(1) - BiPoly::tb(1));
  const SliceFamily y = solve_y(5), pq = solve_pq(5);
  for (int i = 1; i <= y.i_max; ++i) CHECK(y.first[size_t(2 * i)] == pq.first[size_t(i)]);
}

TEST_CASE("limit pair") {
  CHECK(solve_limit(1).first == BiPoly::tb(1));
  CHECK(solve_limit(2).second == bp(2, {{0, 1, 1}, {0, 2, 1}, {1, 1, 2}}));
  const LimitPair L = solve_limit(6);
  CHECK(L.first == L.second.swapped());
  const SliceFamily bw = solve_bw(6), pq = solve_pq(6);
  CHECK(bw.first.back() == L.first);
  CHECK(bw.second.back() == L.second);
  CHECK(pq.first.back() == L.first);
  CHECK(pq.second.back() == L.second);
}

TEST_CASE("stabilization and swap symmetry") {
  const int N = 6;
  const SliceFamily bw = solve_bw(N), pq = solve_pq(N);
  for (int i = N + 1; i <= bw.i_max; ++i) {
    CHECK(bw.first[size_t(i)] == bw.first[size_t(N + 1)]);
    CHECK(pq.second[size_t(i)] == pq.second[size_t(N + 1)]);
  }
  for (int i = 0; i <= bw.i_max; ++i) CHECK(bw.first[size_t(i)] == bw.second[size_t(i)].swapped());
}

TEST_CASE("F_n and J_n") {
  CHECK(f_n(1, 2) == bp(2, {{0, 1, 1}, {0, 2, 1}, {1, 1, 1}}));
  CHECK(f_n(0, 3) == BiPoly::constant(3, 1));
  CHECK(j_n(0, 3) == BiPoly::constant(3, 1));
  const SliceFamily bw = solve_bw(6), pq = solve_pq(6);
  for (int n = 1; n <= 4; ++n) {
    const BiPoly f = f_n(n, bw);
    CHECK(f == j_n(n, pq));
    CHECK(f.constant_term() == 0);
  }
}

TEST_CASE("closed expressions for F_n") {
  CHECK(f_n_closed(0, 4) == BiPoly::constant(4, 1));
  const SliceFamily bw = solve_bw(5);
  for (int n = 0; n <= 4; ++n) {
    const BiPoly c = f_n_closed(n, 5);
    CHECK(c == f_n(n, bw));
    CHECK(c == f_n_closed_restricted(n, 5));
  }
}

TEST_CASE("conserved quantities") {
  const int N = 6;
  const SliceFamily bw = solve_bw(N + 1), pq = solve_pq(N + 1);
  const SliceFamily bw0 = solve_bw(N);
  for (int n = 1; n <= 3; ++n) {
    const BiPoly target = f_n(n, bw0);
    for (int d = 0; d <= 4; ++d) {
      CHECK(conserved_f(n, d, bw) == target);
      CHECK(conserved_j(n, d, pq) == target);
    }
  }
  CHECK(conserved_symbolic_check(5).empty());
}

TEST_CASE("Y_1 two routes") {
  for (int N : {1, 2, 6}) {
    const auto [r1, r2] = y1_two_routes(N);
    CHECK(r1 == r2);
    CHECK(r1 == solve_y(N).first[1]);
  }
  CHECK(y1_two_routes(1).first == BiPoly::tw(1) - BiPoly::tb(1));
}

TEST_CASE("cap guard") {
  CHECK(max_cap() == 40);
  setenv("SLICEFRAC_MAX_CAP", "3", 1);
  CHECK_THROWS_AS(solve_bw(4), ResourceError);
  CHECK_NOTHROW(solve_bw(3));
  setenv("SLICEFRAC_MAX_CAP", "-1", 1);
  CHECK_THROWS_AS(max_cap(), ResourceError);
  unsetenv("SLICEFRAC_MAX_CAP");
  CHECK_NOTHROW(solve_pq(4));
}
