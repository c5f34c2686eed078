#pragma once

// Slice generating functions as truncated bivariate series: the three
// recursion systems, their i -> infinity limit, F_n and J_n, and the
// conserved quantities.

#include <utility>
#include <vector>

#include "slicefrac/bipoly.hpp"
#include "slicefrac/paths.hpp"

namespace sf {

enum class SliceKind { BW, PQ, Y };

struct SliceFamily {
  SliceKind kind = SliceKind::BW;
  int cap = 0;
  int i_max = 0;
  // BW: first = B_i, second = W_i.  PQ: first = P_i, second = Q_i.
  // Y: first = Y_0..Y_{2 i_max}, second empty.
  std::vector<BiPoly> first, second;

  WeightTable<BiPoly> table() const;
};

struct LimitPair {
  BiPoly first;   // B = P
  BiPoly second;  // W = Q
};

// Cap bound from SLICEFRAC_MAX_CAP (default 40); the solvers throw ResourceError above it.
int max_cap();

SliceFamily solve_bw(int N);
SliceFamily solve_pq(int N);
// Also cross-checked against solve_pq through Y_{2i-1} = Q_i - P_i, Y_{2i} = P_i.
SliceFamily solve_y(int N);
LimitPair solve_limit(int N);

BiPoly f_n(int n, const SliceFamily& bw);
BiPoly j_n(int n, const SliceFamily& pq);
BiPoly f_n(int n, int N);
BiPoly j_n(int n, int N);

// A_0 Z(2n;P,Q) + A_1 Z(2n+2;P,Q); the 1/t_black is an exact grading division.
BiPoly f_n_closed(int n, int N);
// Z(2n;B,W) - Z^{2 last down}(2n+2;B,W) B / t_black.
BiPoly f_n_closed_restricted(int n, int N);

// Right-hand sides of the conserved quantities at level d.  The family must
// have cap N+1 so the division by t_black leaves cap N.
BiPoly conserved_f(int n, int d, const SliceFamily& bw_plus1);
BiPoly conserved_j(int n, int d, const SliceFamily& pq_plus1);
BiPoly conserved_f(int n, int d, int N);
BiPoly conserved_j(int n, int d, int N);

// (Q-P)(1-P-2Q)/(1-2Q) and t_b(t_w-t_b)/(t_b - t_b Q + Q P^2), both at cap N.
std::pair<BiPoly, BiPoly> y1_two_routes(int N);

// Symbolic check of the explicit n = 1, 2 conserved quantities against the
// general level-d formula, for 1 <= i <= i_max with i = d + 1.
// Returns an empty string on success, else a description of the failure.
std::string conserved_symbolic_check(int i_max);

}  // namespace sf
