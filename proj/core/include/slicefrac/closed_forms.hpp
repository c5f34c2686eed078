#pragma once

// Parametrized closed forms of the slice generating functions, as series in
// x (resp. y) over the rational functions in gamma (resp. alpha), and their
// verification against the recursions, the series solvers and the algebraic
// identities linking the two parametrizations.

#include <string>

#include "slicefrac/param_series.hpp"
#include "slicefrac/report.hpp"
#include "slicefrac/slices.hpp"

namespace sf {

enum class ParamFamily { XGamma, YAlpha };

struct ParamPoint {
  ParamFamily family = ParamFamily::XGamma;
  int cap = 8;  // series order in x or y
};

struct TT {
  ParamSeries tb, tw;
};
TT eval_tt(const ParamPoint& p);

// (B, W) for xgamma, (P, Q) for yalpha.
struct LimitSeries {
  ParamSeries first, second;
};
LimitSeries eval_limit(const ParamPoint& p);

struct BWSeries {
  ParamSeries B, W;
};
BWSeries eval_bw_closed(int i, const ParamPoint& p);

struct PQYSeries {
  ParamSeries P, Q, Y_even, Y_odd;  // P_i, Q_i, Y_{2i}, Y_{2i+1}
};
// Also asserts Y_{2i} = P_i and, for i >= 1, Q_i - P_i = Y_{2i-1}.
PQYSeries eval_pqy_closed(int i, const ParamPoint& p);

// Residuals of the recursion system for i_lo <= i <= i_hi vanish to order M.
Report verify_recursion(SliceKind kind, int i_lo, int i_hi, int M);
// alpha = 1/gamma^2, y = gamma x maps t_b, t_w, P, Q onto t_b, t_w, B, W.
Report param_equivalence(int M);
// Solver outputs composed with the parametrized t_b, t_w equal the closed forms.
Report series_match(int N);
// Rational-function identities linking the (y, alpha) parametrization with
// A_0, A_1, Y_1, d, w and the constructive recovery of P and Q.
Report parametrization_identities();

// Closed forms in the boundary ladder:
// L_i^(0) = (1 - y^{i+1}) / ((1+y)^i (1-y)),
// L_i^(1) = Y_1 (1 + d y)(1 - alpha y^{i+2}) / ((1+y)^i (1-y)).
// Exact rational functions in (y, alpha): alpha outer, y inner.
RatFunc2 l0_closed(int i);
RatFunc2 l1_closed(int i);
// Y, Y_1, d and P in the (y, alpha) tower.
struct YAlphaValues {
  RatFunc2 y, alpha, E, P, Q, tb, tw, Y, Y1, A0, A1, d, w;
};
YAlphaValues yalpha_values();

}  // namespace sf
