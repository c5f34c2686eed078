#pragma once

// The tau/rho grading: t_black = tau, t_white = rho*tau.  A BiPoly of cap N
// becomes a tau-series of cap N whose tau^k coefficient is a polynomial in rho
// of degree <= k.  In this form valuations are well defined and leading
// coefficients live in a field, so exact quotients of series with zero
// constant term can be computed.

#include "slicefrac/bipoly.hpp"
#include "slicefrac/param_series.hpp"

namespace sf {

constexpr char kTau = 't';

ParamSeries bipoly_to_tau(const BiPoly& p);
// Uses the full precision of s (which must be finite).
BiPoly tau_to_bipoly(const ParamSeries& s);
// Converts the coefficients up to cap; s must be known that far.
BiPoly tau_to_bipoly(const ParamSeries& s, int cap);

// a / b computed as an exact series quotient in the grading and returned at
// the given cap.  Throws DivisionError if the quotient is not a series or the
// operands do not determine it up to cap.
BiPoly grading_divide(const BiPoly& a, const BiPoly& b, int cap);

}  // namespace sf
