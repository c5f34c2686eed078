#pragma once

// Uniform zero/one/inverse helpers so the generic algorithms (determinants,
// z-series, continued fractions) run over Rational, RatFunc, BiPoly,
// ParamSeries and MPoly alike.

#include "slicefrac/bipoly.hpp"
#include "slicefrac/errors.hpp"
#include "slicefrac/param_series.hpp"
#include "slicefrac/poly.hpp"
#include "slicefrac/rational.hpp"

namespace sf {

inline Rational zero_like(const Rational&) { return 0; }
inline Rational one_like(const Rational&) { return 1; }
inline Rational invert(const Rational& q) {
  if (sgn(q) == 0) throw NonInvertibleError("inverse of zero");
  return 1 / q;
}

template <class K>
Frac<K> zero_like(const Frac<K>&) {
  return Frac<K>();
}
template <class K>
Frac<K> one_like(const Frac<K>&) {
  return Frac<K>(1);
}
template <class K>
Frac<K> invert(const Frac<K>& f) {
  return f.inv();
}

inline BiPoly invert(const BiPoly& p) { return p.inv(); }

inline ParamSeries invert(const ParamSeries& p) { return series_divide(one_like(p), p, p.cap()); }

}  // namespace sf
