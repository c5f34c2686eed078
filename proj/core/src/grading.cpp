#include "slicefrac/grading.hpp"

#include <string>

#include "slicefrac/errors.hpp"

namespace sf {

ParamSeries bipoly_to_tau(const BiPoly& p) {
  ParamSeries s(kTau, p.cap());
  for (int k = 0; k <= p.cap(); ++k) {
    std::vector<Rational> c(size_t(k + 1));
    bool any = false;
    for (int b = 0; b <= k; ++b) {
      c[size_t(b)] = p.coeff(k - b, b);
      any = any || sgn(c[size_t(b)]) != 0;
    }
    if (any) s.set(k, RatFunc(RatPoly(std::move(c))));
  }
  return s;
}

BiPoly tau_to_bipoly(const ParamSeries& s) {
  if (s.exact()) throw ConversionError("exact tau-series needs an explicit cap");
  return tau_to_bipoly(s, s.cap());
}

BiPoly tau_to_bipoly(const ParamSeries& s, int cap) {
  if (cap < 0) throw ConversionError("negative cap");
  if (s.cap() < cap)
    throw ConversionError("tau-series known to order " + std::to_string(s.cap()) + ", need " + std::to_string(cap));
  if (!s.is_zero() && s.valuation() < 0) throw ConversionError("negative tau exponent in grading");
  BiPoly p(cap);
  for (int k = 0; k <= cap; ++k) {
    const RatFunc c = s.coeff(k);
    if (c.is_zero()) continue;
    if (!c.is_poly()) throw ConversionError("non-polynomial rho coefficient at tau^" + std::to_string(k));
    if (c.num().degree() > k)
      throw ConversionError("rho-degree exceeds tau-degree at tau^" + std::to_string(k));
    for (int b = 0; b <= c.num().degree(); ++b) p.set(k - b, b, c.num().coeff(b));
  }
  return p;
}

BiPoly grading_divide(const BiPoly& a, const BiPoly& b, int cap) {
  return tau_to_bipoly(series_divide(bipoly_to_tau(a), bipoly_to_tau(b), cap), cap);
}

}  // namespace sf
