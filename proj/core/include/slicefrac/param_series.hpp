#pragma once

// Truncated series in one variable (x, y or tau) with RatFunc coefficients.
//
// Each value carries its own precision: cap is the highest exponent whose
// coefficient is known.  Products and quotients propagate precision from the
// operands' valuations, so losses from dividing by high-valuation series are
// accounted for exactly instead of being guessed.  Exponents may start below
// zero (needed for the reciprocal ladder in the tau grading); plain series
// simply never use that.

#include <string>
#include <vector>

#include "slicefrac/poly.hpp"

namespace sf {

class ParamSeries {
 public:
  // Precision of values that are exact (polynomials).
  static constexpr int kExact = 1 << 28;

  explicit ParamSeries(char var = 'x', int cap = 0) : var_(var), cap_(cap) {}

  static ParamSeries constant(char var, const RatFunc& c, int cap);
  static ParamSeries monomial(char var, const RatFunc& c, int k, int cap);
  // coeffs[k] multiplies var^k.
  static ParamSeries poly(char var, const std::vector<RatFunc>& coeffs, int cap);

  char var() const { return var_; }
  int cap() const { return cap_; }
  bool exact() const { return cap_ >= kExact; }
  // Lowest exponent with a nonzero coefficient; cap + 1 if zero to precision.
  int valuation() const;
  bool is_zero() const { return c_.empty(); }
  RatFunc coeff(int k) const;
  // Highest exponent with a stored nonzero coefficient (valuation - 1 if none).
  int top() const { return lo_ + int(c_.size()) - 1; }

  ParamSeries operator-() const;
  ParamSeries& operator+=(const ParamSeries& o);
  ParamSeries& operator-=(const ParamSeries& o);
  friend ParamSeries operator+(ParamSeries a, const ParamSeries& b) { return a += b; }
  friend ParamSeries operator-(ParamSeries a, const ParamSeries& b) { return a -= b; }
  friend ParamSeries operator*(const ParamSeries& a, const ParamSeries& b);
  friend ParamSeries operator/(const ParamSeries& a, const ParamSeries& b);
  ParamSeries& operator*=(const ParamSeries& o) { return *this = *this * o; }
  ParamSeries& operator/=(const ParamSeries& o) { return *this = *this / o; }
  ParamSeries scaled(const RatFunc& c) const;
  ParamSeries pow(int k) const;

  ParamSeries truncate(int new_cap) const;
  // Multiplication by var^k.
  ParamSeries shifted(int k) const;
  // Apply f to every coefficient and multiply the k-th one by scale^k.
  template <class F>
  ParamSeries map_coeffs(F f, const RatFunc& scale, char new_var) const {
    ParamSeries r(new_var, cap_);
    for (int k = lo_; k <= top(); ++k) {
      const RatFunc& c = c_[k - lo_];
      if (c.is_zero()) continue;
      r.set(k, f(c) * scale.pow(k));
    }
    return r;
  }

  // Coefficients agree for every exponent <= order; both caps must reach order.
  bool equal_up_to(const ParamSeries& o, int order) const;
  // Coefficient-wise equality on the common precision.
  bool operator==(const ParamSeries& o) const;
  bool operator!=(const ParamSeries& o) const { return !(*this == o); }

  void set(int k, const RatFunc& c);
  std::string str(const std::string& param = "g") const;

 private:
  void trim();

  char var_;
  int cap_;
  int lo_ = 0;
  std::vector<RatFunc> c_;
};

// Quotient as a genuine series: requires valuation(b) <= valuation(a).
// The result cap is limited by the operands' precision and by `limit`.
ParamSeries series_divide(const ParamSeries& a, const ParamSeries& b, int limit = ParamSeries::kExact);
// Same, allowing a quotient that starts at a negative exponent.
ParamSeries laurent_divide(const ParamSeries& a, const ParamSeries& b, int limit = ParamSeries::kExact);

inline ParamSeries zero_like(const ParamSeries& p) { return ParamSeries(p.var(), ParamSeries::kExact); }
inline ParamSeries one_like(const ParamSeries& p) {
  return ParamSeries::constant(p.var(), RatFunc(1), ParamSeries::kExact);
}
inline bool is_zero(const ParamSeries& p) { return p.is_zero(); }

}  // namespace sf
