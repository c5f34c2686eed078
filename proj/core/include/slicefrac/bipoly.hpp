#pragma once

// Truncated bivariate polynomials in (t_black, t_white), truncated by total
// degree a + b <= cap.  Dense triangular storage; zero coefficients are
// implicit and never reported by terms().

#include <string>
#include <vector>

#include "slicefrac/rational.hpp"

namespace sf {

struct BiTerm {
  int a = 0;  // power of t_black
  int b = 0;  // power of t_white
  Rational coeff;
};

class BiPoly {
 public:
  explicit BiPoly(int cap = 0);

  static BiPoly constant(int cap, const Rational& c);
  static BiPoly monomial(int cap, int a, int b, const Rational& c = 1);
  static BiPoly tb(int cap) { return monomial(cap, 1, 0); }
  static BiPoly tw(int cap) { return monomial(cap, 0, 1); }

  int cap() const { return cap_; }
  Rational coeff(int a, int b) const;
  void set(int a, int b, const Rational& c);
  void add_to(int a, int b, const Rational& c);

  bool is_zero() const;
  // Lowest total degree carrying a nonzero term; -1 for the zero polynomial.
  int valuation() const;
  Rational constant_term() const { return coeff(0, 0); }

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);
  friend BiPoly operator+(BiPoly x, const BiPoly& y) { return x += y; }
  friend BiPoly operator-(BiPoly x, const BiPoly& y) { return x -= y; }
  friend BiPoly operator*(const BiPoly& x, const BiPoly& y);
  friend BiPoly operator*(BiPoly x, const Rational& c) { return x *= c; }
  friend BiPoly operator*(const Rational& c, BiPoly x) { return x *= c; }

  // Coefficient-wise comparison on the common cap.
  bool operator==(const BiPoly& o) const;
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  BiPoly inv() const;
  BiPoly pow(int k) const;
  BiPoly truncate(int new_cap) const;
  // Exchange t_black and t_white.
  BiPoly swapped() const;

  std::vector<BiTerm> terms() const;
  // Sorted "a b num/den" lines.
  std::string text() const;
  static BiPoly parse(const std::string& text, int cap);

 private:
  static int index(int a, int b) {
    int d = a + b;
    return d * (d + 1) / 2 + b;
  }
  void check_cap(const BiPoly& o) const;

  int cap_;
  std::vector<Rational> c_;
};

BiPoly add(const BiPoly& a, const BiPoly& b);
BiPoly mul(const BiPoly& a, const BiPoly& b);
BiPoly inv(const BiPoly& a);

inline BiPoly zero_like(const BiPoly& p) { return BiPoly(p.cap()); }
inline BiPoly one_like(const BiPoly& p) { return BiPoly::constant(p.cap(), 1); }
inline bool is_zero(const BiPoly& p) { return p.is_zero(); }

}  // namespace sf
