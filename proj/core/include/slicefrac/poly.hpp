#pragma once

// Univariate polynomials over an exact field K and the field of fractions
// built from them.  RatFunc = Frac<Rational>; nesting Frac<Frac<Rational>>
// gives the two-parameter tower.

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "slicefrac/errors.hpp"
#include "slicefrac/rational.hpp"

namespace sf {

template <class K>
class Poly;
template <class K>
class Frac;

template <class K>
bool is_zero(const Poly<K>& p) {
  return p.is_zero();
}
template <class K>
bool is_zero(const Frac<K>& f) {
  return f.is_zero();
}

inline std::string coeff_str(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}
template <class K>
std::string coeff_str(const Frac<K>& f) {
  return "(" + f.str("y") + ")";
}

template <class K>
class Poly {
 public:
  Poly() = default;
  Poly(const K& a) {
    if (!sf::is_zero(a)) c_.push_back(a);
  }
  Poly(int a) : Poly(K(a)) {}
  explicit Poly(std::vector<K> c) : c_(std::move(c)) { trim(); }

  static Poly var() { return Poly(std::vector<K>{K(0), K(1)}); }
  static Poly monomial(const K& a, int k) {
    if (sf::is_zero(a)) return Poly();
    std::vector<K> c(k + 1, K(0));
    c[k] = a;
    return Poly(std::move(c));
  }

  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == K(1); }
  K coeff(int k) const { return (k >= 0 && k < int(c_.size())) ? c_[k] : K(0); }
  const K& lead() const { return c_.back(); }
  const std::vector<K>& coeffs() const { return c_; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (sf::is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly scaled(const K& a) const {
    if (sf::is_zero(a)) return Poly();
    Poly r = *this;
    for (auto& x : r.c_) x *= a;
    return r;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    K inv = K(1) / lead();
    return scaled(inv);
  }

  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw DivisionError("polynomial division by zero");
    r = a;
    q = Poly();
    if (a.degree() < b.degree()) return;
    std::vector<K> qc(a.degree() - b.degree() + 1, K(0));
    K binv = K(1) / b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int s = r.degree() - b.degree();
      K t = r.lead() * binv;
      qc[s] = t;
      for (int i = 0; i <= b.degree(); ++i) r.c_[i + s] -= t * b.c_[i];
      r.trim();
    }
    q = Poly(std::move(qc));
  }

  // Horner evaluation in any ring R that K embeds into.
  template <class R, class Embed>
  R eval(const R& x, Embed embed) const {
    R acc = embed(K(0));
    for (int i = degree(); i >= 0; --i) acc = acc * x + embed(c_[i]);
    return acc;
  }
  template <class R>
  R eval(const R& x) const {
    return eval(x, [](const K& k) { return R(k); });
  }

  std::string str(const std::string& v) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
      if (sf::is_zero(c_[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << coeff_str(c_[i]);
      if (i >= 1) os << "*" << v;
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && sf::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

// Euclid with monic remainders, which keeps coefficient growth in check.
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    Poly<K> q, r;
    Poly<K>::divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a;
}

template <class K>
class Frac {
 public:
  using P = Poly<K>;

  Frac() : num_(), den_(K(1)) {}
  Frac(int a) : num_(K(a)), den_(K(1)) {}
  Frac(const K& a) : num_(a), den_(K(1)) {}
  Frac(const P& p) : num_(p), den_(K(1)) {}
  Frac(P num, P den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionError("rational function with zero denominator");
    normalize();
  }

  static Frac var() { return Frac(P::var()); }

  const P& num() const { return num_; }
  const P& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_one(); }

  Frac operator-() const {
    Frac r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Frac& operator+=(const Frac& o) {
    if (den_ == o.den_) {
      num_ += o.num_;
      if (!den_.is_one()) normalize();
      else if (num_.is_zero()) den_ = P(K(1));
      return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  Frac& operator-=(const Frac& o) { return *this += -o; }
  Frac& operator*=(const Frac& o) {
    num_ = num_ * o.num_;
    if (num_.is_zero()) {
      den_ = P(K(1));
      return *this;
    }
    if (den_.is_one() && o.den_.is_one()) return *this;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  Frac& operator/=(const Frac& o) {
    if (o.is_zero()) throw DivisionError("rational function division by zero");
    return *this *= o.inv();
  }
  friend Frac operator+(Frac a, const Frac& b) { return a += b; }
  friend Frac operator-(Frac a, const Frac& b) { return a -= b; }
  friend Frac operator*(Frac a, const Frac& b) { return a *= b; }
  friend Frac operator/(Frac a, const Frac& b) { return a /= b; }
  // Lowest terms with a monic denominator is canonical.
  bool operator==(const Frac& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Frac& o) const { return !(*this == o); }

  Frac inv() const {
    if (is_zero()) throw DivisionError("inverse of zero rational function");
    Frac r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
  }

  Frac pow(int k) const {
    if (k < 0) return inv().pow(-k);
    Frac r(1), b = *this;
    while (k) {
      if (k & 1) r *= b;
      b *= b;
      k >>= 1;
    }
    return r;
  }

  // Substitution of the variable by an element of a field R containing K.
  template <class R, class Embed>
  R eval(const R& x, Embed embed) const {
    return num_.eval(x, embed) / den_.eval(x, embed);
  }
  template <class R>
  R eval(const R& x) const {
    return eval(x, [](const K& k) { return R(k); });
  }

  std::string str(const std::string& v) const {
    if (den_.is_one()) return num_.str(v);
    return "(" + num_.str(v) + ")/(" + den_.str(v) + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = P(K(1));
      return;
    }
    if (den_.degree() > 0) {
      P g = gcd(num_, den_);
      if (g.degree() > 0) {
        P q, r;
        P::divmod(num_, g, q, r);
        num_ = std::move(q);
        P::divmod(den_, g, q, r);
        den_ = std::move(q);
      }
    }
    if (!(den_.lead() == K(1))) {
      K inv = K(1) / den_.lead();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }
  P num_, den_;
};

using RatPoly = Poly<Rational>;
using RatFunc = Frac<Rational>;
// Rational functions in an outer variable with RatFunc coefficients.
using RatFunc2 = Frac<RatFunc>;

}  // namespace sf
