#include "slicefrac/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "slicefrac/errors.hpp"

namespace sf {

BiPoly::BiPoly(int cap) : cap_(cap) {
  if (cap < 0) throw StructuralError("negative cap");
  c_.assign(size_t(cap + 1) * size_t(cap + 2) / 2, Rational(0));
}

BiPoly BiPoly::constant(int cap, const Rational& c) {
  BiPoly p(cap);
  p.c_[0] = c;
  return p;
}

BiPoly BiPoly::monomial(int cap, int a, int b, const Rational& c) {
  BiPoly p(cap);
  if (a + b <= cap) p.c_[index(a, b)] = c;
  return p;
}

Rational BiPoly::coeff(int a, int b) const {
  if (a < 0 || b < 0 || a + b > cap_) return 0;
  return c_[index(a, b)];
}

void BiPoly::set(int a, int b, const Rational& c) {
  if (a < 0 || b < 0) throw StructuralError("negative exponent");
  if (a + b > cap_) return;
  c_[index(a, b)] = c;
}

void BiPoly::add_to(int a, int b, const Rational& c) {
  if (a < 0 || b < 0) throw StructuralError("negative exponent");
  if (a + b > cap_) return;
  c_[index(a, b)] += c;
}

bool BiPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

int BiPoly::valuation() const {
  for (int d = 0; d <= cap_; ++d)
    for (int b = 0; b <= d; ++b)
      if (sgn(c_[index(d - b, b)]) != 0) return d;
  return -1;
}

void BiPoly::check_cap(const BiPoly& o) const {
  if (cap_ != o.cap_)
    throw StructuralError("cap mismatch: " + std::to_string(cap_) + " vs " + std::to_string(o.cap_));
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  check_cap(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  check_cap(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  *this = *this * o;
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  for (auto& q : c_) q *= c;
  return *this;
}

BiPoly operator*(const BiPoly& x, const BiPoly& y) {
  x.check_cap(y);
  const int N = x.cap_;
  BiPoly r(N);
  // Skip zero rows up front; most slice series are sparse at low degree.
  std::vector<int> xa, xb, ya, yb;
  std::vector<const Rational*> xv, yv;
  for (int d = 0; d <= N; ++d)
    for (int b = 0; b <= d; ++b) {
      const Rational& cx = x.c_[BiPoly::index(d - b, b)];
      if (sgn(cx) != 0) {
        xa.push_back(d - b);
        xb.push_back(b);
        xv.push_back(&cx);
      }
      const Rational& cy = y.c_[BiPoly::index(d - b, b)];
      if (sgn(cy) != 0) {
        ya.push_back(d - b);
        yb.push_back(b);
        yv.push_back(&cy);
      }
    }
  Rational t;
  for (size_t i = 0; i < xv.size(); ++i) {
    const int di = xa[i] + xb[i];
    // y terms are listed by increasing total degree, so we can stop early.
    for (size_t j = 0; j < yv.size(); ++j) {
      if (di + ya[j] + yb[j] > N) break;
      mpq_mul(t.get_mpq_t(), xv[i]->get_mpq_t(), yv[j]->get_mpq_t());
      Rational& dst = r.c_[BiPoly::index(xa[i] + ya[j], xb[i] + yb[j])];
      mpq_add(dst.get_mpq_t(), dst.get_mpq_t(), t.get_mpq_t());
    }
  }
  return r;
}

bool BiPoly::operator==(const BiPoly& o) const {
  const int N = std::min(cap_, o.cap_);
  for (int d = 0; d <= N; ++d)
    for (int b = 0; b <= d; ++b)
      if (c_[index(d - b, b)] != o.c_[index(d - b, b)]) return false;
  return true;
}

BiPoly BiPoly::inv() const {
  const Rational& a0 = c_[0];
  if (sgn(a0) == 0) throw NonInvertibleError("BiPoly with zero constant term is not invertible");
  Rational inv0 = 1 / a0;
  BiPoly r(cap_);
  r.c_[0] = inv0;
  for (int d = 1; d <= cap_; ++d) {
    for (int b = 0; b <= d; ++b) {
      const int a = d - b;
      Rational s = 0;
      for (int e = 1; e <= d; ++e)
        for (int bj = 0; bj <= e; ++bj) {
          const int aj = e - bj;
          if (aj > a || bj > b) continue;
          const Rational& x = c_[index(aj, bj)];
          if (sgn(x) == 0) continue;
          s += x * r.c_[index(a - aj, b - bj)];
        }
      r.c_[index(a, b)] = -s * inv0;
    }
  }
  return r;
}

BiPoly BiPoly::pow(int k) const {
  if (k < 0) return inv().pow(-k);
  BiPoly r = constant(cap_, 1), base = *this;
  while (k) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

BiPoly BiPoly::truncate(int new_cap) const {
  if (new_cap > cap_) throw StructuralError("cannot raise the cap by truncation");
  BiPoly r(new_cap);
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = c_[i];
  return r;
}

BiPoly BiPoly::swapped() const {
  BiPoly r(cap_);
  for (int d = 0; d <= cap_; ++d)
    for (int b = 0; b <= d; ++b) r.c_[index(b, d - b)] = c_[index(d - b, b)];
  return r;
}

std::vector<BiTerm> BiPoly::terms() const {
  std::vector<BiTerm> out;
  for (int a = 0; a <= cap_; ++a)
    for (int b = 0; a + b <= cap_; ++b) {
      const Rational& q = c_[index(a, b)];
      if (sgn(q) != 0) out.push_back({a, b, q});
    }
  return out;
}

std::string BiPoly::text() const {
  std::ostringstream os;
  for (const auto& t : terms()) os << t.a << ' ' << t.b << ' ' << to_string(t.coeff) << '\n';
  return os.str();
}

BiPoly BiPoly::parse(const std::string& text, int cap) {
  BiPoly p(cap);
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    int a, b;
    std::string q;
    if (!(ls >> a >> b >> q)) throw ConversionError("bad BiPoly line: " + line);
    if (a < 0 || b < 0 || a + b > cap) throw ConversionError("exponent beyond cap: " + line);
    p.set(a, b, parse_rational(q));
  }
  return p;
}

BiPoly add(const BiPoly& a, const BiPoly& b) { return a + b; }
BiPoly mul(const BiPoly& a, const BiPoly& b) { return a * b; }
BiPoly inv(const BiPoly& a) { return a.inv(); }

}  // namespace sf
