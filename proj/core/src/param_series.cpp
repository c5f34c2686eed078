#include "slicefrac/param_series.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace sf {

namespace {

int clamp_cap(std::int64_t c) {
  if (c >= ParamSeries::kExact) return ParamSeries::kExact;
  return int(c);
}

void check_var(const ParamSeries& a, const ParamSeries& b) {
  if (a.var() != b.var()) throw StructuralError("series in different variables");
}

}  // namespace

ParamSeries ParamSeries::constant(char var, const RatFunc& c, int cap) {
  return monomial(var, c, 0, cap);
}

ParamSeries ParamSeries::monomial(char var, const RatFunc& c, int k, int cap) {
  ParamSeries r(var, cap);
  r.set(k, c);
  return r;
}

ParamSeries ParamSeries::poly(char var, const std::vector<RatFunc>& coeffs, int cap) {
  ParamSeries r(var, cap);
  for (int k = 0; k < int(coeffs.size()); ++k) r.set(k, coeffs[k]);
  return r;
}

void ParamSeries::set(int k, const RatFunc& c) {
  if (k > cap_) return;
  if (c_.empty()) {
    if (c.is_zero()) return;
    lo_ = k;
    c_.push_back(c);
    return;
  }
  if (k < lo_) {
    if (c.is_zero()) return;
    c_.insert(c_.begin(), size_t(lo_ - k), RatFunc());
    lo_ = k;
  }
  if (k - lo_ >= int(c_.size())) {
    if (c.is_zero()) return;
    c_.resize(size_t(k - lo_ + 1));
  }
  c_[k - lo_] = c;
  trim();
}

void ParamSeries::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  size_t z = 0;
  while (z < c_.size() && c_[z].is_zero()) ++z;
  if (z == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  if (z) {
    c_.erase(c_.begin(), c_.begin() + z);
    lo_ += int(z);
  }
}

int ParamSeries::valuation() const { return c_.empty() ? cap_ + 1 : lo_; }

RatFunc ParamSeries::coeff(int k) const {
  if (k > cap_) throw StructuralError("coefficient beyond series precision");
  if (c_.empty() || k < lo_ || k > top()) return RatFunc();
  return c_[k - lo_];
}

ParamSeries ParamSeries::operator-() const {
  ParamSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

ParamSeries& ParamSeries::operator+=(const ParamSeries& o) {
  check_var(*this, o);
  const int cap = std::min(cap_, o.cap_);
  ParamSeries r(var_, cap);
  if (!c_.empty() || !o.c_.empty()) {
    int lo = std::min(c_.empty() ? o.lo_ : lo_, o.c_.empty() ? lo_ : o.lo_);
    int hi = std::min(cap, std::max(top(), o.top()));
    if (hi >= lo) {
      r.lo_ = lo;
      r.c_.assign(size_t(hi - lo + 1), RatFunc());
      for (int k = lo_; k <= std::min(top(), hi); ++k) r.c_[k - lo] += c_[k - lo_];
      for (int k = o.lo_; k <= std::min(o.top(), hi); ++k) r.c_[k - lo] += o.c_[k - o.lo_];
      r.trim();
    }
  }
  return *this = std::move(r);
}

ParamSeries& ParamSeries::operator-=(const ParamSeries& o) { return *this += -o; }

ParamSeries operator*(const ParamSeries& a, const ParamSeries& b) {
  check_var(a, b);
  const std::int64_t va = a.valuation(), vb = b.valuation();
  const int cap = clamp_cap(std::min(va + b.cap_, vb + a.cap_));
  ParamSeries r(a.var_, cap);
  if (a.c_.empty() || b.c_.empty()) return r;
  const int lo = a.lo_ + b.lo_;
  const int hi = std::min(cap, a.top() + b.top());
  if (hi < lo) return r;
  r.lo_ = lo;
  r.c_.assign(size_t(hi - lo + 1), RatFunc());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      const int k = int(i + j) + lo;
      if (k > hi) break;
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

namespace {

ParamSeries divide_impl(const ParamSeries& a, const ParamSeries& b, int limit, bool laurent) {
  check_var(a, b);
  if (b.is_zero()) throw DivisionError("series division by a divisor that vanishes to its precision");
  const std::int64_t vb = b.valuation(), va = a.valuation();
  if (!laurent && !a.is_zero() && va < vb)
    throw DivisionError("non-exact series division: dividend valuation " + std::to_string(va) +
                        " below divisor valuation " + std::to_string(vb));
  std::int64_t cap = std::min<std::int64_t>(std::int64_t(a.cap()) - vb, std::int64_t(b.cap()) + va - 2 * vb);
  cap = std::min<std::int64_t>(cap, limit);
  if (cap >= ParamSeries::kExact) throw DivisionError("quotient of exact series needs an explicit order");
  ParamSeries q(a.var(), int(cap));
  if (a.is_zero()) return q;
  const int vq = int(va - vb);
  const RatFunc lead_inv = b.coeff(int(vb)).inv();
  std::vector<RatFunc> qc;
  for (int k = vq; k <= cap; ++k) {
    RatFunc s = a.coeff(k + int(vb));
    for (int j = 1; j <= k - vq; ++j) {
      const int e = int(vb) + j;
      if (e > b.top()) break;
      const RatFunc& qk = qc[size_t(k - j - vq)];
      if (qk.is_zero()) continue;
      RatFunc bj = b.coeff(e);
      if (bj.is_zero()) continue;
      s -= bj * qk;
    }
    qc.push_back(s * lead_inv);
  }
  for (int k = vq; k <= cap; ++k) q.set(k, qc[size_t(k - vq)]);
  return q;
}

}  // namespace

ParamSeries series_divide(const ParamSeries& a, const ParamSeries& b, int limit) {
  return divide_impl(a, b, limit, false);
}

ParamSeries laurent_divide(const ParamSeries& a, const ParamSeries& b, int limit) {
  return divide_impl(a, b, limit, true);
}

ParamSeries operator/(const ParamSeries& a, const ParamSeries& b) { return laurent_divide(a, b); }

ParamSeries ParamSeries::scaled(const RatFunc& c) const {
  ParamSeries r(var_, cap_);
  if (c.is_zero()) return r;
  r.lo_ = lo_;
  r.c_ = c_;
  for (auto& x : r.c_) x *= c;
  return r;
}

ParamSeries ParamSeries::pow(int k) const {
  if (k < 0) throw StructuralError("negative power of a series");
  ParamSeries r = constant(var_, RatFunc(1), kExact), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

ParamSeries ParamSeries::truncate(int new_cap) const {
  if (new_cap > cap_) throw StructuralError("cannot raise series precision by truncation");
  ParamSeries r(var_, new_cap);
  for (int k = lo_; k <= std::min(top(), new_cap); ++k) r.set(k, c_[k - lo_]);
  return r;
}

ParamSeries ParamSeries::shifted(int k) const {
  ParamSeries r = *this;
  r.cap_ = clamp_cap(std::int64_t(cap_) + k);
  if (!r.c_.empty()) r.lo_ += k;
  return r;
}

bool ParamSeries::equal_up_to(const ParamSeries& o, int order) const {
  if (var_ != o.var_) return false;
  if (cap_ < order || o.cap_ < order) return false;
  const int lo = std::min(c_.empty() ? order + 1 : lo_, o.c_.empty() ? order + 1 : o.lo_);
  for (int k = lo; k <= order; ++k)
    if (coeff(k) != o.coeff(k)) return false;
  return true;
}

bool ParamSeries::operator==(const ParamSeries& o) const {
  return equal_up_to(o, std::min(cap_, o.cap_));
}

std::string ParamSeries::str(const std::string& param) const {
  std::ostringstream os;
  bool first = true;
  for (int k = lo_; k <= top(); ++k) {
    const RatFunc& c = c_[k - lo_];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str(param) << ")*" << var_ << "^" << k;
  }
  if (first) os << "0";
  if (!exact()) os << " + O(" << var_ << "^" << cap_ + 1 << ")";
  return os.str();
}

}  // namespace sf
