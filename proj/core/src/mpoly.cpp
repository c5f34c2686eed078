#include "slicefrac/mpoly.hpp"

#include <sstream>

#include "slicefrac/errors.hpp"

namespace sf {

int VarList::id(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  names_.push_back(name);
  index_[name] = int(names_.size()) - 1;
  return int(names_.size()) - 1;
}

int VarList::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

MPoly::MPoly(int c) : MPoly(Rational(c)) {}

MPoly::MPoly(const Rational& c) {
  if (sgn(c) != 0) t_[{}] = c;
}

MPoly MPoly::var(int i) {
  MPoly p;
  Exps e(i + 1, 0);
  e[i] = 1;
  p.t_[e] = 1;
  return p;
}

MPoly::Exps MPoly::trimmed(Exps e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
  return e;
}

void MPoly::add_term(const Exps& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = t_.emplace(trimmed(e), c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
  }
}

Rational MPoly::coeff(const Exps& e) const {
  auto it = t_.find(trimmed(e));
  return it == t_.end() ? Rational(0) : it->second;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) {
      MPoly::Exps e(std::max(ea.size(), eb.size()), 0);
      for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly MPoly::substitute(const std::map<int, MPoly>& images) const {
  MPoly r;
  for (const auto& [e, c] : t_) {
    MPoly term(c);
    Exps rest(e.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = images.find(int(i));
      if (it == images.end()) {
        rest[i] = e[i];
        continue;
      }
      for (int k = 0; k < e[i]; ++k) term *= it->second;
    }
    MPoly mono;
    mono.t_[trimmed(rest)] = 1;
    r += term * mono;
  }
  return r;
}

std::string MPoly::str(const VarList& vars) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*" << (int(i) < vars.size() ? vars.name(int(i)) : "v" + std::to_string(i));
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace sf
