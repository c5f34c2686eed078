#pragma once

// Many-variable polynomials with rational coefficients over a named variable
// list.  Used to state path and conserved-quantity identities with opaque
// symbolic weights before any specialization.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "slicefrac/rational.hpp"

namespace sf {

class VarList {
 public:
  // Returns the index of a name, registering it on first use.
  int id(const std::string& name);
  int find(const std::string& name) const;
  const std::string& name(int i) const { return names_.at(i); }
  int size() const { return int(names_.size()); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

class MPoly {
 public:
  using Exps = std::vector<int>;

  MPoly() = default;
  MPoly(int c);
  MPoly(const Rational& c);
  static MPoly var(int i);
  static MPoly var(VarList& vars, const std::string& name) { return var(vars.id(name)); }

  bool is_zero() const { return t_.empty(); }
  const std::map<Exps, Rational>& terms() const { return t_; }
  Rational coeff(const Exps& e) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  bool operator==(const MPoly& o) const { return t_ == o.t_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  // Replace variables by ring elements; vars without an image stay symbolic.
  MPoly substitute(const std::map<int, MPoly>& images) const;

  std::string str(const VarList& vars) const;

 private:
  static Exps trimmed(Exps e);
  void add_term(const Exps& e, const Rational& c);
  std::map<Exps, Rational> t_;
};

inline MPoly zero_like(const MPoly&) { return MPoly(); }
inline MPoly one_like(const MPoly&) { return MPoly(1); }
inline bool is_zero(const MPoly& p) { return p.is_zero(); }

}  // namespace sf
