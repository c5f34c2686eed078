#include "slicefrac/rational.hpp"

#include "slicefrac/errors.hpp"

namespace sf {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw ConversionError("bad rational: " + s);
  q.canonicalize();
  return q;
}

Rational RationalSampler::nonzero() {
  std::uniform_int_distribution<int> num(1, bound_);
  std::uniform_int_distribution<int> den(1, bound_);
  std::bernoulli_distribution neg(0.5);
  Rational q(num(rng_), den(rng_));
  q.canonicalize();
  return neg(rng_) ? Rational(-q) : q;
}

Rational RationalSampler::positive() {
  std::uniform_int_distribution<int> num(1, bound_);
  std::uniform_int_distribution<int> den(1, bound_);
  Rational q(num(rng_), den(rng_));
  q.canonicalize();
  return q;
}

}  // namespace sf
