#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

namespace sf {

using Rational = mpq_class;
using Integer = mpz_class;

// Always "num/den", also for integers, so the text form is uniform.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Small nonzero rationals with |num|, den <= bound.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, int bound = 7) : rng_(seed), bound_(bound) {}
  Rational nonzero();
  Rational positive();
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  int bound_;
};

}  // namespace sf
