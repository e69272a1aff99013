#pragma once

#include <random>
#include <string>

#include "doctest.h"
#include "ldp/affine.hpp"
#include "ldp/rational.hpp"

namespace ldp_test {

using ldp::AffineForm;
using ldp::Rational;

inline Rational R(const char* text) { return Rational::parse(text); }
inline AffineForm F(const char* text) { return AffineForm::parse(text); }

// Fixed seed so every run sees the same sample.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240607);
  return gen;
}

inline Rational random_rational(long num_bound, long den_bound) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  return Rational(num(rng()), den(rng()));
}

}  // namespace ldp_test

namespace doctest {
template <>
struct StringMaker<ldp::Rational> {
  static String convert(const ldp::Rational& r) { return r.str().c_str(); }
};
template <>
struct StringMaker<ldp::AffineForm> {
  static String convert(const ldp::AffineForm& f) { return f.str('b').c_str(); }
};
}  // namespace doctest
