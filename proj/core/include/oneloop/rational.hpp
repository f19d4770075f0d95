#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "oneloop/errors.hpp"

namespace oneloop {

using Integer = boost::multiprecision::cpp_int;

// Exact rational; kept in lowest terms with positive denominator by the
// backend.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational rational_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0 && exp < 0) throw DivisionByZero();
  Rational b = exp > 0 ? base : Rational(denominator(base), numerator(base));
  long e = exp > 0 ? exp : -exp;
  Rational out(1);
  while (e > 0) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

}  // namespace oneloop
