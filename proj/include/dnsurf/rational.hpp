#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dnsurf {

// Exact arbitrary-precision rational, always stored reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

inline long long numerator_ll(const Rational& r) {
  return static_cast<long long>(boost::multiprecision::numerator(r));
}

inline long long denominator_ll(const Rational& r) {
  return static_cast<long long>(boost::multiprecision::denominator(r));
}

}  // namespace dnsurf
