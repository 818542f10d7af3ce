#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace hurwitz {

// Exact arithmetic backbone.  Rational values are kept canonical by the
// backend: reduced to lowest terms with a strictly positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  return Rational(std::move(num)) / Rational(std::move(den));
}

inline Rational rational_pow(Rational base, unsigned exp) {
  Rational result = 1;
  while (exp != 0) {
    if (exp & 1u) result *= base;
    exp >>= 1u;
    if (exp != 0) base *= base;
  }
  return result;
}

// Exact binomial coefficient; the running division is exact at every step.
inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (unsigned j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;
  }
  return result;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Serializes as "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational rational_from_string(std::string_view text) {
  try {
    return Rational(std::string(text));
  } catch (const std::exception&) {
    throw std::invalid_argument("rational_from_string: cannot parse '" +
                                std::string(text) + "'");
  }
}

}  // namespace hurwitz
