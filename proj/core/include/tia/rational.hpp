#pragma once

// Arbitrary-precision rational arithmetic. Values are always stored in lowest
// terms with a positive denominator (guaranteed by the boost backend), so
// equality is plain structural equality and arithmetic never overflows.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tia {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(num, den);
}

// n! as an exact integer; n must be non-negative.
inline Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Binomial coefficient C(n, k), zero outside 0 <= k <= n.
inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact at every step: r is C(n-k+i, i) * i! / i!
  }
  return r;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Renders as "p" for integers and "p/q" otherwise (the JSON wire format).
inline std::string to_string(const Rational& r) { return r.str(); }

// Parses "p", "p/q", with optional sign; throws std::invalid_argument on
// malformed input (including q == 0).
inline Rational rational_from_string(std::string_view s) {
  try {
    Rational r{std::string(s)};
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal: '" + std::string(s) + "'");
  }
}

}  // namespace tia
