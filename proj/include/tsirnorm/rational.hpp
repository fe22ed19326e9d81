#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "tsirnorm/errors.hpp"

namespace tsir {

/// All norm values, weights and coordinates are exact rationals; only display
/// columns ever touch floating point.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rat(long long p, long long q = 1) { return Rational(p, q); }

Rational abs_r(const Rational& r);

/// Parses "p/q" (or a bare integer "p"); q must be nonzero. The result is kept
/// in lowest terms with positive denominator.
Rational parse_rational(const std::string& text);

/// "p/q" in lowest terms, q > 0, always with the slash ("1" renders as "1/1").
std::string format_rational(const Rational& r);

/// Display-only float rendering, 12 significant digits.
std::string format_float(const Rational& r);

/// Display-only float rendering of sqrt(r), for squared-value norms.
std::string format_float_sqrt(const Rational& r);

/// Exact bracket lo <= sqrt(s) <= hi with hi - lo < width, by bisection.
/// Requires s >= 0 and width > 0.
void sqrt_interval(const Rational& s, const Rational& width, Rational& lo, Rational& hi);

/// FNV-1a over a byte string; used for stable config hashes in reports.
std::uint64_t fnv1a(const std::string& bytes);

}  // namespace tsir
