#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace egini {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational arithmetic. Stored in lowest terms, denominator > 0,
// no floating point anywhere on computation paths.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or a bare integer string. Floats ("0.5", "1e3"), empty
// strings, whitespace and zero denominators are rejected.
std::optional<Rational> parse_rational(const std::string& text);

// Always emits "p/q" (so zero is "0/1"); lowest terms.
std::string format_rational(const Rational& r);

// Display-only decimal approximation, truncated to `digits` fractional
// digits. Exact values travel as p/q; this is never read back.
std::string decimal_approx(const Rational& r, int digits = 12);

inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

}  // namespace egini
