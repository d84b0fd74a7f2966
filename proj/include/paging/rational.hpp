#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace paging {

// Exact arithmetic for expectations and adversary probabilities. All
// probability comparisons in the library are exact; floating point only
// appears in Monte Carlo aggregation and report output.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// k-th harmonic number 1 + 1/2 + ... + 1/k as an exact rational.
Rational harmonic(int k);

/// floor(num/den) for a nonnegative rational, as a BigInt.
BigInt floor_div(const Rational& r);

/// Formats as "p/q" ("p" when q == 1).
std::string to_fraction_string(const Rational& r);

/// Parses "p/q", plain integers, and decimal literals ("1.5" -> 3/2).
Rational parse_rational(const std::string& text);

/// Nearest-double approximation, for report columns only.
double to_double(const Rational& r);

} // namespace paging
