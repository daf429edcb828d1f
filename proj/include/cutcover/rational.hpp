#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cutcover {

/// Exact arbitrary-precision rational used for capacities, costs, duals.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q", "p" or "-p/q". Throws ParseError on malformed text or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form (reduced, denominator always present).
std::string format_rational(const Rational& r);

/// Nearest double, for human-facing summaries only.
double to_double(const Rational& r);

}  // namespace cutcover
