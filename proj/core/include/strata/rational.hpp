#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace strata {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p" or "p/q" (optional leading sign); throws InputFormat.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& r);

}  // namespace strata
