#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace credence {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "num/den", integer, or finite-decimal strings ("3/4", "2", "0.48",
/// ".48", "-1.5") into an exact rational. Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// "28/93" for non-integers, "1" for integers.
std::string fraction_string(const Rational& r);

enum class DecimalRounding { Truncate, HalfUp };

/// Fixed-point decimal string with exactly `places` fractional digits,
/// e.g. (28/93, 4, HalfUp) -> "0.3011". Half-up rounds away from zero.
std::string decimal_string(const Rational& r, int places,
                           DecimalRounding rounding = DecimalRounding::HalfUp);

/// Decimal string rounded to `digits` significant digits, trailing zeros
/// stripped: 1008/3348 at 6 digits -> "0.301075", 12/25 -> "0.48", 580 -> "580".
std::string significant_string(const Rational& r, int digits);

/// Compact table style used by the published tables: at most `places`
/// fractional digits, trailing zeros and a leading "0" stripped
/// (1/10 -> ".1", 12/25 -> ".48", 1 -> "1.0"). Values are truncated.
std::string published_style(const Rational& r, int places);

/// Rounds to `places` decimal places, half away from zero. Exact result.
Rational round_decimal(const Rational& r, int places);

/// Drops everything after `places` decimal places (toward zero). Exact result.
Rational truncate_decimal(const Rational& r, int places);

} // namespace credence
