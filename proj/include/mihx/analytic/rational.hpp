#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace mihx::analytic {

using Rational = boost::rational<std::int64_t>;

/// Exact value of a decimal literal such as "0.5", "1.5", "-2", "3/4".
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

/// Integer when the denominator is 1, otherwise decimal with `digits` places.
std::string format_rational(const Rational& r, int digits = 6);

}  // namespace mihx::analytic
