#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace lexeu {

/// Exact rational scalar used for every probability and utility value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/**
 * Parse "p/q" or an integer literal. Rejects zero denominators and stray
 * characters; the result is always in lowest terms.
 */
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms with q > 0, or "p" when q == 1.
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

inline int sign(const Rational& value) {
    return value.sign();
}

}  // namespace lexeu
