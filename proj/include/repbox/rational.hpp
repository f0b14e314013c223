#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace repbox {

using Rational = boost::multiprecision::mpq_rational;
using Point = std::vector<Rational>;

/// Parses "p/q" or "p". Throws DomainError on malformed text or a zero denominator.
[[nodiscard]] Rational parse_rational(const std::string& text);

/// "p/q", or "p" when the denominator is 1.
[[nodiscard]] std::string format_rational(const Rational& r);

}  // namespace repbox
