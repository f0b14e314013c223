#include "repbox/rational.hpp"

#include <regex>

#include "repbox/errors.hpp"

namespace repbox {

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) throw DomainError("malformed rational '" + text + "'");
  boost::multiprecision::mpz_int num(match[1].str());
  boost::multiprecision::mpz_int den(match[2].matched ? match[2].str() : std::string("1"));
  if (den == 0) throw DomainError("zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace repbox
