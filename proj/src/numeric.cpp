#include "orbi/numeric.hpp"

#include <cctype>

namespace orbi {

Rational make_rational(Integer numerator, Integer denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(std::move(numerator), std::move(denominator));
}

std::string rational_to_string(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += "/";
    out += denominator(value).str();
  }
  return out;
}

Rational parse_rational_literal(std::string_view text) {
  std::size_t pos = 0;
  auto parse_int = [&](bool allow_sign) -> Integer {
    std::size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_start)
      throw std::invalid_argument("malformed rational literal: " + std::string(text));
    return Integer(std::string(text.substr(start, pos - start)));
  };
  Integer num = parse_int(true);
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = parse_int(false);
  }
  if (pos != text.size())
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  return make_rational(std::move(num), std::move(den));
}

std::int64_t ceil_div(std::int64_t v, std::int64_t m) {
  if (v < 0 || m < 1) throw std::invalid_argument("ceil_div requires v >= 0, m >= 1");
  return (v + m - 1) / m;
}

}  // namespace orbi
