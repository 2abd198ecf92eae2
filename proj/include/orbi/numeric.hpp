#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orbi {

// Arbitrary-precision integers and rationals. Rational values are kept
// normalized by the backend: lowest terms, denominator >= 1, zero is 0/1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Rational from numerator/denominator. Throws std::invalid_argument on a
/// zero denominator.
Rational make_rational(Integer numerator, Integer denominator);

/// Renders "3", "-3", "3/2", "-3/2". Inverse of parse_rational_literal.
std::string rational_to_string(const Rational& value);

/// Accepts an optional sign, an integer and an optional "/denominator".
Rational parse_rational_literal(std::string_view text);

/// ceil(v / m) for v >= 0, m >= 1.
std::int64_t ceil_div(std::int64_t v, std::int64_t m);

/// An integer extended with +infinity; carries orders of vanishing and
/// divisor multiplicities.
class ExtendedInt {
 public:
  ExtendedInt() = default;
  ExtendedInt(std::int64_t value) : value_(value) {}

  static ExtendedInt infinity() {
    ExtendedInt e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }

  std::int64_t value() const {
    if (infinite_) throw std::logic_error("ExtendedInt: value() on infinity");
    return value_;
  }

  friend bool operator==(const ExtendedInt& a, const ExtendedInt& b) {
    if (a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtendedInt& a, const ExtendedInt& b) { return !(a == b); }
  friend bool operator<(const ExtendedInt& a, const ExtendedInt& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const ExtendedInt& a, const ExtendedInt& b) { return b < a; }
  friend bool operator<=(const ExtendedInt& a, const ExtendedInt& b) { return !(b < a); }
  friend bool operator>=(const ExtendedInt& a, const ExtendedInt& b) { return !(a < b); }

  ExtendedInt operator+(const ExtendedInt& other) const {
    if (infinite_ || other.infinite_) return infinity();
    return ExtendedInt(value_ + other.value_);
  }

  std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

}  // namespace orbi
