// SPDX-License-Identifier: Apache-2.0
#include "mysticum/scalar.hpp"

#include <stdexcept>

namespace mysticum {

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  // gmp prints integers without the "/1" suffix already.
  return value.str();
}

std::string to_string(const Extended& value) {
  return value.is_infinite() ? std::string("inf") : to_string(value.value());
}

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' ||
      den.front() == '+') {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  const Integer n{std::string(num.front() == '+' ? num.substr(1) : num)};
  const Integer d{std::string(den)};
  if (d == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  return Rational(n, d);
}

Extended parse_extended(std::string_view text) {
  if (text == "inf" || text == "infinity") return Extended::infinity();
  return Extended(parse_rational(text));
}

std::ostream& operator<<(std::ostream& os, const Extended& value) {
  return os << to_string(value);
}

}  // namespace mysticum
