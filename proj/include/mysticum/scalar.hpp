// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace mysticum {

// Expression templates are disabled so that Eigen sees plain value types.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// A rational number or the single point at infinity of the projective line.
class Extended {
 public:
  Extended() = default;  // zero
  Extended(Rational value) : value_(std::move(value)) {}  // NOLINT
  Extended(long value) : value_(Rational(value)) {}       // NOLINT

  static Extended infinity() {
    Extended e;
    e.value_.reset();
    return e;
  }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  /// Precondition: is_finite().
  const Rational& value() const { return *value_; }

  friend bool operator==(const Extended&, const Extended&) = default;

 private:
  std::optional<Rational> value_ = Rational(0);
};

/// Lossless decimal-free text: "inf", "0", "-3", "11/26".
std::string to_string(const Rational& value);
std::string to_string(const Extended& value);
std::string to_string(const Integer& value);

/// Parses the text produced by to_string. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
Extended parse_extended(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Extended& value);

}  // namespace mysticum
