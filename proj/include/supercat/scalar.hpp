// Copyright 2026 The Supercat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <charconv>
#include <concepts>
#include <string>
#include <string_view>
#include <system_error>

#include "supercat/error.hpp"

namespace supercat {

/// Arbitrary-precision rational used by the exact comparison mode.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Scalar types the library is instantiated for.
template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

template <class T>
inline constexpr bool is_exact_v = std::same_as<T, Rational>;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

template <Scalar T>
T from_double(double x) {
  if constexpr (is_exact_v<T>) {
    return Rational(x);
  } else {
    return x;
  }
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline BigInt pow10(long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

inline BigInt parse_digits(std::string_view s, std::string_view whole) {
  if (s.empty()) throw InputError("empty number in '" + std::string(whole) + "'");
  BigInt r = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw InputError("malformed number '" + std::string(whole) + "'");
    }
    r = r * 10 + (ch - '0');
  }
  return r;
}

// Decimal literal with optional sign, fraction and exponent, converted exactly.
inline Rational parse_decimal_exact(std::string_view s) {
  const std::string_view whole = s;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    long value = 0;
    auto [ptr, ec] = std::from_chars(exp_part.data(), exp_part.data() + exp_part.size(), value);
    if (ec != std::errc{} || ptr != exp_part.data() + exp_part.size() || exp_part.empty()) {
      throw InputError("malformed exponent in '" + std::string(whole) + "'");
    }
    exponent = exp_negative ? -value : value;
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) throw InputError("malformed number '" + std::string(whole) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    digits = std::string(s);
  }
  Rational r(parse_digits(digits, whole));
  if (exponent > 0) r *= Rational(pow10(exponent));
  if (exponent < 0) r /= Rational(pow10(-exponent));
  return negative ? Rational(-r) : r;
}

}  // namespace detail

/// Parses "p/q" or a decimal literal ("0.41", "1e-4") into an exact rational.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s.empty()) throw InputError("empty number");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = detail::parse_decimal_exact(detail::trim(s.substr(0, slash)));
    Rational den = detail::parse_decimal_exact(detail::trim(s.substr(slash + 1)));
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return detail::parse_decimal_exact(s);
}

/// Parses a number in either notation into a double.
inline double parse_double(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s.find('/') != std::string_view::npos) return to_double(parse_rational(s));
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw InputError("malformed number '" + std::string(text) + "'");
  }
  return value;
}

template <Scalar T>
T parse_scalar(std::string_view text) {
  if constexpr (is_exact_v<T>) {
    return parse_rational(text);
  } else {
    return parse_double(text);
  }
}

/// Shortest round-trip decimal form of a double.
inline std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

/// "p/q" (or "p" for integers).
inline std::string format_rational(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace supercat
