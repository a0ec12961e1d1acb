#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "qhn/error.hpp"

namespace qhn {

using Integer = boost::multiprecision::cpp_int;

// cpp_rational keeps values in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  return Rational(num, den);
}

inline Integer numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

inline Integer denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline int sign_of(const Rational& r) { return r.sign(); }

/// "n/d", or "n" when the denominator is one.
inline std::string to_string(const Rational& r) {
  const Integer den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

inline std::string to_string(const std::vector<Rational>& values,
                             std::string_view sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += to_string(values[i]);
  }
  return out;
}

namespace detail {

inline Integer parse_integer(std::string_view text, std::string_view whole) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
    }
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s);
}

}  // namespace detail

/// Parses "n", "-n" or "p/q".
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(detail::parse_integer(text, text));
  }
  const Integer num = detail::parse_integer(text.substr(0, slash), text);
  const Integer den = detail::parse_integer(text.substr(slash + 1), text);
  return make_rational(num, den);
}

}  // namespace qhn
