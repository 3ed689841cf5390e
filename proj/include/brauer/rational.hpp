#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "brauer/half_int.hpp"

namespace brauer {

/// Exact reduced fraction with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Thrown for malformed user input (partitions, deltas, indices).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Rational to_rational(HalfInt h) { return Rational(h.twice(), 2); }

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

inline std::optional<std::int64_t> to_int64(const Rational& r) {
  if (!is_integral(r)) return std::nullopt;
  const BigInt& n = numerator(r);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  return static_cast<std::int64_t>(n);
}

/// Some r with denominator 1 or 2, as a HalfInt.
inline std::optional<HalfInt> to_half_int(const Rational& r) {
  const BigInt& den = denominator(r);
  if (den != 1 && den != 2) return std::nullopt;
  auto twice = to_int64(r * 2);
  if (!twice) return std::nullopt;
  return HalfInt::from_twice(*twice);
}

inline std::string format_rational(const Rational& r) { return r.str(); }

/// Parses "-2", "3", "7/2", "-1/2". Whitespace around the text is ignored.
inline Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) -> BigInt {
    s = trim(s);
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() || digits.size() > 30)
      throw ParseError("malformed rational '" + std::string(text) + "'");
    for (char c : digits)
      if (c < '0' || c > '9') throw ParseError("malformed rational '" + std::string(text) + "'");
    return BigInt(std::string(s.front() == '+' ? s.substr(1) : s));
  };
  std::string_view body = trim(text);
  auto slash = body.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(body));
  BigInt num = parse_int(body.substr(0, slash));
  BigInt den = parse_int(body.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

/// Parses a half-integer written as an integer or as "k/2".
inline HalfInt parse_half_int(std::string_view text) {
  auto h = to_half_int(parse_rational(text));
  if (!h) throw ParseError("'" + std::string(text) + "' is not a half-integer");
  return *h;
}

}  // namespace brauer
