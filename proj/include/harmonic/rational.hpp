#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "harmonic/errors.hpp"

namespace harmonic {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored reduced with positive denominator;
/// arithmetic never rounds.
using Rational = boost::multiprecision::cpp_rational;

/// num/den with the sign moved to the numerator. Throws on zero denominator.
inline Rational make_rational(Int num, Int den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

/// "p/q" for proper fractions, plain "p" for integers.
inline std::string format_rational(const Rational& x) { return x.str(); }

inline double approx(const Rational& x) { return x.convert_to<double>(); }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

/// Parses an exact rational token: integer ("-3"), fraction ("7/2") or
/// decimal ("0.25", converted exactly). Throws Error(errc::parse) otherwise.
inline Rational parse_rational(std::string_view token) {
  const std::string_view original = token;
  auto bad = [&]() -> Rational {
    fail(errc::parse, "invalid rational token '" + std::string(original) + "'");
  };

  bool negative = false;
  if (!token.empty() && (token.front() == '+' || token.front() == '-')) {
    negative = token.front() == '-';
    token.remove_prefix(1);
  }
  if (token.empty()) return bad();

  Rational value;
  if (auto slash = token.find('/'); slash != std::string_view::npos) {
    std::string_view num = token.substr(0, slash);
    std::string_view den = token.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) return bad();
    Int d{std::string(den)};
    if (d == 0) return bad();
    value = Rational(Int(std::string(num)), d);
  } else if (auto dot = token.find('.'); dot != std::string_view::npos) {
    std::string_view whole = token.substr(0, dot);
    std::string_view frac = token.substr(dot + 1);
    if (whole.empty() && frac.empty()) return bad();
    if (!whole.empty() && !detail::all_digits(whole)) return bad();
    if (!frac.empty() && !detail::all_digits(frac)) return bad();
    Int scaled = whole.empty() ? Int(0) : Int(std::string(whole));
    Int scale = 1;
    for (char c : frac) {
      scaled = scaled * 10 + (c - '0');
      scale *= 10;
    }
    value = Rational(scaled, scale);
  } else {
    if (!detail::all_digits(token)) return bad();
    value = Rational(Int(std::string(token)));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace harmonic
