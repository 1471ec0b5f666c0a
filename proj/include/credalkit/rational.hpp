#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "credalkit/errors.hpp"

namespace credalkit {

/// Exact arbitrary-precision rational. All mass/belief algebra in the library
/// runs on this type; doubles appear only in box optimization and geometry.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Parses "p/q", integer, or plain decimal text ("0.25", ".5", "-3") exactly.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw ValidationError("invalid rational \"" + std::string(text) + "\"");
  };
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view s = text.substr(b, e - b);
  if (s.empty()) fail();

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view ns = s.substr(0, slash), ds = s.substr(slash + 1);
    if (ns.empty() || ds.empty() || ds.find('/') != std::string_view::npos) fail();
    try {
      BigInt num{std::string(ns)}, den{std::string(ds)};
      if (den == 0) fail();
      return Rational(num, den);
    } catch (const std::exception&) {
      fail();
    }
  }

  bool neg = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  std::string int_part, frac_part;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) int_part += s[i++];
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) frac_part += s[i++];
  }
  if (i != s.size() || (int_part.empty() && frac_part.empty())) fail();

  BigInt num = int_part.empty() ? BigInt(0) : BigInt(int_part);
  BigInt den = 1;
  for (char c : frac_part) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  Rational r(num, den);
  return neg ? Rational(-r) : r;
}

/// Canonical fraction text: "3/4", "-1/2", or a bare integer.
inline std::string to_fraction_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Exact decimal expansion when the reduced denominator is of the form
/// 2^a * 5^b; nullopt otherwise.
inline std::optional<std::string> terminating_decimal(const Rational& r) {
  BigInt num = numerator(r), den = denominator(r);
  bool neg = num < 0;
  if (neg) num = -num;
  unsigned twos = 0, fives = 0;
  BigInt d = den;
  while (d % 2 == 0) d /= 2, ++twos;
  while (d % 5 == 0) d /= 5, ++fives;
  if (d != 1) return std::nullopt;
  unsigned k = std::max(twos, fives);
  // scale so that scaled / 10^k == num / den
  BigInt pow10 = 1;
  for (unsigned i = 0; i < k; ++i) pow10 *= 10;
  BigInt scaled = num * pow10 / den;
  std::string digits = scaled.str();
  if (k == 0) return (neg ? "-" : "") + digits;
  if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
  digits.insert(digits.size() - k, ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return (neg ? "-" : "") + digits;
}

/// "0.25" when terminating, otherwise "p/q".
inline std::string decimal_string(const Rational& r) {
  if (auto d = terminating_decimal(r)) return *d;
  return to_fraction_string(r);
}

/// Table style used by the golden reports: no leading zero (".25", "-.5").
inline std::string table_number(const Rational& r) {
  std::string s = decimal_string(r);
  if (s.rfind("0.", 0) == 0) return s.substr(1);
  if (s.rfind("-0.", 0) == 0) return "-" + s.substr(2);
  return s;
}

/// Nearest rational with denominator <= max_denominator, if one lies within
/// tol of x. Smallest qualifying denominator wins.
inline std::optional<Rational> snap_to_rational(double x, unsigned max_denominator,
                                                double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  for (unsigned q = 1; q <= max_denominator; ++q) {
    double scaled = x * q;
    if (std::abs(scaled) > 9e15) break;
    long long p = std::llround(scaled);
    if (std::abs(x - static_cast<double>(p) / q) <= tol) return Rational(p, q);
  }
  return std::nullopt;
}

/// Up to 9 significant digits, shortest form.
inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

}  // namespace credalkit
