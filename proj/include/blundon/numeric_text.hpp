#ifndef BLUNDON_NUMERIC_TEXT_HPP
#define BLUNDON_NUMERIC_TEXT_HPP

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "blundon/error.hpp"
#include "blundon/scalar.hpp"

namespace blundon {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

/// Exact value of a plain decimal literal: [+-]digits[.digits][(e|E)[+-]digits].
inline Rational parse_decimal_exact(std::string_view text) {
  const std::string original(text);
  auto fail = [&]() -> Rational {
    throw GeometryError(ErrorKind::InexactValue,
                        "'" + original + "' is not an exactly representable decimal");
  };
  if (text.empty()) return fail();
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string digits;
  int fraction_digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  std::size_t i = 0;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      any_digit = true;
      if (seen_point) ++fraction_digits;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) return fail();
  long exponent = 0;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') return fail();
    std::string_view rest = text.substr(i + 1);
    if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
    if (rest.empty()) return fail();
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), exponent);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || std::labs(exponent) > 4000) {
      return fail();
    }
  }
  boost::multiprecision::cpp_int mantissa(digits);
  const long scale = exponent - fraction_digits;
  boost::multiprecision::cpp_int ten_power = boost::multiprecision::pow(
      boost::multiprecision::cpp_int(10), static_cast<unsigned>(std::labs(scale)));
  Rational value = scale >= 0 ? Rational(mantissa * ten_power) : Rational(mantissa, ten_power);
  return negative ? Rational(-value) : value;
}

}  // namespace detail

/// Parses a real number. Floating scalars accept anything strtod does (but
/// not nan/inf); the rational scalar accepts plain decimals and p/q
/// fractions of decimals, and rejects the rest with InexactValue.
template <Scalar T>
T parse_number(std::string_view text) {
  text = detail::trim(text);
  if constexpr (FloatingScalar<T>) {
    const std::string buffer(text);
    char* end = nullptr;
    const long double v = std::strtold(buffer.c_str(), &end);
    if (buffer.empty() || end != buffer.c_str() + buffer.size() || !std::isfinite(v)) {
      throw GeometryError(ErrorKind::InvalidCenterSpec, "'" + buffer + "' is not a finite number");
    }
    return static_cast<T>(v);
  } else {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return detail::parse_decimal_exact(text);
    const Rational num = detail::parse_decimal_exact(detail::trim(text.substr(0, slash)));
    const Rational den = detail::parse_decimal_exact(detail::trim(text.substr(slash + 1)));
    if (den == 0) throw GeometryError(ErrorKind::InexactValue, "zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

/// Exactly `n` comma-separated numbers.
template <Scalar T>
std::vector<T> parse_number_list(std::string_view text, std::size_t n) {
  const auto parts = split(text, ',');
  if (parts.size() != n) {
    throw GeometryError(ErrorKind::InvalidCenterSpec, "expected " + std::to_string(n) +
                                                          " comma-separated numbers in '" +
                                                          std::string(text) + "'");
  }
  std::vector<T> values;
  values.reserve(n);
  for (auto part : parts) values.push_back(parse_number<T>(part));
  return values;
}

/// 17 significant digits, as used by the human and CSV outputs.
inline std::string format_g17(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace blundon

#endif  // BLUNDON_NUMERIC_TEXT_HPP
