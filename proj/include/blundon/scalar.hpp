#ifndef BLUNDON_SCALAR_HPP
#define BLUNDON_SCALAR_HPP

#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

#include "blundon/error.hpp"

namespace blundon {

/// Exact field used by the rational backend.
using Rational = boost::multiprecision::cpp_rational;

template <class T>
concept FloatingScalar = std::floating_point<T>;

template <class T>
concept ExactScalar = std::same_as<T, Rational>;

template <class T>
concept Scalar = FloatingScalar<T> || ExactScalar<T>;

template <Scalar T>
double to_double(const T& v) {
  if constexpr (FloatingScalar<T>) {
    return static_cast<double>(v);
  } else {
    return v.template convert_to<double>();
  }
}

template <Scalar T>
T abs_of(const T& v) {
  return v < 0 ? T(-v) : v;
}

/// num/den as a T; exact for Rational.
template <Scalar T>
T ratio(std::int64_t num, std::int64_t den) {
  if constexpr (FloatingScalar<T>) {
    return static_cast<T>(num) / static_cast<T>(den);
  } else {
    return Rational(num, den);
  }
}

/// Default degeneracy threshold: a triangle with min(a+b-c, ...) below this
/// fraction of its perimeter is rejected.
template <Scalar T>
T degeneracy_tolerance() {
  return ratio<T>(1, 1'000'000'000'000);
}

template <Scalar T>
T int_pow(T base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base == 0) {
      throw GeometryError(ErrorKind::PointAtInfinity, "zero raised to a negative power");
    }
    base = T(1) / base;
    exponent = -exponent;
  }
  T result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

/// True when the value is an integer that fits the exponent range.
template <Scalar T>
bool is_integral_value(const T& v) {
  if constexpr (FloatingScalar<T>) {
    return std::isfinite(v) && std::trunc(v) == v && std::abs(v) < T(1 << 30);
  } else {
    return boost::multiprecision::denominator(v) == 1 && abs_of(v) < Rational(1 << 30);
  }
}

/// base^exponent for positive bases. Rational powers are only exact for
/// integral exponents, so those are the only ones accepted there.
template <Scalar T>
T pow_of(const T& base, const T& exponent) {
  if constexpr (FloatingScalar<T>) {
    return std::pow(base, exponent);
  } else {
    if (!is_integral_value(exponent)) {
      throw GeometryError(ErrorKind::InexactValue,
                          "non-integral exponent " + exponent.str() + " has no exact rational power");
    }
    const auto e = static_cast<std::int64_t>(boost::multiprecision::numerator(exponent));
    return int_pow(base, e);
  }
}

template <Scalar T>
bool is_finite_value(const T& v) {
  if constexpr (FloatingScalar<T>) {
    return std::isfinite(v);
  } else {
    return true;
  }
}

/// Is `sum` indistinguishable from zero given the magnitude of its terms?
/// Exact zero for rationals; a few ulps of the term magnitude for floats.
template <Scalar T>
bool is_zero_sum(const T& sum, const T& magnitude) {
  if constexpr (FloatingScalar<T>) {
    return std::abs(sum) <= 8 * std::numeric_limits<T>::epsilon() * magnitude;
  } else {
    return sum == 0;
  }
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace blundon

#endif  // BLUNDON_SCALAR_HPP
