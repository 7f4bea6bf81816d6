#ifndef PMX_NUMERIC_HPP_
#define PMX_NUMERIC_HPP_

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace pmx {

// Exact rational backed by GMP. Expression templates are off so values
// behave like ordinary value types inside generic code.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

enum class Arithmetic { kRational, kFloat };

std::string_view to_string(Arithmetic mode);

// Absolute tolerance for float-mode comparisons. Ignored by exact arithmetic.
struct Tolerance {
  double eps = 1e-9;
};

template <class Num>
struct NumTraits;

template <>
struct NumTraits<Rational> {
  static constexpr Arithmetic kMode = Arithmetic::kRational;
  static constexpr bool kExact = true;
};

template <>
struct NumTraits<double> {
  static constexpr Arithmetic kMode = Arithmetic::kFloat;
  static constexpr bool kExact = false;
};

// Comparisons. Float mode is inclusive-biased: a >= b holds when a >= b - eps,
// so degenerate ties count as satisfied weak inequalities.
inline bool approx_ge(const Rational& a, const Rational& b, Tolerance = {}) { return a >= b; }
inline bool approx_ge(double a, double b, Tolerance tol = {}) { return a >= b - tol.eps; }

template <class Num>
bool approx_le(const Num& a, const Num& b, Tolerance tol = {}) {
  return approx_ge(b, a, tol);
}

template <class Num>
bool approx_eq(const Num& a, const Num& b, Tolerance tol = {}) {
  return approx_ge(a, b, tol) && approx_ge(b, a, tol);
}

// Strict comparisons are the negation of the inclusive ones.
template <class Num>
bool definitely_lt(const Num& a, const Num& b, Tolerance tol = {}) {
  return !approx_ge(a, b, tol);
}

template <class Num>
bool definitely_gt(const Num& a, const Num& b, Tolerance tol = {}) {
  return !approx_ge(b, a, tol);
}

inline bool is_zero(const Rational& a, Tolerance = {}) { return a == 0; }
inline bool is_zero(double a, Tolerance tol = {}) { return std::fabs(a) <= tol.eps; }

// Parses "12", "-0.25", "1.5e3" or "15/4" exactly.
// Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

// Canonical text: a finite decimal when the denominator has only factors 2
// and 5, otherwise "p/q".
std::string format_decimal(const Rational& value);

// "p/q" or an integer; what the CLI prints in rational mode.
std::string format_fraction(const Rational& value);
std::string format_number(double value);

inline std::string format_value(const Rational& value) { return format_fraction(value); }
inline std::string format_value(double value) { return format_number(value); }

template <class Num>
Num from_rational(const Rational& value);

template <>
inline Rational from_rational<Rational>(const Rational& value) {
  return value;
}

template <>
inline double from_rational<double>(const Rational& value) {
  return value.convert_to<double>();
}

inline double to_double(const Rational& value) { return value.convert_to<double>(); }
inline double to_double(double value) { return value; }

}  // namespace pmx

#endif  // PMX_NUMERIC_HPP_
