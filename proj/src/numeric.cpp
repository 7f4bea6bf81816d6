#include "pmx/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace pmx {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

std::string_view to_string(Arithmetic mode) {
  return mode == Arithmetic::kRational ? "rational" : "float";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer pow10(unsigned exponent) {
  Integer result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= 10;
  return result;
}

Rational parse_decimal(std::string_view text, std::string_view original) {
  auto fail = [&] {
    throw std::invalid_argument("not a decimal number: '" + std::string(original) + "'");
  };
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = text.substr(e + 1);
    text = text.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) fail();
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) fail();
    if (!whole.empty() && !all_digits(whole)) fail();
    if (!frac.empty() && !all_digits(frac)) fail();
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(text)) fail();
    digits = std::string(text);
  }
  if (digits.empty()) fail();
  // A leading 0 would make GMP read the digits as octal.
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  Integer mantissa(digits);
  if (negative) mantissa = -mantissa;
  if (exponent >= 0) return Rational(mantissa * pow10(static_cast<unsigned>(exponent)));
  return Rational(mantissa, pow10(static_cast<unsigned>(-exponent)));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  if (auto slash = trimmed.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(trimmed.substr(0, slash), text);
    Rational den = parse_decimal(trimmed.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(trimmed, text);
}

std::string format_fraction(const Rational& value) { return value.str(); }

std::string format_decimal(const Rational& value) {
  Integer den = boost::multiprecision::denominator(value);
  unsigned twos = 0;
  unsigned fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return value.str();
  unsigned places = std::max(twos, fives);
  if (places == 0) return value.str();
  Integer scaled = boost::multiprecision::numerator(value) *
                   pow10(places) / boost::multiprecision::denominator(value);
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

std::string format_number(double value) {
  if (value == 0.0) return "0";  // avoids "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

}  // namespace pmx
