#include "rigidline/rational.hpp"

#include <cctype>

#include "rigidline/error.hpp"

namespace rigidline {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt pow10(std::size_t k) {
  BigInt p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= 10;
  return p;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = (s[0] == '-');
    s.erase(0, 1);
  }
  if (s.empty()) throw Error(Errc::ParseError, "empty numeric string '" + text + "'");

  Rational value;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw Error(Errc::ParseError, "bad fraction '" + text + "'");
    BigInt d(den);
    if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + text + "'");
    value = Rational(BigInt(num), d);
  } else if (dot != std::string::npos) {
    std::string intpart = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (intpart.empty() && frac.empty())
      throw Error(Errc::ParseError, "bad decimal '" + text + "'");
    if (intpart.empty()) intpart = "0";
    if (frac.empty()) frac = "0";
    if (!all_digits(intpart) || !all_digits(frac))
      throw Error(Errc::ParseError, "bad decimal '" + text + "'");
    BigInt scale = pow10(frac.size());
    BigInt total = BigInt(intpart) * scale + (frac.empty() ? BigInt(0) : BigInt(frac));
    value = Rational(total, scale);
  } else {
    if (!all_digits(s)) throw Error(Errc::ParseError, "bad integer '" + text + "'");
    value = Rational(BigInt(s));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

bool rational_sqrt(const Rational& value, Rational& root) {
  if (value < 0) return false;
  if (value == 0) {
    root = 0;
    return true;
  }
  BigInt num = numerator(value), den = denominator(value);
  BigInt rn = sqrt(num), rd = sqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  root = Rational(rn, rd);
  return true;
}

}  // namespace rigidline
