#include "tap/rational.hpp"

#include <cctype>

#include "tap/error.hpp"

namespace tap {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational '" + text + "'");

  Rational result;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
    }
    mpz_class d(den);
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    result = Rational(mpz_class(num), d);
    result.canonicalize();
  } else if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) {
      throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
    }
    mpz_class den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    result = Rational(mpz_class(whole + frac), den);
    result.canonicalize();
  } else {
    if (!all_digits(s)) throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
    result = Rational(mpz_class(s));
  }
  if (negative) result = -result;
  return result;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace tap
