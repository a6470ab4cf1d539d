#pragma once

#include <gmpxx.h>

#include <string>

namespace tap {

// Exact arithmetic everywhere; no floating point touches solver state.
using Rational = mpq_class;

// Accepts "3", "-3", "5/2" and decimal strings like "1.25".
Rational parse_rational(const std::string& text);

// Canonical rendering: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

// mpq_class(num, den) does not reduce; this does.
inline Rational ratio(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace tap
