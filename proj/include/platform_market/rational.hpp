#pragma once

#include <gmpxx.h>
#include <string>

namespace pmkt {

// All market quantities are exact rationals. mpq_class keeps values
// canonical (reduced, positive denominator) through arithmetic; the
// helpers below add the string formats used by market files: "p/q",
// plain integers, and decimal literals like "3.05".
using Rational = mpq_class;

// Parses "p/q", "p", or a decimal literal ("3.05" -> 61/20).
// Throws Error("BadRational") on anything else, including q = 0.
Rational parse_rational(const std::string& s);

// "p" when the denominator is 1, "p/q" otherwise.
std::string rational_str(const Rational& q);

double rational_to_double(const Rational& q);

// Best rational approximation with denominator <= max_den
// (continued-fraction expansion). Used to lift solver floats back
// into exact arithmetic before verification.
Rational rational_from_double(double x, unsigned long max_den);

inline Rational rat(long n) { return Rational(n); }
inline Rational rat(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace pmkt
