#include "platform_market/rational.hpp"

#include <cctype>
#include <cmath>

#include "platform_market/errors.hpp"

namespace pmkt {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string s = raw;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.pop_back();
  if (s.empty()) fail("BadRational", "empty value string");

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s = s.substr(1);
  }

  Rational out;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      fail("BadRational", "cannot parse '" + raw + "'");
    mpz_class p(num), q(den);
    if (q == 0) fail("BadRational", "zero denominator in '" + raw + "'");
    out = Rational(p, q);
    out.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    if (!all_digits(whole) || !all_digits(frac))
      fail("BadRational", "cannot parse '" + raw + "'");
    mpz_class scale = 1;
    for (size_t k = 0; k < frac.size(); ++k) scale *= 10;
    mpz_class p = mpz_class(whole) * scale + mpz_class(frac);
    out = Rational(p, scale);
    out.canonicalize();
  } else {
    if (!all_digits(s)) fail("BadRational", "cannot parse '" + raw + "'");
    out = Rational(mpz_class(s));
  }
  if (neg) out = -out;
  return out;
}

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double rational_to_double(const Rational& q) { return q.get_d(); }

Rational rational_from_double(double x, unsigned long max_den) {
  if (!std::isfinite(x)) fail("BadRational", "non-finite double");
  bool neg = x < 0;
  if (neg) x = -x;
  // continued fractions: p/q convergents with q <= max_den
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  Rational best(0);
  for (int iter = 0; iter < 64; ++iter) {
    double fa = std::floor(r);
    if (fa > 1e18) break;
    mpz_class a(static_cast<unsigned long>(fa));
    mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > mpz_class(max_den)) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    best = Rational(p1, q1);
    best.canonicalize();
    double rem = r - fa;
    if (rem < 1e-15) break;
    r = 1.0 / rem;
  }
  if (q1 == 0) best = Rational(0);
  return neg ? Rational(-best) : best;
}

}  // namespace pmkt
