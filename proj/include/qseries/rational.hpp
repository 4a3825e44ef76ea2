#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qseries {

/// Exact rational in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws SeriesError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" alone when q = 1.
std::string to_string(const Rational& value);

/// (-1)^k for any integer k.
inline int sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

/// value^k for k >= 0; 0^0 = 1.
Rational power(const Rational& value, long k);

bool is_integer(const Rational& value);

/// Numerator as a long; the value must be an integer that fits.
long to_long(const Rational& value);

/// A monomial coef * q^exp with a rational exponent. Parameters of the
/// transformation identities are values of this type: plain rationals have
/// exp = 0, and values such as q or -q^(1/2) carry a q-power.
struct Monomial {
  Rational coef;
  Rational exp;

  Monomial() : coef(0), exp(0) {}
  Monomial(const Rational& c) : coef(c), exp(0) {}  // NOLINT(google-explicit-constructor)
  Monomial(int c) : coef(c), exp(0) {}              // NOLINT(google-explicit-constructor)
  Monomial(const Rational& c, const Rational& e) : coef(c), exp(e) {}

  bool is_zero() const { return coef == 0; }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.coef == b.coef && (a.coef == 0 || a.exp == b.exp);
  }
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// Division by a zero monomial throws ParameterError.
Monomial operator/(const Monomial& a, const Monomial& b);
Monomial operator-(const Monomial& a);
Monomial pow(const Monomial& m, long k);

/// Accepts a rational ("3", "-1/2") or a q-monomial such as "q", "-q",
/// "2q", "1/7*q", "3*q^2", "-q^1/2" or "q^(1/2)".
Monomial parse_monomial(std::string_view text);
std::string to_string(const Monomial& m);

}  // namespace qseries
