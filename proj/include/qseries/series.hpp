#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qseries/rational.hpp"

namespace qseries {

/// Default truncation order used by the verification front ends.
inline constexpr long kDefaultOrder = 200;

/// Truncated Laurent series in q with exact rational coefficients.
///
/// Stores the coefficients of q^min_exp .. q^(order-1). Everything at or above
/// q^order is unknown, and every operation propagates the guaranteed order so
/// that no result ever claims a coefficient it cannot vouch for. Values are
/// immutable once built.
class QSeries {
 public:
  /// Requires order > min_exp and coeffs.size() == order - min_exp.
  QSeries(long min_exp, std::vector<Rational> coeffs, long order);

  static QSeries zero(long order, long min_exp = 0);
  static QSeries constant(const Rational& c, long order);
  /// c * q^e + O(q^order); requires order > e.
  static QSeries monomial(const Rational& c, long e, long order);

  long min_exp() const { return min_exp_; }
  long order() const { return order_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Coefficient of q^k. Zero below min_exp; throws SeriesError for k >= order.
  Rational coeff(long k) const;

  /// Exponent of the first nonzero stored coefficient, if any.
  std::optional<long> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  /// Same series with order lowered to min(order, new_order); requires
  /// new_order > min_exp.
  QSeries truncate(long new_order) const;

  /// Prefix equality up to min(order(), other.order()).
  bool same_prefix(const QSeries& other) const;

 private:
  long min_exp_;
  long order_;
  std::vector<Rational> coeffs_;

  friend QSeries mul_binomial(QSeries f, const Rational& beta, long k);
  friend QSeries div_binomial(QSeries f, const Rational& beta, long k);
  friend QSeries scale_monomial(QSeries f, const Rational& alpha, long e);
  friend QSeries operator+(const QSeries& f, const QSeries& g);
};

QSeries operator+(const QSeries& f, const QSeries& g);
QSeries operator-(const QSeries& f);
QSeries operator-(const QSeries& f, const QSeries& g);
/// Cauchy product; order = min(order(f) + min_exp(g), order(g) + min_exp(f)).
QSeries operator*(const QSeries& f, const QSeries& g);
QSeries operator*(const Rational& c, const QSeries& f);

inline QSeries add(const QSeries& f, const QSeries& g) { return f + g; }
inline QSeries mul(const QSeries& f, const QSeries& g) { return f * g; }

/// alpha * q^e * f. alpha = 0 is rejected because the result would carry no
/// information about its own precision.
QSeries scale_monomial(QSeries f, const Rational& alpha, long e);

/// g with f * g = 1 up to the guaranteed order. Leading zeros are skipped;
/// if the leading nonzero coefficient sits at q^m the result has
/// min_exp = -m and order = order(f) - 2m.
QSeries invert(const QSeries& f);

/// f(sign * q^k) for sign in {+1, -1} and k >= 1.
QSeries compose_power(const QSeries& f, int sign, long k);

/// f * (1 - beta q^k), k >= 0. Exact, keeps order(f).
QSeries mul_binomial(QSeries f, const Rational& beta, long k);
/// f / (1 - beta q^k), k >= 0. Exact, keeps order(f). Throws InvertError
/// when k = 0 and beta = 1.
QSeries div_binomial(QSeries f, const Rational& beta, long k);

struct Mismatch {
  long exponent;
  Rational lhs;
  Rational rhs;
};

struct Comparison {
  bool pass = true;
  long requested_order = 0;
  long effective_order = 0;
  /// True when the requested order exceeded what both inputs guarantee.
  bool clamped = false;
  std::optional<Mismatch> first_mismatch;
};

/// Exact comparison of every coefficient with exponent below
/// min(order, order(f), order(g)).
Comparison compare(const QSeries& f, const QSeries& g, long order);

namespace detail {
/// Reference Cauchy product done directly in rationals; kept for testing the
/// integer-lifted kernel behind operator*.
QSeries mul_reference(const QSeries& f, const QSeries& g);
}  // namespace detail

}  // namespace qseries
