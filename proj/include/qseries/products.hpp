#pragma once

#include <initializer_list>
#include <map>

#include "qseries/series.hpp"

namespace qseries {

/// A q-Pochhammer factor sequence (1 - alpha * sign^j * q^(start + j*step)),
/// j = 0, 1, 2, ...
///
/// (a q^e; q^d)_n is {a, e, +1, d}; the signed base of (-q;-q)_n is
/// {-1, 1, -1, 1}. alpha = 0 makes every product equal to 1.
struct PochSpec {
  Rational alpha{1};
  long start = 0;
  int sign = 1;
  long step = 1;

  /// Coefficient alpha * sign^j of factor j.
  Rational factor_coef(long j) const;
  long factor_exp(long j) const { return start + j * step; }
};

/// Product of the first n factors, truncated to order. (.)_0 = 1.
QSeries poch_finite(const PochSpec& spec, long n, long order);

/// Infinite product truncated to order: factor j is included iff
/// start + j*step < order, later ones are 1 mod q^order.
QSeries poch_inf(const PochSpec& spec, long order);

/// f * (spec)_inf^power; negative powers divide factor by factor.
QSeries apply_poch_inf(QSeries f, const PochSpec& spec, int power);
/// f * (spec)_{n}^power.
QSeries apply_poch_finite(QSeries f, const PochSpec& spec, long n, int power);

/// prod(num)_inf / prod(den)_inf to order.
QSeries poch_ratio(std::initializer_list<PochSpec> num, std::initializer_list<PochSpec> den,
                   long order);

/// (-zq, -q/z, q^2; q^2)_inf.
QSeries triple_product(const Rational& z, long order);
/// sum over n in Z with n^2 < order of z^n q^(n^2).
QSeries theta_sum(const Rational& z, long order);

/// sum_{n>=0} [q^(mn+a)/(1-q^(mn+a)) - q^(mn+b)/(1-q^(mn+b))].
QSeries lambert_pair(long m, long a, long b, long order);

/// sum over (m, n) in Z^2 of q^(m^2 + mn + n^2).
QSeries quadform_theta(long order);

/// prod_delta eta(delta z)^r_delta, keyed by delta.
struct EtaQuotientSpec {
  std::map<long, long> exponents;

  /// sum(delta * r_delta) / 24; throws SeriesError("non-integral eta prefactor")
  /// unless the sum is divisible by 24.
  long prefactor_exponent() const;
};

/// q^(sum delta r / 24) * prod_delta (q^delta; q^delta)_inf^r_delta.
QSeries eta_quotient(const EtaQuotientSpec& spec, long order);

}  // namespace qseries
