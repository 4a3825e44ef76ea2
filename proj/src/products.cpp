#include "qseries/products.hpp"

#include <cmath>
#include <string>

#include "qseries/errors.hpp"

namespace qseries {

namespace {

void check_spec(const PochSpec& spec) {
  if (spec.step <= 0) throw SeriesError("Pochhammer base step must be >= 1");
  if (spec.start < 0) throw SeriesError("Pochhammer start exponent must be >= 0");
  if (spec.sign != 1 && spec.sign != -1) throw SeriesError("Pochhammer base sign must be +1 or -1");
}

}  // namespace

Rational PochSpec::factor_coef(long j) const {
  return (sign == -1 && sign_power(j) == -1) ? Rational(-alpha) : alpha;
}

QSeries apply_poch_finite(QSeries f, const PochSpec& spec, long n, int power) {
  check_spec(spec);
  if (n < 0) throw SeriesError("Pochhammer length must be >= 0");
  if (spec.alpha == 0 || power == 0) return f;
  // Factors at or beyond the relative precision of f are 1.
  long horizon = f.order() - f.min_exp();
  for (long j = 0; j < n; ++j) {
    long e = spec.factor_exp(j);
    if (e >= horizon) break;
    Rational c = spec.factor_coef(j);
    for (int p = 0; p < std::abs(power); ++p) {
      f = power > 0 ? mul_binomial(std::move(f), c, e) : div_binomial(std::move(f), c, e);
    }
  }
  return f;
}

QSeries apply_poch_inf(QSeries f, const PochSpec& spec, int power) {
  check_spec(spec);
  long horizon = f.order() - f.min_exp();
  long n = horizon <= spec.start ? 0 : (horizon - spec.start + spec.step - 1) / spec.step;
  if (spec.start == 0 && n == 0) n = 1;
  return apply_poch_finite(std::move(f), spec, n, power);
}

QSeries poch_finite(const PochSpec& spec, long n, long order) {
  return apply_poch_finite(QSeries::constant(1, order), spec, n, 1);
}

QSeries poch_inf(const PochSpec& spec, long order) {
  return apply_poch_inf(QSeries::constant(1, order), spec, 1);
}

QSeries poch_ratio(std::initializer_list<PochSpec> num, std::initializer_list<PochSpec> den,
                   long order) {
  QSeries out = QSeries::constant(1, order);
  for (const auto& s : num) out = apply_poch_inf(std::move(out), s, 1);
  for (const auto& s : den) out = apply_poch_inf(std::move(out), s, -1);
  return out;
}

QSeries triple_product(const Rational& z, long order) {
  if (z == 0) throw SeriesError("triple_product: z must be nonzero");
  return poch_ratio({PochSpec{-z, 1, 1, 2}, PochSpec{-1 / z, 1, 1, 2}, PochSpec{1, 2, 1, 2}}, {},
                    order);
}

QSeries theta_sum(const Rational& z, long order) {
  if (z == 0) throw SeriesError("theta_sum: z must be nonzero");
  std::vector<Rational> c(static_cast<size_t>(std::max(order, 1L)));
  Rational zinv = 1 / z;
  for (long n = 0; n * n < order; ++n) {
    c[static_cast<size_t>(n * n)] += power(z, n);
    if (n > 0) c[static_cast<size_t>(n * n)] += power(zinv, n);
  }
  if (order < 1) return QSeries::zero(order, order - 1);
  return QSeries(0, std::move(c), order);
}

QSeries lambert_pair(long m, long a, long b, long order) {
  if (m < 1 || a < 1 || b < 1 || a > m || b > m) {
    throw SeriesError("lambert_pair requires 1 <= a, b <= m");
  }
  std::vector<Rational> c(static_cast<size_t>(std::max(order, 1L)));
  auto accumulate = [&](long residue, int weight) {
    for (long t = residue; t < order; t += m) {
      // q^t / (1 - q^t) = q^t + q^2t + ...
      for (long k = t; k < order; k += t) c[static_cast<size_t>(k)] += weight;
    }
  };
  accumulate(a, 1);
  accumulate(b, -1);
  return QSeries(0, std::move(c), std::max(order, 1L));
}

QSeries quadform_theta(long order) {
  long order1 = std::max(order, 1L);
  std::vector<Rational> c(static_cast<size_t>(order1));
  // m^2 + mn + n^2 >= max(|m|, |n|)^2 / 2 bounds the search box.
  long bound = static_cast<long>(std::ceil(2.0 * std::sqrt(static_cast<double>(order1))));
  for (long m = -bound; m <= bound; ++m) {
    for (long n = -bound; n <= bound; ++n) {
      long v = m * m + m * n + n * n;
      if (v < order1) c[static_cast<size_t>(v)] += 1;
    }
  }
  return QSeries(0, std::move(c), order1);
}

long EtaQuotientSpec::prefactor_exponent() const {
  long total = 0;
  for (auto [delta, r] : exponents) {
    if (delta < 1) throw SeriesError("eta quotient scale must be a positive integer");
    total += delta * r;
  }
  if (total % 24 != 0) {
    throw SeriesError("non-integral eta prefactor: sum(delta*r) = " + std::to_string(total));
  }
  return total / 24;
}

QSeries eta_quotient(const EtaQuotientSpec& spec, long order) {
  long shift = spec.prefactor_exponent();
  long inner = std::max(order - shift, 1L);
  QSeries out = QSeries::constant(1, inner);
  for (auto [delta, r] : spec.exponents) {
    if (r == 0) continue;
    out = apply_poch_inf(std::move(out), PochSpec{1, delta, 1, delta}, static_cast<int>(r));
  }
  return scale_monomial(std::move(out), 1, shift);
}

}  // namespace qseries
