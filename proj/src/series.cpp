#include "qseries/series.hpp"

#include <algorithm>
#include <string>

#include "qseries/errors.hpp"

namespace qseries {

QSeries::QSeries(long min_exp, std::vector<Rational> coeffs, long order)
    : min_exp_(min_exp), order_(order), coeffs_(std::move(coeffs)) {
  if (order_ <= min_exp_) {
    throw SeriesError("series order " + std::to_string(order_) + " must exceed min_exp " +
                      std::to_string(min_exp_));
  }
  if (static_cast<long>(coeffs_.size()) != order_ - min_exp_) {
    throw SeriesError("coefficient count " + std::to_string(coeffs_.size()) +
                      " does not match order - min_exp = " + std::to_string(order_ - min_exp_));
  }
}

QSeries QSeries::zero(long order, long min_exp) {
  if (order <= min_exp) throw SeriesError("zero series needs order > min_exp");
  return QSeries(min_exp, std::vector<Rational>(static_cast<size_t>(order - min_exp)), order);
}

QSeries QSeries::constant(const Rational& c, long order) {
  QSeries out = zero(order);
  out.coeffs_[0] = c;
  return out;
}

QSeries QSeries::monomial(const Rational& c, long e, long order) {
  QSeries out = zero(order, e);
  out.coeffs_[0] = c;
  return out;
}

Rational QSeries::coeff(long k) const {
  if (k >= order_) {
    throw SeriesError("coefficient of q^" + std::to_string(k) + " is beyond the guaranteed order " +
                      std::to_string(order_));
  }
  if (k < min_exp_) return Rational(0);
  return coeffs_[static_cast<size_t>(k - min_exp_)];
}

std::optional<long> QSeries::valuation() const {
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return min_exp_ + static_cast<long>(i);
  }
  return std::nullopt;
}

QSeries QSeries::truncate(long new_order) const {
  if (new_order >= order_) return *this;
  if (new_order <= min_exp_) throw SeriesError("cannot truncate below min_exp");
  std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + (new_order - min_exp_));
  return QSeries(min_exp_, std::move(c), new_order);
}

bool QSeries::same_prefix(const QSeries& other) const {
  return compare(*this, other, std::min(order_, other.order_)).pass;
}

QSeries operator+(const QSeries& f, const QSeries& g) {
  long m = std::min(f.min_exp_, g.min_exp_);
  long o = std::min(f.order_, g.order_);
  QSeries out = QSeries::zero(o, m);
  for (long k = m; k < o; ++k) {
    Rational& c = out.coeffs_[static_cast<size_t>(k - m)];
    if (k >= f.min_exp_) c = f.coeffs_[static_cast<size_t>(k - f.min_exp_)];
    if (k >= g.min_exp_) c += g.coeffs_[static_cast<size_t>(k - g.min_exp_)];
  }
  return out;
}

QSeries operator-(const QSeries& f) {
  std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : c) x = -x;
  return QSeries(f.min_exp(), std::move(c), f.order());
}

QSeries operator-(const QSeries& f, const QSeries& g) { return f + (-g); }

QSeries operator*(const Rational& c, const QSeries& f) {
  std::vector<Rational> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : out) x *= c;
  return QSeries(f.min_exp(), std::move(out), f.order());
}

namespace {

// Clears denominators: coeffs[i] = ints[i] / common.
void lift(std::span<const Rational> coeffs, std::vector<mpz_class>& ints, mpz_class& common) {
  common = 1;
  for (const auto& c : coeffs) {
    if (c != 0) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  }
  ints.resize(coeffs.size());
  mpz_class scale;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) {
      ints[i] = 0;
      continue;
    }
    mpz_divexact(scale.get_mpz_t(), common.get_mpz_t(), coeffs[i].get_den_mpz_t());
    ints[i] = coeffs[i].get_num() * scale;
  }
}

}  // namespace

QSeries operator*(const QSeries& f, const QSeries& g) {
  long m = f.min_exp() + g.min_exp();
  long o = std::min(f.order() + g.min_exp(), g.order() + f.min_exp());
  size_t len = static_cast<size_t>(o - m);
  size_t nf = std::min(f.coeffs().size(), len);
  size_t ng = std::min(g.coeffs().size(), len);

  std::vector<mpz_class> fi, gi;
  mpz_class df, dg;
  lift(f.coeffs().first(nf), fi, df);
  lift(g.coeffs().first(ng), gi, dg);

  std::vector<size_t> g_nonzero;
  for (size_t j = 0; j < ng; ++j) {
    if (sgn(gi[j]) != 0) g_nonzero.push_back(j);
  }

  std::vector<mpz_class> acc(len);
  for (size_t i = 0; i < nf; ++i) {
    if (sgn(fi[i]) == 0) continue;
    for (size_t j : g_nonzero) {
      if (i + j >= len) break;
      mpz_addmul(acc[i + j].get_mpz_t(), fi[i].get_mpz_t(), gi[j].get_mpz_t());
    }
  }

  mpz_class den = df * dg;
  std::vector<Rational> out(len);
  for (size_t k = 0; k < len; ++k) {
    if (sgn(acc[k]) == 0) continue;
    out[k] = Rational(acc[k], den);
    out[k].canonicalize();
  }
  return QSeries(m, std::move(out), o);
}

QSeries detail::mul_reference(const QSeries& f, const QSeries& g) {
  long m = f.min_exp() + g.min_exp();
  long o = std::min(f.order() + g.min_exp(), g.order() + f.min_exp());
  size_t len = static_cast<size_t>(o - m);
  std::vector<Rational> out(len);
  for (size_t i = 0; i < f.coeffs().size() && i < len; ++i) {
    for (size_t j = 0; j < g.coeffs().size() && i + j < len; ++j) {
      out[i + j] += f.coeffs()[i] * g.coeffs()[j];
    }
  }
  return QSeries(m, std::move(out), o);
}

QSeries scale_monomial(QSeries f, const Rational& alpha, long e) {
  if (alpha == 0) throw SeriesError("scale_monomial: zero scalar destroys precision information");
  if (alpha != 1) {
    for (auto& c : f.coeffs_) c *= alpha;
  }
  f.min_exp_ += e;
  f.order_ += e;
  return f;
}

QSeries invert(const QSeries& f) {
  auto lead = f.valuation();
  if (!lead) throw InvertError("cannot invert zero-looking series");
  long m = *lead;
  size_t offset = static_cast<size_t>(m - f.min_exp());
  std::span<const Rational> h = f.coeffs().subspan(offset);
  size_t len = h.size();  // order(f) - m

  std::vector<Rational> g(len);
  Rational inv_lead = 1 / h[0];
  g[0] = inv_lead;
  Rational acc;
  for (size_t n = 1; n < len; ++n) {
    acc = 0;
    for (size_t i = 1; i <= n; ++i) {
      if (h[i] != 0) acc += h[i] * g[n - i];
    }
    g[n] = -acc * inv_lead;
  }
  return QSeries(-m, std::move(g), f.order() - 2 * m);
}

QSeries compose_power(const QSeries& f, int sign, long k) {
  if (k <= 0) throw SeriesError("compose_power: k must be >= 1");
  if (sign != 1 && sign != -1) throw SeriesError("compose_power: sign must be +1 or -1");
  long m = k * f.min_exp();
  long o = k * f.order();
  std::vector<Rational> out(static_cast<size_t>(o - m));
  for (size_t i = 0; i < f.coeffs().size(); ++i) {
    long j = f.min_exp() + static_cast<long>(i);
    const Rational& c = f.coeffs()[i];
    out[i * static_cast<size_t>(k)] = (sign == -1 && sign_power(j) == -1) ? Rational(-c) : c;
  }
  return QSeries(m, std::move(out), o);
}

QSeries mul_binomial(QSeries f, const Rational& beta, long k) {
  if (k < 0) throw SeriesError("mul_binomial: negative exponent");
  if (beta == 0) return f;
  if (k == 0) {
    Rational c = 1 - beta;
    for (auto& x : f.coeffs_) x *= c;
    return f;
  }
  auto& c = f.coeffs_;
  size_t step = static_cast<size_t>(k);
  for (size_t i = c.size(); i-- > step;) {
    if (c[i - step] != 0) c[i] -= beta * c[i - step];
  }
  return f;
}

QSeries div_binomial(QSeries f, const Rational& beta, long k) {
  if (k < 0) throw SeriesError("div_binomial: negative exponent");
  if (beta == 0) return f;
  if (k == 0) {
    if (beta == 1) throw InvertError("division by the zero factor (1 - q^0)");
    Rational c = 1 / (1 - beta);
    for (auto& x : f.coeffs_) x *= c;
    return f;
  }
  auto& c = f.coeffs_;
  size_t step = static_cast<size_t>(k);
  for (size_t i = step; i < c.size(); ++i) {
    if (c[i - step] != 0) c[i] += beta * c[i - step];
  }
  return f;
}

Comparison compare(const QSeries& f, const QSeries& g, long order) {
  Comparison out;
  out.requested_order = order;
  out.effective_order = std::min({order, f.order(), g.order()});
  out.clamped = out.effective_order < order;
  for (long k = std::min(f.min_exp(), g.min_exp()); k < out.effective_order; ++k) {
    Rational a = f.coeff(k);
    Rational b = g.coeff(k);
    if (a != b) {
      out.pass = false;
      out.first_mismatch = Mismatch{k, a, b};
      break;
    }
  }
  return out;
}

}  // namespace qseries
