#include "qseries/identities.hpp"

#include <numeric>
#include <string>

#include "qseries/errors.hpp"
#include "qseries/products.hpp"

namespace qseries {

long working_scale(std::initializer_list<const Monomial*> params) {
  long s = 1;
  for (const Monomial* m : params) {
    if (m->coef == 0) continue;
    long den = to_long(Rational(m->exp.get_den()));
    s = std::lcm(s, den);
  }
  return s;
}

namespace {

using MF = MockFunction;

PochSpec P(const Rational& alpha, long start, long step, int sign = 1) {
  return PochSpec{alpha, start, sign, step};
}

// Builds identity pieces in a working variable p with q = p^s. Parameters are
// converted once with param(); afterwards every q-exponent is a p-exponent.
class Ctx {
 public:
  explicit Ctx(long s) : s_(s) {}

  long s() const { return s_; }

  Monomial q(long k) const { return {1, Rational(k * s_)}; }

  Monomial param(const Monomial& m) const {
    if (m.coef == 0) return Monomial();
    Rational e = m.exp * s_;
    if (!is_integer(e)) throw ParameterError("parameter exponent is not integral in the working variable");
    return {m.coef, e};
  }

  /// (m; q^step)_n with base sign; m is a working-variable monomial.
  PochSpec poch(const Monomial& m, long step, int sign = 1) const {
    if (m.coef == 0) return PochSpec{0, 0, sign, step * s_};
    long e = to_long(m.exp);
    if (e < 0) {
      throw ParameterError("parameter yields a Pochhammer factor with a negative q-power");
    }
    return PochSpec{m.coef, e, sign, step * s_};
  }

  TermMonomial term(const Monomial& m) const {
    if (m.coef == 0) return TermMonomial{0, 0};
    return TermMonomial{m.coef, to_long(m.exp)};
  }

 private:
  long s_;
};

QSeries times(const Monomial& m, QSeries f) {
  if (m.coef == 0) return QSeries::zero(f.order());
  return scale_monomial(std::move(f), m.coef, to_long(m.exp));
}

QSeries ratio(std::vector<PochSpec> num, std::vector<PochSpec> den, long order) {
  QSeries out = QSeries::constant(1, order);
  for (const auto& s : num) out = apply_poch_inf(std::move(out), s, 1);
  for (const auto& s : den) out = apply_poch_inf(std::move(out), s, -1);
  return out;
}

// q^{-1} f(q^2)
QSeries qinv_at_q2(MF f, long order) { return scale_monomial(mock_at(f, 1, 2, order + 1), 1, -1); }

QSeries rhs_eq1(long n) {
  // (-q;q^2)^2 (-q,-q^5,q^6;q^6)
  return ratio({P(-1, 1, 2), P(-1, 1, 2), P(-1, 1, 6), P(-1, 5, 6), P(1, 6, 6)}, {}, n);
}

QSeries rhs_eq2(long n) {
  // (-q;q^2)^2 (-q^3,-q^3,q^6;q^6)
  return ratio({P(-1, 1, 2), P(-1, 1, 2), P(-1, 3, 6), P(-1, 3, 6), P(1, 6, 6)}, {}, n);
}

QSeries rhs_bc1(long n) {
  // (-q^2;q^2)^3 (q^6,q^6,q^12;q^12)
  return ratio({P(-1, 2, 2), P(-1, 2, 2), P(-1, 2, 2), P(1, 6, 12), P(1, 6, 12), P(1, 12, 12)}, {},
               n);
}

QSeries rhs_bc2(long n) {
  // q (-q^2;q^2)^2 (-q^6,-q^6,q^6;q^6)
  return scale_monomial(
      ratio({P(-1, 2, 2), P(-1, 2, 2), P(-1, 6, 6), P(-1, 6, 6), P(1, 6, 6)}, {}, n), 1, 1);
}

QSeries rhs_bc4(long n) {
  // (-q;q^2)^3 (q^3,q^9,q^12;q^12)
  return ratio({P(-1, 1, 2), P(-1, 1, 2), P(-1, 1, 2), P(1, 3, 12), P(1, 9, 12), P(1, 12, 12)}, {},
               n);
}

QSeries one(long n) { return QSeries::constant(1, n); }

}  // namespace

QSeries mock_at(MockFunction f, int sign, long k, long order) {
  long inner = std::max((order + k - 1) / k, 1L);
  return compose_power(mock_series(f, inner), sign, k);
}

HyperSum rr1_sum() {
  HyperSum h;
  h.factors = {{P(1, 1, 2), 1, 0, 1}, {P(1, 1, 1), 1, 0, -1}};
  h.monomial = [](long n) { return TermMonomial{sign_power(n), 0}; };
  h.cesaro = true;
  return h;
}

namespace sides {

Sides ram_eq1(long n) {
  return {qinv_at_q2(MF::psi, n) + mock_series(MF::rho, n), rhs_eq1(n)};
}

Sides ram_eq2(long n) {
  return {mock_at(MF::phi, 1, 2, n) + Rational(2) * mock_series(MF::sigma, n), rhs_eq2(n)};
}

Sides ram_eq3(long n) {
  return {Rational(2) * mock_at(MF::phi, 1, 2, n) - Rational(2) * mock_at(MF::mu, -1, 1, n),
          rhs_eq2(n)};
}

Sides ram_eq4(long n) {
  return {Rational(2) * qinv_at_q2(MF::psi, n) + mock_at(MF::lambda, -1, 1, n), rhs_eq1(n)};
}

Sides inter1(long n) {
  return {mock_series(MF::mu, n),
          Rational(1, 2) * mock_at(MF::phi, 1, 2, n) - mock_at(MF::sigma, -1, 1, n)};
}

Sides inter2(long n) {
  // (q;q^2)^3 (-q,-q^2,q^3;q^3)
  QSeries prod = ratio({P(1, 1, 2), P(1, 1, 2), P(1, 1, 2), P(-1, 1, 3), P(-1, 2, 3), P(1, 3, 3)},
                       {}, n);
  return {prod, mock_at(MF::phi, 1, 2, n) + Rational(2) * mock_at(MF::sigma, -1, 1, n)};
}

Sides inter3(long n) {
  return {mock_series(MF::lambda, n), mock_at(MF::rho, -1, 1, n) + qinv_at_q2(MF::psi, n)};
}

Sides inter4(long n) {
  // (q;q^2)^3 (-q^3,-q^3,q^3;q^3)
  QSeries prod = ratio({P(1, 1, 2), P(1, 1, 2), P(1, 1, 2), P(-1, 3, 3), P(-1, 3, 3), P(1, 3, 3)},
                       {}, n);
  return {prod, mock_at(MF::rho, -1, 1, n) - qinv_at_q2(MF::psi, n)};
}

Sides rr1(long n) {
  QSeries rhs = ratio({P(1, 1, 2), P(-1, 1, 3), P(-1, 2, 3), P(1, 3, 3)}, {P(1, 2, 2)}, n);
  return {Rational(2) * rr1_sum().sum(n), rhs};
}

Sides rr2(long n) {
  HyperSum h;
  h.factors = {{P(1, 1, 2), 1, 0, 1}, {P(1, 1, 1), 1, 0, -1}};
  h.monomial = [](long k) { return TermMonomial{sign_power(k), k}; };
  QSeries rhs = ratio({P(1, 1, 2), P(-1, 3, 3), P(-1, 3, 3), P(1, 3, 3)}, {P(1, 2, 2)}, n);
  return {h.sum(n), rhs};
}

Sides bc_eq1(long n) {
  return {Rational(-2) * qinv_at_q2(MF::psi_minus, n) + mock_series(MF::rho, n), rhs_bc1(n)};
}

Sides bc_eq2(long n) {
  return {mock_series(MF::sigma, n) - mock_at(MF::phi_minus, 1, 2, n), rhs_bc2(n)};
}

Sides bc_eq3(long n) {
  return {Rational(4) * mock_at(MF::phi_minus, 1, 2, n) + Rational(2) * mock_series(MF::mu, n),
          rhs_eq2(n)};
}

Sides bc_eq4(long n) {
  return {Rational(4) * qinv_at_q2(MF::psi_minus, n) + mock_series(MF::lambda, n), rhs_bc4(n)};
}

Sides ter_eq1(long n) {
  return {qinv_at_q2(MF::psi, n) + Rational(2) * qinv_at_q2(MF::psi_minus, n),
          rhs_eq1(n) - rhs_bc1(n)};
}

Sides ter_eq2(long n) {
  return {mock_at(MF::phi, 1, 2, n) + Rational(2) * mock_at(MF::phi_minus, 1, 2, n),
          rhs_eq2(n) - Rational(2) * rhs_bc2(n)};
}

Sides ter_eq3(long n) {
  // (q;q^2)^2 (q^3,q^3,q^6;q^6)
  QSeries extra = ratio({P(1, 1, 2), P(1, 1, 2), P(1, 3, 6), P(1, 3, 6), P(1, 6, 6)}, {}, n);
  return {Rational(2) * mock_at(MF::phi, 1, 2, n) + Rational(4) * mock_at(MF::phi_minus, 1, 2, n),
          rhs_eq2(n) + extra};
}

Sides ter_eq4(long n) {
  // (q;q^2)^3 (-q^3,-q^9,q^12;q^12)
  QSeries extra =
      ratio({P(1, 1, 2), P(1, 1, 2), P(1, 1, 2), P(-1, 3, 12), P(-1, 9, 12), P(1, 12, 12)}, {}, n);
  return {Rational(2) * qinv_at_q2(MF::psi, n) + Rational(4) * qinv_at_q2(MF::psi_minus, n),
          rhs_eq1(n) - extra};
}

Sides ram_342(long n) {
  QSeries lhs = mock_series(MF::phi, n) + Rational(2) * mock_series(MF::phi_minus, n);
  QSeries rhs = invert(poch_inf(P(1, 1, 1), n)) * (one(n) + Rational(6) * lambert_pair(6, 2, 4, n));
  return {lhs, rhs};
}

Sides lorenz(long n) {
  return {quadform_theta(n), one(n) + Rational(6) * lambert_pair(3, 1, 2, n)};
}

Sides eta_g024(long n) {
  EtaQuotientSpec left{{{24, 4}, {12, -2}}};
  EtaQuotientSpec first{{{8, 1}, {2, 3}, {24, 1}, {6, -1}, {4, -2}}};
  EtaQuotientSpec second{{{8, 4}, {4, -2}}};
  if (left.prefactor_exponent() != 3 || first.prefactor_exponent() != 1 ||
      second.prefactor_exponent() != 1) {
    throw SeriesError("eta-g024: unexpected eta prefactor exponents");
  }
  return {Rational(-3) * eta_quotient(left, n), eta_quotient(first, n) - eta_quotient(second, n)};
}

Sides trans1(const Monomial& a_in, const Monomial& x_in, long n) {
  Ctx c(working_scale({&a_in, &x_in}));
  Monomial a = c.param(a_in), x = c.param(x_in);
  if (x.is_zero()) throw ParameterError("x must be nonzero");
  Monomial q = c.q(1);
  Monomial a2 = a * a;

  // (-aq)_inf/(-q)_inf sum (x;q^2)_n (aq)_n (-q/x)^n / (q^2;q^2)_n
  HyperSum left;
  left.factors = {{c.poch(x, 2), 1, 0, 1}, {c.poch(a * q, 1), 1, 0, 1}, {c.poch(c.q(2), 2), 1, 0, -1}};
  Monomial ratio_x = -q / x;
  left.monomial = [c, ratio_x](long k) { return c.term(pow(ratio_x, k)); };
  left.cesaro = ratio_x.exp == 0;
  QSeries lhs = ratio({c.poch(-a * q, 1)}, {c.poch(-q, 1)}, n) * left.sum(n);

  // sum (a^2q^2;q^2)_{2n} (-1)^n q^{2n^2} / ((q^4;q^4)_n (-a^2q/x;q^2)_{2n+1})
  HyperSum first;
  first.factors = {{c.poch(a2 * c.q(2), 2), 2, 0, 1},
                   {c.poch(c.q(4), 4), 1, 0, -1},
                   {c.poch(-a2 * q / x, 2), 2, 1, -1}};
  first.monomial = [c](long k) { return TermMonomial{sign_power(k), 2 * k * k * c.s()}; };
  QSeries term1 = ratio({c.poch(-a2 * q / x, 2)}, {c.poch(-q / x, 2)}, n) * first.sum(n);

  // sum_{m>=0} (a^2q^2;q^2)_m (-q)^{(m+1)(m+2)/2} / ((-q;-q)_m (-a^2q^2/x;q^2)_{m+1})
  HyperSum second;
  second.factors = {{c.poch(a2 * c.q(2), 2), 1, 0, 1},
                    {c.poch(-q, 1, -1), 1, 0, -1},
                    {c.poch(-a2 * c.q(2) / x, 2), 1, 1, -1}};
  second.monomial = [c](long k) {
    long t = (k + 1) * (k + 2) / 2;
    return TermMonomial{sign_power(t), t * c.s()};
  };
  QSeries term2 =
      times(a, ratio({c.poch(-a2 * c.q(2) / x, 2)}, {c.poch(-c.q(2) / x, 2)}, n) * second.sum(n));
  return {lhs, term1 - term2};
}

Sides trans2(const Monomial& a_in, const Monomial& x_in, long n) {
  Ctx c(working_scale({&a_in, &x_in}));
  Monomial a = c.param(a_in), x = c.param(x_in);
  if (x.is_zero()) throw ParameterError("x must be nonzero");
  Monomial q = c.q(1);
  Monomial a2 = a * a;

  // (-aq)_inf/(-q)_inf sum (x;q^2)_n (aq)_n (-q^2/x)^n / (q^2;q^2)_n
  HyperSum left;
  left.factors = {{c.poch(x, 2), 1, 0, 1}, {c.poch(a * q, 1), 1, 0, 1}, {c.poch(c.q(2), 2), 1, 0, -1}};
  Monomial ratio_x = -c.q(2) / x;
  left.monomial = [c, ratio_x](long k) { return c.term(pow(ratio_x, k)); };
  left.cesaro = ratio_x.exp == 0;
  QSeries lhs = ratio({c.poch(-a * q, 1)}, {c.poch(-q, 1)}, n) * left.sum(n);

  // sum (a^2q^2;q^2)_n (-q)^{n(n+1)/2} / ((-q;-q)_n (-a^2q^2/x;q^2)_{n+1})
  HyperSum first;
  first.factors = {{c.poch(a2 * c.q(2), 2), 1, 0, 1},
                   {c.poch(-q, 1, -1), 1, 0, -1},
                   {c.poch(-a2 * c.q(2) / x, 2), 1, 1, -1}};
  first.monomial = [c](long k) {
    long t = k * (k + 1) / 2;
    return TermMonomial{sign_power(t), t * c.s()};
  };
  QSeries term1 =
      ratio({c.poch(-a2 * c.q(2) / x, 2)}, {c.poch(-c.q(2) / x, 2)}, n) * first.sum(n);

  // sum (a^2q^2;q^2)_{2n} (-1)^n q^{2n^2+4n+1} / ((q^4;q^4)_n (-a^2q^3/x;q^2)_{2n+1})
  HyperSum second;
  second.factors = {{c.poch(a2 * c.q(2), 2), 2, 0, 1},
                    {c.poch(c.q(4), 4), 1, 0, -1},
                    {c.poch(-a2 * c.q(3) / x, 2), 2, 1, -1}};
  second.monomial = [c](long k) {
    return TermMonomial{sign_power(k), (2 * k * k + 4 * k + 1) * c.s()};
  };
  QSeries term2 =
      times(a, ratio({c.poch(-a2 * c.q(3) / x, 2)}, {c.poch(-c.q(3) / x, 2)}, n) * second.sum(n));
  return {lhs, term1 + term2};
}

Sides heine1(const Monomial& a_in, const Monomial& b_in, const Monomial& c_in,
             const Monomial& t_in, long n) {
  Ctx c(working_scale({&a_in, &b_in, &c_in, &t_in}));
  Monomial a = c.param(a_in), b = c.param(b_in), cc = c.param(c_in), t = c.param(t_in);
  if (b.is_zero() || t.is_zero()) throw ParameterError("b and t must be nonzero");

  // sum (a;q^2)_n (b)_{2n} t^n / ((q^2;q^2)_n (c)_{2n})
  HyperSum left;
  left.factors = {{c.poch(a, 2), 1, 0, 1},
                  {c.poch(b, 1), 2, 0, 1},
                  {c.poch(c.q(2), 2), 1, 0, -1},
                  {c.poch(cc, 1), 2, 0, -1}};
  left.monomial = [c, t](long k) { return c.term(pow(t, k)); };

  // (b)(at;q^2)/((c)(t;q^2)) sum (c/b)_n (t;q^2)_n b^n / ((q)_n (at;q^2)_n)
  HyperSum right;
  right.factors = {{c.poch(cc / b, 1), 1, 0, 1},
                   {c.poch(t, 2), 1, 0, 1},
                   {c.poch(c.q(1), 1), 1, 0, -1},
                   {c.poch(a * t, 2), 1, 0, -1}};
  right.monomial = [c, b](long k) { return c.term(pow(b, k)); };
  QSeries pre = ratio({c.poch(b, 1), c.poch(a * t, 2)}, {c.poch(cc, 1), c.poch(t, 2)}, n);
  return {left.sum(n), pre * right.sum(n)};
}

Sides heine2(const Monomial& a_in, const Monomial& b_in, const Monomial& c_in,
             const Monomial& t_in, long n) {
  Ctx c(working_scale({&a_in, &b_in, &c_in, &t_in}));
  Monomial a = c.param(a_in), b = c.param(b_in), cc = c.param(c_in), t = c.param(t_in);
  if (b.is_zero() || t.is_zero()) throw ParameterError("b and t must be nonzero");
  Monomial q = c.q(1);

  // sum (a;q^2)_n (b)_n t^n / ((q^2;q^2)_n (c)_n)
  HyperSum left;
  left.factors = {{c.poch(a, 2), 1, 0, 1},
                  {c.poch(b, 1), 1, 0, 1},
                  {c.poch(c.q(2), 2), 1, 0, -1},
                  {c.poch(cc, 1), 1, 0, -1}};
  left.monomial = [c, t](long k) { return c.term(pow(t, k)); };

  // (b)(at;q^2)/((c)(t;q^2)) sum (c/b)_{2n} (t;q^2)_n b^{2n} / ((q)_{2n} (at;q^2)_n)
  HyperSum even;
  even.factors = {{c.poch(cc / b, 1), 2, 0, 1},
                  {c.poch(t, 2), 1, 0, 1},
                  {c.poch(q, 1), 2, 0, -1},
                  {c.poch(a * t, 2), 1, 0, -1}};
  even.monomial = [c, b](long k) { return c.term(pow(b, 2 * k)); };

  // (b)(atq;q^2)/((c)(tq;q^2)) sum (c/b)_{2n+1} (tq;q^2)_n b^{2n+1} / ((q)_{2n+1} (atq;q^2)_n)
  HyperSum odd;
  odd.factors = {{c.poch(cc / b, 1), 2, 1, 1},
                 {c.poch(t * q, 2), 1, 0, 1},
                 {c.poch(q, 1), 2, 1, -1},
                 {c.poch(a * t * q, 2), 1, 0, -1}};
  odd.monomial = [c, b](long k) { return c.term(pow(b, 2 * k + 1)); };

  QSeries pre_even = ratio({c.poch(b, 1), c.poch(a * t, 2)}, {c.poch(cc, 1), c.poch(t, 2)}, n);
  QSeries pre_odd =
      ratio({c.poch(b, 1), c.poch(a * t * q, 2)}, {c.poch(cc, 1), c.poch(t * q, 2)}, n);
  return {left.sum(n), pre_even * even.sum(n) + pre_odd * odd.sum(n)};
}

Sides aux_first(const Monomial& a_in, const Monomial& x_in, long n) {
  Ctx c(working_scale({&a_in, &x_in}));
  Monomial a = c.param(a_in), x = c.param(x_in);
  if (x.is_zero()) throw ParameterError("x must be nonzero");
  Monomial q = c.q(1);
  Monomial a2 = a * a;

  // sum (a^2q^2;q^2)_{2n} (-1)^n q^{2n^2} / ((q^4;q^4)_n (-a^2q/x;q^2)_{2n+1})
  HyperSum left;
  left.factors = {{c.poch(a2 * c.q(2), 2), 2, 0, 1},
                  {c.poch(c.q(4), 4), 1, 0, -1},
                  {c.poch(-a2 * q / x, 2), 2, 1, -1}};
  left.monomial = [c](long k) { return TermMonomial{sign_power(k), 2 * k * k * c.s()}; };

  // (a^2q^2;q^2)(q^2;q^4)/(-a^2q/x;q^2) sum (-q/x;q^2)_n a^{2n} q^{2n} / ((q^2;q^2)_n (q^2;q^4)_n)
  HyperSum right;
  right.factors = {{c.poch(-q / x, 2), 1, 0, 1},
                   {c.poch(c.q(2), 2), 1, 0, -1},
                   {c.poch(c.q(2), 4), 1, 0, -1}};
  Monomial step = a2 * c.q(2);
  right.monomial = [c, step](long k) { return c.term(pow(step, k)); };
  QSeries pre = ratio({c.poch(a2 * c.q(2), 2), c.poch(c.q(2), 4)}, {c.poch(-a2 * q / x, 2)}, n);
  return {left.sum(n), pre * right.sum(n)};
}

Sides aux_second(const Monomial& a_in, const Monomial& x_in, long n) {
  Ctx c(working_scale({&a_in, &x_in}));
  Monomial a = c.param(a_in), x = c.param(x_in);
  if (x.is_zero()) throw ParameterError("x must be nonzero");
  Monomial q = c.q(1);
  Monomial a2 = a * a;

  // sum (-q^2/x;q^2)_n a^{2n+1} q^{2n+1} / ((q)_{2n+1} (-q^2;q^2)_n)
  HyperSum left;
  left.factors = {{c.poch(-c.q(2) / x, 2), 1, 0, 1},
                  {c.poch(q, 1), 2, 1, -1},
                  {c.poch(-c.q(2), 2), 1, 0, -1}};
  Monomial aq = a * q;
  left.monomial = [c, aq](long k) { return c.term(pow(aq, 2 * k + 1)); };

  // -a (-a^2q^2/x, -q;q^2)/(a^2q^2;q^2) sum_{m>=0} (a^2q^2;q^2)_m (-q)^{(m+1)(m+2)/2}
  //   / ((-q;-q)_m (-a^2q^2/x;q^2)_{m+1})
  HyperSum right;
  right.factors = {{c.poch(a2 * c.q(2), 2), 1, 0, 1},
                   {c.poch(-q, 1, -1), 1, 0, -1},
                   {c.poch(-a2 * c.q(2) / x, 2), 1, 1, -1}};
  right.monomial = [c](long k) {
    long t = (k + 1) * (k + 2) / 2;
    return TermMonomial{sign_power(t), t * c.s()};
  };
  QSeries pre =
      ratio({c.poch(-a2 * c.q(2) / x, 2), c.poch(-q, 2)}, {c.poch(a2 * c.q(2), 2)}, n);
  return {left.sum(n), times(-a, pre * right.sum(n))};
}

Sides aux_third(const Monomial& a_in, const Monomial& x_in, long n) {
  Ctx c(working_scale({&a_in, &x_in}));
  Monomial a = c.param(a_in), x = c.param(x_in);
  if (x.is_zero()) throw ParameterError("x must be nonzero");
  Monomial q = c.q(1);
  Monomial a2 = a * a;

  HyperSum left;
  left.factors = {{c.poch(x, 2), 1, 0, 1}, {c.poch(a * q, 1), 1, 0, 1}, {c.poch(c.q(2), 2), 1, 0, -1}};
  Monomial ratio_x = -q / x;
  left.monomial = [c, ratio_x](long k) { return c.term(pow(ratio_x, k)); };
  left.cesaro = ratio_x.exp == 0;
  QSeries lhs = ratio({c.poch(-a * q, 1)}, {c.poch(-q, 1)}, n) * left.sum(n);

  // (a^2q^2;q^2)/(-q^2,-q/x;q^2) sum (-q/x;q^2)_n a^{2n} q^{2n} / ((q)_{2n} (-q;q^2)_n)
  HyperSum even;
  even.factors = {{c.poch(-q / x, 2), 1, 0, 1},
                  {c.poch(q, 1), 2, 0, -1},
                  {c.poch(-q, 2), 1, 0, -1}};
  Monomial aq = a * q;
  even.monomial = [c, aq](long k) { return c.term(pow(aq, 2 * k)); };

  // (a^2q^2;q^2)/(-q,-q^2/x;q^2) sum (-q^2/x;q^2)_n a^{2n+1} q^{2n+1} / ((q)_{2n+1} (-q^2;q^2)_n)
  HyperSum odd;
  odd.factors = {{c.poch(-c.q(2) / x, 2), 1, 0, 1},
                 {c.poch(q, 1), 2, 1, -1},
                 {c.poch(-c.q(2), 2), 1, 0, -1}};
  odd.monomial = [c, aq](long k) { return c.term(pow(aq, 2 * k + 1)); };

  QSeries pre_even =
      ratio({c.poch(a2 * c.q(2), 2)}, {c.poch(-c.q(2), 2), c.poch(-q / x, 2)}, n);
  QSeries pre_odd = ratio({c.poch(a2 * c.q(2), 2)}, {c.poch(-q, 2), c.poch(-c.q(2) / x, 2)}, n);
  return {lhs, pre_even * even.sum(n) + pre_odd * odd.sum(n)};
}

Sides ww(const Monomial& a_in, const Monomial& b_in, const Monomial& c_in, const Monomial& d_in,
         const Monomial& e_in, long n) {
  Ctx c(working_scale({&a_in, &b_in, &c_in, &d_in, &e_in}));
  Monomial a = c.param(a_in), b = c.param(b_in), cc = c.param(c_in), d = c.param(d_in),
           e = c.param(e_in);
  if (a.is_zero() || b.is_zero() || cc.is_zero() || d.is_zero() || e.is_zero()) {
    throw ParameterError("a, b, c, d, e must be nonzero");
  }
  if (a == Monomial(1)) throw ParameterError("a = 1 is excluded (factor 1 - a)");
  Monomial q = c.q(1);
  Monomial aq = a * q;

  // sum (1-aq^{2n}) (a,b,c,d,e)_n (-1)^n q^{n(n-1)/2} (aq)^{2n}
  //   / ((1-a) (q,aq/b,aq/c,aq/d,aq/e)_n (bcde)^n)
  HyperSum left;
  left.factors = {{c.poch(a, 1), 1, 0, 1},  {c.poch(b, 1), 1, 0, 1},       {c.poch(cc, 1), 1, 0, 1},
                  {c.poch(d, 1), 1, 0, 1},  {c.poch(e, 1), 1, 0, 1},       {c.poch(q, 1), 1, 0, -1},
                  {c.poch(aq / b, 1), 1, 0, -1}, {c.poch(aq / cc, 1), 1, 0, -1},
                  {c.poch(aq / d, 1), 1, 0, -1}, {c.poch(aq / e, 1), 1, 0, -1}};
  Monomial step = aq * aq / (b * cc * d * e);
  left.monomial = [c, step](long k) {
    TermMonomial m = c.term(pow(step, k));
    m.coef *= sign_power(k);
    m.exp += k * (k - 1) / 2 * c.s();
    return m;
  };
  long a_exp = to_long(a.exp);
  Rational a_coef = a.coef;
  left.binomial = [a_coef, a_exp, c](long k) {
    return std::pair<Rational, long>{a_coef, a_exp + 2 * k * c.s()};
  };
  QSeries lhs = div_binomial(left.sum(n), a.coef, a_exp);

  // (aq, aq/de)/(aq/d, aq/e) sum (aq/bc, d, e)_n (aq/de)^n / (q, aq/b, aq/c)_n
  HyperSum right;
  right.factors = {{c.poch(aq / (b * cc), 1), 1, 0, 1}, {c.poch(d, 1), 1, 0, 1},
                   {c.poch(e, 1), 1, 0, 1},              {c.poch(q, 1), 1, 0, -1},
                   {c.poch(aq / b, 1), 1, 0, -1},        {c.poch(aq / cc, 1), 1, 0, -1}};
  Monomial rstep = aq / (d * e);
  right.monomial = [c, rstep](long k) { return c.term(pow(rstep, k)); };
  QSeries pre = ratio({c.poch(aq, 1), c.poch(aq / (d * e), 1)}, {c.poch(aq / d, 1), c.poch(aq / e, 1)},
                      n);
  return {lhs, pre * right.sum(n)};
}

}  // namespace sides

Sides ww_limit_sides(const Monomial& a_in, const Monomial& d_in, const Monomial& e_in, long n) {
  if (a_in.is_zero() || a_in == Monomial(1)) throw ParameterError("a must not be 0 or 1");
  if (d_in.is_zero() || e_in.is_zero()) throw ParameterError("d and e must be nonzero");
  Ctx c(working_scale({&a_in, &d_in, &e_in}));
  Monomial a = c.param(a_in), d = c.param(d_in), e = c.param(e_in);
  Monomial q = c.q(1);
  Monomial aq = a * q;

  // sum (1-aq^{2n}) (a,d,e)_n (-1)^n q^{3n(n-1)/2} (aq)^{2n} / ((1-a) (q,aq/d,aq/e)_n (de)^n)
  HyperSum left;
  left.factors = {{c.poch(a, 1), 1, 0, 1},       {c.poch(d, 1), 1, 0, 1},
                  {c.poch(e, 1), 1, 0, 1},       {c.poch(q, 1), 1, 0, -1},
                  {c.poch(aq / d, 1), 1, 0, -1}, {c.poch(aq / e, 1), 1, 0, -1}};
  Monomial step = aq * aq / (d * e);
  left.monomial = [c, step](long k) {
    TermMonomial m = c.term(pow(step, k));
    m.coef *= sign_power(k);
    m.exp += 3 * k * (k - 1) / 2 * c.s();
    return m;
  };
  long a_exp = to_long(a.exp);
  Rational a_coef = a.coef;
  left.binomial = [a_coef, a_exp, c](long k) {
    return std::pair<Rational, long>{a_coef, a_exp + 2 * k * c.s()};
  };
  QSeries lhs = div_binomial(left.sum(n), a.coef, a_exp);

  // (aq, aq/de)/(aq/d, aq/e) sum (d, e)_n (aq/de)^n / (q)_n
  HyperSum right;
  right.factors = {{c.poch(d, 1), 1, 0, 1}, {c.poch(e, 1), 1, 0, 1}, {c.poch(q, 1), 1, 0, -1}};
  Monomial rstep = aq / (d * e);
  right.monomial = [c, rstep](long k) { return c.term(pow(rstep, k)); };
  QSeries pre = ratio({c.poch(aq, 1), c.poch(aq / (d * e), 1)}, {c.poch(aq / d, 1), c.poch(aq / e, 1)},
                      n);
  return {lhs, pre * right.sum(n)};
}

Sides ramanother_sides(const Rational& a, long n) {
  if (a == 0) throw ParameterError("a must be nonzero");
  // sum (-aq;q^2)_n a^{n+1} q^{(n+1)^2} / (aq)_{2n+1}
  HyperSum first;
  first.factors = {{P(-a, 1, 2), 1, 0, 1}, {P(a, 1, 1), 2, 1, -1}};
  first.monomial = [a](long k) { return TermMonomial{power(a, k + 1), (k + 1) * (k + 1)}; };
  // sum_{m>=0} (1/a)_{2m+1} q^{m+1} / (-q/a;q^2)_{m+1}
  HyperSum second;
  second.factors = {{P(1 / a, 0, 1), 2, 1, 1}, {P(-1 / a, 1, 2), 1, 1, -1}};
  second.monomial = [](long k) { return TermMonomial{1, k + 1}; };
  QSeries lhs = first.sum(n) - second.sum(n);

  // q (q^2;q^2)(-a^3,-q^6/a^3,q^6;q^6) / (a (aq)(q;q^2)(-a,-q^2/a,-q/a,q^2;q^2))
  Rational a3 = a * a * a;
  std::vector<PochSpec> num{P(1, 2, 2), P(-1 / a3, 6, 6), P(1, 6, 6)};
  std::vector<PochSpec> den{P(a, 1, 1), P(1, 1, 2), P(-1 / a, 2, 2), P(-1 / a, 1, 2), P(1, 2, 2)};
  Rational scalar = 1 / a;
  if (a == -1) {
    // (-a^3;q^6)/(-a;q^2) = (1 - a + a^2) (-a^3 q^6;q^6)/(-a q^2;q^2)
    scalar *= 1 - a + a * a;
    num.push_back(P(-a3, 6, 6));
    den.push_back(P(-a, 2, 2));
  } else {
    num.push_back(P(-a3, 0, 6));
    den.push_back(P(-a, 0, 2));
  }
  QSeries rhs = scale_monomial(ratio(num, den, n + 1), scalar, 1);
  return {lhs, rhs};
}

}  // namespace qseries
