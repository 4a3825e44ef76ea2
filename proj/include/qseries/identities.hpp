#pragma once

#include <map>
#include <string>

#include "qseries/mock.hpp"
#include "qseries/rational.hpp"
#include "qseries/series.hpp"

namespace qseries {

/// Named parameter values of a transformation identity.
using ParamPoint = std::map<std::string, Monomial>;

struct Sides {
  QSeries lhs;
  QSeries rhs;
};

/// Both sides of a catalog identity at a parameter point; dispatches through
/// the catalog and enforces the identity's parameter contract.
Sides identity_sides(const std::string& id, const ParamPoint& p, long order);

/// Both sides of the a-parameterized identity whose a -> -1 case carries the
/// psi + 2 psi_minus combination. a = -1 uses the form with the common factor
/// (1 + a) cancelled from (-a^3; q^6)_inf / (-a; q^2)_inf.
Sides ramanother_sides(const Rational& a, long order);

/// The b, c -> infinity case of the Watson-Whipple transformation. Half-integral
/// exponents in a, d, e switch to the variable p with q = p^2; the order is
/// then counted in p.
Sides ww_limit_sides(const Monomial& a, const Monomial& d, const Monomial& e, long order);

/// The q -> p^s scale used for a set of parameters: the lcm of the
/// denominators of their q-exponents.
long working_scale(std::initializer_list<const Monomial*> params);

namespace sides {

// Parameter-free identities.
Sides ram_eq1(long order);
Sides ram_eq2(long order);
Sides ram_eq3(long order);
Sides ram_eq4(long order);
Sides inter1(long order);
Sides inter2(long order);
Sides inter3(long order);
Sides inter4(long order);
Sides rr1(long order);
Sides rr2(long order);
Sides bc_eq1(long order);
Sides bc_eq2(long order);
Sides bc_eq3(long order);
Sides bc_eq4(long order);
Sides ter_eq1(long order);
Sides ter_eq2(long order);
Sides ter_eq3(long order);
Sides ter_eq4(long order);
Sides ram_342(long order);
Sides lorenz(long order);
Sides eta_g024(long order);

// Parameterized identities.
Sides trans1(const Monomial& a, const Monomial& x, long order);
Sides trans2(const Monomial& a, const Monomial& x, long order);
Sides heine1(const Monomial& a, const Monomial& b, const Monomial& c, const Monomial& t,
             long order);
Sides heine2(const Monomial& a, const Monomial& b, const Monomial& c, const Monomial& t,
             long order);
Sides aux_first(const Monomial& a, const Monomial& x, long order);
Sides aux_second(const Monomial& a, const Monomial& x, long order);
Sides aux_third(const Monomial& a, const Monomial& x, long order);
Sides ww(const Monomial& a, const Monomial& b, const Monomial& c, const Monomial& d,
         const Monomial& e, long order);

}  // namespace sides

/// sum (q;q^2)_n (-1)^n / (q)_n, Cesàro summed (the left side of rr1 is twice this).
HyperSum rr1_sum();

/// mock(sign * q^k) to the given order, computed by composing the truncated
/// series.
QSeries mock_at(MockFunction f, int sign, long k, long order);

}  // namespace qseries
