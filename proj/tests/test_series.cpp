#include "doctest.h"
#include "qseries/errors.hpp"
#include "qseries/identities.hpp"
#include "qseries/series.hpp"
#include "test_util.hpp"

using namespace qseries;
using testutil::ints;
using testutil::series;
using testutil::window;

TEST_CASE("make_series") {
  QSeries one = QSeries(0, {Rational(1)}, 1);
  CHECK(one.min_exp() == 0);
  CHECK(one.order() == 1);
  CHECK(one.coeff(0) == 1);

  QSeries laurent(-1, {Rational(1), Rational(0)}, 1);
  CHECK(laurent.coeff(-1) == 1);
  CHECK(laurent.coeff(0) == 0);
  CHECK(laurent.coeff(-5) == 0);

  QSeries f(0, {Rational(1), Rational(-1)}, 2);
  CHECK(window(f, 0, 2) == ints({1, -1}));
  CHECK_THROWS_AS(f.coeff(2), SeriesError);

  CHECK_THROWS_AS(QSeries(0, {Rational(1)}, 2), SeriesError);
  CHECK_THROWS_AS(QSeries(3, {}, 3), SeriesError);
}

TEST_CASE("add") {
  QSeries f = series(0, {1, -1, 0, 0});
  QSeries g = series(1, {1, 0});
  QSeries s = f + g;
  CHECK(s.order() == 3);
  CHECK(window(s, 0, 3) == ints({1, 0, 0}));

  CHECK((f + QSeries::zero(4)).same_prefix(f));

  QSeries h = series(-1, {1, 1, 0});
  QSeries k = series(-1, {-1, 0, 0});
  QSeries sum = h + k;
  CHECK(sum.coeff(-1) == 0);
  CHECK(sum.coeff(0) == 1);
  CHECK(sum.min_exp() == -1);
}

TEST_CASE("mul tracks precision") {
  const long n = 10;
  std::vector<Rational> ones(n, Rational(1));
  QSeries geometric(0, ones, n);
  QSeries p = series(0, {1, -1}) * geometric;
  CHECK(p.order() == 2);  // 1 - q is only known to O(q^2)

  QSeries exact_binomial = mul_binomial(QSeries::constant(1, n), 1, 1);
  QSeries prod = exact_binomial * geometric;
  CHECK(prod.order() == n);
  CHECK(window(prod, 0, n) == ints({1, 0, 0, 0, 0, 0, 0, 0, 0, 0}));

  CHECK((geometric * QSeries::constant(1, n)).same_prefix(geometric));

  QSeries qinv = QSeries::monomial(1, -1, 3);
  QSeries q = QSeries::monomial(1, 1, 5);
  QSeries r = qinv * q;
  CHECK(r.min_exp() == 0);
  CHECK(r.order() == std::min(3 + 1, 5 - 1));
  CHECK(r.coeff(0) == 1);
  CHECK(r.coeff(1) == 0);
}

TEST_CASE("scale_monomial") {
  // psi(q^2) = q^2 - q^4 + ... from the n = 0 term q^2/(1+q^2)
  QSeries psi2 = mock_at(MockFunction::psi, 1, 2, 7);
  CHECK(window(psi2, 0, 7) == ints({0, 0, 1, 0, -1, 0, 1}));
  QSeries shifted = scale_monomial(psi2, 1, -1);
  CHECK(shifted.valuation() == 1);
  CHECK(shifted.order() == psi2.order() - 1);

  QSeries f = series(0, {1, 2, 3});
  CHECK(window(scale_monomial(f, 2, 0), 0, 3) == ints({2, 4, 6}));

  QSeries cube = scale_monomial(QSeries::constant(1, 5), 1, 3);
  CHECK(cube.min_exp() == 3);
  CHECK(cube.order() == 8);
  CHECK(cube.coeff(3) == 1);

  CHECK_THROWS_AS(scale_monomial(f, 0, 1), SeriesError);
}

TEST_CASE("invert") {
  QSeries g = invert(series(0, {1, -1, 0, 0}));
  CHECK(window(g, 0, 4) == ints({1, 1, 1, 1}));

  QSeries one = invert(QSeries::constant(1, 3));
  CHECK(window(one, 0, 3) == ints({1, 0, 0}));

  // q(1 - q) to order 5
  QSeries h = invert(series(0, {0, 1, -1, 0, 0}));
  CHECK(h.min_exp() == -1);
  CHECK(h.order() == 3);
  CHECK(window(h, -1, 3) == ints({1, 1, 1, 1}));

  CHECK_THROWS_AS(invert(QSeries::zero(5)), InvertError);
}

TEST_CASE("compose_power") {
  QSeries f = series(0, {1, -1, 1});
  CHECK(window(compose_power(f, -1, 1), 0, 3) == ints({1, 1, 1}));
  CHECK(compose_power(compose_power(f, -1, 1), -1, 1).same_prefix(f));

  QSeries sq = compose_power(series(0, {1, 1}), 1, 2);
  CHECK(sq.order() == 4);
  CHECK(window(sq, 0, 4) == ints({1, 0, 1, 0}));

  QSeries laurent = compose_power(series(-1, {1, 2}), -1, 3);
  CHECK(laurent.min_exp() == -3);
  CHECK(laurent.coeff(-3) == -1);

  CHECK_THROWS_AS(compose_power(f, 1, 0), SeriesError);
  CHECK_THROWS_AS(compose_power(f, 2, 1), SeriesError);
}

TEST_CASE("compare") {
  QSeries a = series(0, {1, 1, 0, 0, 0});
  Comparison same = compare(a, a, 10);
  CHECK(same.pass);
  CHECK(same.effective_order == 5);
  CHECK(same.clamped);

  Comparison diff = compare(series(0, {1, 0, 0}), series(0, {1, 1, 0}), 10);
  CHECK_FALSE(diff.pass);
  REQUIRE(diff.first_mismatch);
  CHECK(diff.first_mismatch->exponent == 1);
  CHECK(diff.first_mismatch->lhs == 0);
  CHECK(diff.first_mismatch->rhs == 1);

  Comparison exact = compare(a, a, 3);
  CHECK_FALSE(exact.clamped);
  CHECK(exact.effective_order == 3);
}

TEST_CASE("binomial multiply and divide are inverse") {
  testutil::SeriesGen gen(7);
  for (int i = 0; i < 20; ++i) {
    QSeries f = gen.next(30);
    Rational beta = gen.coefficient();
    long k = static_cast<long>(i % 5);
    if (k == 0 && beta == 1) continue;
    QSeries back = div_binomial(mul_binomial(f, beta, k), beta, k);
    CHECK(compare(back, f, f.order()).pass);
  }
  CHECK_THROWS_AS(div_binomial(QSeries::constant(1, 3), 1, 0), InvertError);
}

TEST_CASE("ring axioms on random series") {
  testutil::SeriesGen gen(20241016);
  for (int i = 0; i < 100; ++i) {
    QSeries f = gen.next(40), g = gen.next(40), h = gen.next(40);

    QSeries s1 = (f + g) + h, s2 = f + (g + h);
    CHECK(s1.order() == s2.order());
    CHECK(compare(s1, s2, s1.order()).pass);
    CHECK(compare(f + g, g + f, 40).pass);

    QSeries p1 = (f * g) * h, p2 = f * (g * h);
    CHECK(p1.order() == p2.order());
    CHECK(compare(p1, p2, p1.order()).pass);
    CHECK(compare(f * g, g * f, 100).pass);

    QSeries d1 = f * (g + h), d2 = f * g + f * h;
    CHECK(compare(d1, d2, std::min(d1.order(), d2.order())).pass);

    QSeries zero = f + (-f);
    CHECK(zero.is_zero());

    CHECK(testutil::lowest_terms(p1));
    CHECK(testutil::lowest_terms(d2));
  }
}

TEST_CASE("integer-lifted product matches the rational reference") {
  testutil::SeriesGen gen(99);
  for (int i = 0; i < 50; ++i) {
    QSeries f = gen.next(35), g = gen.next(45);
    QSeries fast = f * g, ref = detail::mul_reference(f, g);
    CHECK(fast.min_exp() == ref.min_exp());
    CHECK(fast.order() == ref.order());
    CHECK(window(fast, fast.min_exp(), fast.order()) == window(ref, ref.min_exp(), ref.order()));
  }
}

TEST_CASE("invert round trip") {
  testutil::SeriesGen gen(5);
  for (int i = 0; i < 50; ++i) {
    QSeries f = gen.next(40, 0, 0, true);
    QSeries p = f * invert(f);
    CHECK(compare(p, QSeries::constant(1, p.order()), p.order()).pass);
    CHECK(testutil::lowest_terms(p));
  }
  // Leading zeros are skipped, not rejected.
  QSeries lead_zero = series(-2, {0, 0, 3, 1, 0, 0});
  QSeries inv = invert(lead_zero);
  CHECK(inv.min_exp() == 0);
  CHECK(inv.coeff(0) == Rational(1, 3));
}

TEST_CASE("precision soundness of truncated products") {
  testutil::SeriesGen gen(11);
  for (int i = 0; i < 30; ++i) {
    QSeries f = gen.next(60), g = gen.next(60);
    QSeries full = f * g;
    QSeries a = f.truncate(35) * g.truncate(50);
    QSeries b = f.truncate(45) * g.truncate(30);
    CHECK(a.order() <= full.order());
    CHECK(compare(a, full, a.order()).pass);
    CHECK(compare(b, full, b.order()).pass);
    CHECK(compare(a, b, std::min(a.order(), b.order())).pass);
  }
}

TEST_CASE("compose_power properties") {
  testutil::SeriesGen gen(3);
  for (int i = 0; i < 30; ++i) {
    QSeries f = gen.next(30);
    CHECK(compare(compose_power(compose_power(f, -1, 1), -1, 1), f, 30).pass);
    long k = 1 + i % 4;
    QSeries g = compose_power(f, 1, k);
    for (long j = f.min_exp(); j < f.order(); ++j) CHECK(g.coeff(j * k) == f.coeff(j));
  }
}
