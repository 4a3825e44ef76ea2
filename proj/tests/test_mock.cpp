#include "doctest.h"
#include "oracles.hpp"
#include "qseries/catalog.hpp"
#include "qseries/errors.hpp"
#include "qseries/identities.hpp"
#include "test_util.hpp"

using namespace qseries;
using testutil::ints;
using testutil::window;

namespace {

TermStream simple_stream(std::function<QSeries(long)> term, std::function<long(long)> bound) {
  return TermStream{std::move(term), std::move(bound)};
}

constexpr long kFar = 1L << 40;

oracle::Poly finite_product(std::int64_t c, size_t start, size_t step, size_t count, size_t n) {
  std::vector<std::pair<std::int64_t, size_t>> f;
  for (size_t j = 0; j < count; ++j) f.push_back({c, start + j * step});
  return oracle::product(f, n);
}

}  // namespace

TEST_CASE("sum_stream") {
  auto geometric = simple_stream([](long n) { return QSeries::monomial(1, n, 3); },
                                 [](long n) { return n; });
  CHECK(window(sum_stream(geometric, 3), 0, 3) == ints({1, 1, 1}));

  auto squares = simple_stream([](long n) { return QSeries::monomial(1, n * n, 5 + n * n); },
                               [](long n) { return n * n; });
  CHECK(window(sum_stream(squares, 5), 0, 5) == ints({1, 1, 0, 0, 1}));

  auto single = simple_stream([](long) { return QSeries::constant(1, 4); },
                              [](long n) { return n == 0 ? 0 : kFar; });
  CHECK(window(sum_stream(single, 4), 0, 4) == ints({1, 0, 0, 0}));

  auto stuck = simple_stream([](long) { return QSeries::constant(1, 4); }, [](long) { return 0L; });
  CHECK_THROWS_AS(sum_stream(stuck, 4), ConvergenceError);
}

TEST_CASE("cesaro_sum") {
  auto alternating = simple_stream([](long n) { return QSeries::constant(sign_power(n), 6); },
                                   [](long) { return 0L; });
  QSeries half = cesaro_sum(alternating, 6);
  CHECK(window(half, 0, 6) == std::vector<Rational>{Rational(1, 2), 0, 0, 0, 0, 0});

  auto convergent = simple_stream(
      [](long n) { return QSeries::monomial(sign_power(n), n, 10 + n); }, [](long n) { return n; });
  QSeries expected = invert(testutil::series(0, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(compare(cesaro_sum(convergent, 10), expected, 10).pass);

  auto drifting = simple_stream([](long n) { return QSeries::constant(n, 6); },
                                [](long) { return 0L; });
  CHECK_THROWS_WITH_AS(cesaro_sum(drifting, 6), doctest::Contains("non-stabilizing"),
                       ConvergenceError);
}

TEST_CASE("mu at order 2 from hand partial sums") {
  // 2 * (S_2 + S_3) / 2 with t_n = (-1)^n (q;q^2)_n / (-q)_n, to O(q^2)
  const size_t n = 2;
  oracle::Poly s{0, 0}, s2, s3;
  for (size_t k = 0; k <= 3; ++k) {
    auto num = finite_product(1, 1, 2, k, n);
    auto den = finite_product(-1, 1, 1, k, n);
    auto t = oracle::multiply(num, oracle::reciprocal(den, n), n);
    if (k % 2 == 1) {
      for (auto& c : t) c = -c;
    }
    s = oracle::add(s, t);
    if (k == 2) s2 = s;
    if (k == 3) s3 = s;
  }
  auto twice_avg = oracle::add(s2, s3);
  CHECK(twice_avg == oracle::Poly{1, 2});  // 2 * (1/2 + q)

  QSeries mu = mock_series(MockFunction::mu, 2);
  CHECK(mu.coeff(0) == Rational(1, 2));
  CHECK(mu.coeff(1) == 1);
}

TEST_CASE("mock fixtures against two-term oracle") {
  const size_t n = 4;
  // phi: 1 + (-1) q (q;q^2)_1 / (-q)_2
  auto phi1 = oracle::multiply(finite_product(1, 1, 2, 1, n),
                               oracle::reciprocal(finite_product(-1, 1, 1, 2, n), n), n);
  auto phi = oracle::shift(phi1, 1, n);
  for (auto& c : phi) c = -c;
  phi[0] += 1;
  CHECK(phi == oracle::Poly{1, -1, 2, -1});
  CHECK(window(mock_series(MockFunction::phi, 4), 0, 4) == ints({1, -1, 2, -1}));

  // psi: q / (-q)_1; the n = 1 term starts at q^4
  auto psi = oracle::shift(oracle::reciprocal(finite_product(-1, 1, 1, 1, n), n), 1, n);
  CHECK(psi == oracle::Poly{0, 1, -1, 1});
  CHECK(window(mock_series(MockFunction::psi, 4), 0, 4) == ints({0, 1, -1, 1}));

  // rho: 1/(q;q^2)_1 + q (-q)_1 / (q;q^2)_2
  const size_t m = 3;
  auto rho0 = oracle::reciprocal(finite_product(1, 1, 2, 1, m), m);
  auto rho1 = oracle::shift(oracle::multiply(finite_product(-1, 1, 1, 1, m),
                                             oracle::reciprocal(finite_product(1, 1, 2, 2, m), m), m),
                            1, m);
  auto rho = oracle::add(rho0, rho1);
  CHECK(rho == oracle::Poly{1, 2, 3});
  CHECK(window(mock_series(MockFunction::rho, 3), 0, 3) == ints({1, 2, 3}));
}

TEST_CASE("mock_series names") {
  CHECK(compare(mock_series("sigma", 20), mock_series(MockFunction::sigma, 20), 20).pass);
  CHECK_THROWS_AS(mock_series("omega", 10), ParameterError);
  for (auto f : all_mock_functions()) CHECK(parse_mock_function(to_string(f)) == f);
}

TEST_CASE("term lower bounds are exact") {
  for (auto f : all_mock_functions()) {
    TermStream ts = mock_stream(f, 400);
    for (long n = 0; n <= 12; ++n) {
      QSeries t = ts.term(n);
      CAPTURE(to_string(f));
      CAPTURE(n);
      CHECK(t.valuation() == ts.lower_bound(n));
    }
  }
}

TEST_CASE("sigma(-q) by composition equals the substituted sum") {
  const long n = 60;
  HyperSum direct;
  // q -> -q in q^{(n+1)(n+2)/2} (-q)_n / (q;q^2)_{n+1}
  direct.factors = {{PochSpec{1, 1, -1, 1}, 1, 0, 1}, {PochSpec{-1, 1, 1, 2}, 1, 1, -1}};
  direct.monomial = [](long k) {
    long t = (k + 1) * (k + 2) / 2;
    return TermMonomial{sign_power(t), t};
  };
  CHECK(compare(mock_at(MockFunction::sigma, -1, 1, n), direct.sum(n), n).pass);
}

TEST_CASE("phi(q^2) + 2 sigma(q) equals 2 phi(q^2) - 2 mu(-q)") {
  Sides eq2 = sides::ram_eq2(100);
  Sides eq3 = sides::ram_eq3(100);
  CHECK(compare(eq2.lhs, eq3.lhs, 100).pass);
}

TEST_CASE("integrality of parameter-free identities") {
  auto integral = [](const QSeries& f, long n) {
    for (long k = f.min_exp(); k < n; ++k) {
      if (!is_integer(f.coeff(k))) return false;
    }
    return true;
  };
  for (const auto& spec : list_identities()) {
    if (!spec.parameters.empty() || spec.id == "inter-1") continue;  // inter-1 is bare mu
    Sides s = spec.builder({}, 100);
    CAPTURE(spec.id);
    CHECK(integral(s.lhs, 100));
    CHECK(integral(s.rhs, 100));
  }
  CHECK(integral(Rational(2) * mock_series(MockFunction::mu, 100), 100));
  CHECK_FALSE(integral(mock_series(MockFunction::mu, 100), 100));
}

TEST_CASE("q^-1 psi(q^2) starts at q^1") {
  QSeries f = scale_monomial(mock_at(MockFunction::psi, 1, 2, 41), 1, -1);
  CHECK(f.valuation() == 1);
  QSeries g = scale_monomial(mock_at(MockFunction::psi_minus, 1, 2, 41), 1, -1);
  CHECK(g.valuation() == 1);
}

TEST_CASE("Cesàro sums stabilize") {
  CHECK_NOTHROW(cesaro_sum(mock_stream(MockFunction::mu, 120), 120));
  CHECK_NOTHROW(rr1_sum().sum(120));
}

TEST_CASE("identity_sides examples") {
  Sides eq2 = identity_sides("ram-eq2", {}, 50);
  CHECK(compare(eq2.lhs, eq2.rhs, 50).pass);

  // a = 0 kills the second right-hand term of trans1
  Sides t = sides::trans1(Monomial(0), Monomial(3), 30);
  CHECK(compare(t.lhs, t.rhs, 30).pass);
  HyperSum first;
  // with a = 0 the first RHS sum is sum (-1)^n q^{2n^2} / ((q^4;q^4)_n (1 - 0))
  first.factors = {{PochSpec{1, 4, 1, 4}, 1, 0, -1}};
  first.monomial = [](long k) { return TermMonomial{sign_power(k), 2 * k * k}; };
  QSeries pre = invert(poch_inf(PochSpec{Rational(-1, 3), 1, 1, 2}, 30));
  CHECK(compare(t.rhs, pre * first.sum(30), 30).pass);

  Sides h = identity_sides("heine1", {{"a", Monomial(2)}, {"b", parse_monomial("3q")},
                                      {"c", parse_monomial("5q")}, {"t", parse_monomial("1/7*q")}},
                           30);
  CHECK(compare(h.lhs, h.rhs, 30).pass);

  Sides l = identity_sides("lorenz", {}, 120);
  CHECK(compare(l.lhs, l.rhs, 120).pass);

  CHECK_THROWS_AS(identity_sides("trans1", {{"a", Monomial(2)}}, 10), ParameterError);
  CHECK_THROWS_AS(identity_sides("trans1", {{"a", Monomial(2)}, {"x", Monomial(0)}}, 10),
                  ParameterError);
  CHECK_THROWS_AS(
      identity_sides("trans1", {{"a", Monomial(2)}, {"x", Monomial(3)}, {"z", Monomial(1)}}, 10),
      ParameterError);
}

TEST_CASE("constant heine parameters do not converge formally") {
  // With t constant the q^0 coefficient is an infinite geometric series.
  CHECK_THROWS_AS(sides::heine1(Monomial(2), Monomial(3), Monomial(5), Monomial(Rational(1, 7)), 20),
                  ConvergenceError);
}

TEST_CASE("ramanother_sides") {
  for (Rational a : {Rational(2), Rational(1, 2), Rational(-1), Rational(-3, 5)}) {
    Sides s = ramanother_sides(a, 40);
    CAPTURE(to_string(a));
    CHECK(compare(s.lhs, s.rhs, 40).pass);
  }
  // a = -1: the left side is -psi(q) - 2 psi_minus(q)
  Sides s = ramanother_sides(-1, 40);
  QSeries expected = -(mock_series(MockFunction::psi, 40) +
                       Rational(2) * mock_series(MockFunction::psi_minus, 40));
  CHECK(compare(s.lhs, expected, 40).pass);
  CHECK_THROWS_AS(ramanother_sides(0, 10), ParameterError);
}

TEST_CASE("ww_limit_sides") {
  Sides a = ww_limit_sides(Monomial(2), Monomial(3), Monomial(5), 30);
  CHECK(compare(a.lhs, a.rhs, 30).pass);
  Sides b = ww_limit_sides(parse_monomial("q"), parse_monomial("-q^1/2"), parse_monomial("q^1/2"), 40);
  CHECK(compare(b.lhs, b.rhs, 40).pass);
  Sides c = ww_limit_sides(Monomial(-2), Monomial(Rational(1, 2)), Monomial(-3), 30);
  CHECK(compare(c.lhs, c.rhs, 30).pass);
  CHECK_THROWS_AS(ww_limit_sides(Monomial(1), Monomial(3), Monomial(5), 10), ParameterError);
  CHECK_THROWS_AS(ww_limit_sides(Monomial(0), Monomial(3), Monomial(5), 10), ParameterError);
}

TEST_CASE("ww-limit at a = q, d = -q^1/2, e = q^1/2 gives the rr2 product") {
  // In p with q = p^2 the right side is (q^2, -q; q)_inf / (-q^{3/2}, q^{3/2}; q)_inf times
  // sum (-q^{1/2}, q^{1/2})_n (-q)^n/(q)_n = sum (q;q^2)_n (-q)^n/(q)_n, i.e. rr2's left side.
  Sides w = ww_limit_sides(parse_monomial("q"), parse_monomial("-q^1/2"), parse_monomial("q^1/2"), 60);
  HyperSum rr2_left;
  rr2_left.factors = {{PochSpec{1, 1, 1, 2}, 1, 0, 1}, {PochSpec{1, 1, 1, 1}, 1, 0, -1}};
  rr2_left.monomial = [](long k) { return TermMonomial{sign_power(k), k}; };
  QSeries in_p = compose_power(rr2_left.sum(30), 1, 2);
  QSeries pre = poch_ratio({PochSpec{1, 4, 1, 2}, PochSpec{-1, 2, 1, 2}},
                           {PochSpec{-1, 3, 1, 2}, PochSpec{1, 3, 1, 2}}, 60);
  CHECK(compare(w.rhs, pre * in_p, 60).pass);
}
