#include "qseries/mock.hpp"

#include <array>
#include <memory>
#include <stdexcept>
#include <string>

#include "qseries/errors.hpp"

namespace qseries {

QSeries sum_stream(const TermStream& ts, long order) {
  QSeries acc = QSeries::zero(order);
  long last_increase = 0;
  long prev = ts.lower_bound(0);
  for (long n = 0;; ++n) {
    long bound = ts.lower_bound(n);
    if (bound >= order) break;
    if (bound > prev) {
      prev = bound;
      last_increase = n;
    }
    if (n - last_increase > order + 16) {
      throw ConvergenceError("non-convergent stream: term lower bound stuck at q^" +
                             std::to_string(bound));
    }
    acc = acc + ts.term(n);
  }
  return acc;
}

QSeries cesaro_sum(const TermStream& ts, long order) {
  long m = (order - 1) % 2 == 0 ? order - 1 : order;
  m = std::max(m, 0L);
  QSeries partial = QSeries::zero(order);
  std::array<std::optional<QSeries>, 4> tail;
  for (long n = 0; n <= m + 3; ++n) {
    partial = partial + ts.term(n);
    if (n >= m) tail[static_cast<size_t>(n - m)] = partial;
  }
  const Rational half(1, 2);
  QSeries first = half * (*tail[0] + *tail[1]);
  QSeries second = half * (*tail[2] + *tail[3]);
  Comparison check = compare(first, second, order);
  if (!check.pass) {
    throw ConvergenceError("Cesàro non-stabilizing stream: averages at M=" + std::to_string(m) +
                           " and M+2 differ at q^" +
                           std::to_string(check.first_mismatch->exponent));
  }
  return first.truncate(order);
}

namespace {

struct StreamState {
  long next = 0;
  long prev_bound = 0;
  std::optional<QSeries> running;
  std::vector<long> applied;
};

}  // namespace

TermStream HyperSum::stream(long order) const {
  auto state = std::make_shared<StreamState>();
  HyperSum self = *this;
  TermStream ts;
  ts.lower_bound = [self](long n) { return self.monomial(n).exp; };
  ts.term = [self, state, order](long n) -> QSeries {
    if (n == 0) *state = StreamState{};
    if (n != state->next) throw std::logic_error("HyperSum stream terms must be requested in order");
    ++state->next;

    TermMonomial mono = self.monomial(n);
    if (n > 0 && mono.exp < state->prev_bound) {
      throw SeriesError("term lower bound must be nondecreasing");
    }
    state->prev_bound = mono.exp;

    long working = std::max(order - mono.exp, 1L);
    if (!state->running) {
      state->running = QSeries::constant(1, working);
      state->applied.assign(self.factors.size(), 0);
    } else if (state->running->order() > working) {
      state->running = state->running->truncate(working);
    }

    QSeries& r = *state->running;
    long horizon = r.order();
    for (size_t i = 0; i < self.factors.size(); ++i) {
      const PochFactor& f = self.factors[i];
      long len = f.scale * n + f.offset;
      if (len < 0) throw SeriesError("negative Pochhammer length in hypergeometric term");
      if (f.spec.alpha != 0) {
        for (long j = state->applied[i]; j < len; ++j) {
          long e = f.spec.factor_exp(j);
          if (e >= horizon) break;
          Rational c = f.spec.factor_coef(j);
          for (int p = 0; p < std::abs(f.power); ++p) {
            r = f.power > 0 ? mul_binomial(std::move(r), c, e) : div_binomial(std::move(r), c, e);
          }
        }
      }
      state->applied[i] = len;
    }

    if (mono.coef == 0) return QSeries::zero(order);
    QSeries t = r;
    if (self.binomial) {
      auto [beta, k] = self.binomial(n);
      t = mul_binomial(std::move(t), beta, k);
    }
    return scale_monomial(std::move(t), mono.coef, mono.exp);
  };
  return ts;
}

QSeries HyperSum::sum(long order) const {
  TermStream ts = stream(order);
  return cesaro ? cesaro_sum(ts, order) : sum_stream(ts, order);
}

namespace {

constexpr std::array<std::pair<MockFunction, std::string_view>, 8> kMockNames{{
    {MockFunction::phi, "phi"},
    {MockFunction::psi, "psi"},
    {MockFunction::rho, "rho"},
    {MockFunction::sigma, "sigma"},
    {MockFunction::lambda, "lambda"},
    {MockFunction::mu, "mu"},
    {MockFunction::phi_minus, "phi_minus"},
    {MockFunction::psi_minus, "psi_minus"},
}};

// (q;q^2), (-q;q), (-q;q) with q-step 1.
const PochSpec kQOdd{1, 1, 1, 2};
const PochSpec kMinusQ{-1, 1, 1, 1};

}  // namespace

MockFunction parse_mock_function(std::string_view name) {
  for (auto [f, n] : kMockNames) {
    if (n == name) return f;
  }
  throw ParameterError("unknown mock theta function '" + std::string(name) + "'");
}

std::string_view to_string(MockFunction f) {
  for (auto [g, n] : kMockNames) {
    if (g == f) return n;
  }
  return "?";
}

const std::vector<MockFunction>& all_mock_functions() {
  static const std::vector<MockFunction> all = [] {
    std::vector<MockFunction> v;
    for (auto [f, n] : kMockNames) v.push_back(f);
    return v;
  }();
  return all;
}

HyperSum mock_definition(MockFunction f) {
  HyperSum h;
  switch (f) {
    case MockFunction::phi:
      // (-1)^n q^{n^2} (q;q^2)_n / (-q)_{2n}
      h.factors = {{kQOdd, 1, 0, 1}, {kMinusQ, 2, 0, -1}};
      h.monomial = [](long n) { return TermMonomial{sign_power(n), n * n}; };
      break;
    case MockFunction::psi:
      // (-1)^n q^{(n+1)^2} (q;q^2)_n / (-q)_{2n+1}
      h.factors = {{kQOdd, 1, 0, 1}, {kMinusQ, 2, 1, -1}};
      h.monomial = [](long n) { return TermMonomial{sign_power(n), (n + 1) * (n + 1)}; };
      break;
    case MockFunction::rho:
      // q^{n(n+1)/2} (-q)_n / (q;q^2)_{n+1}
      h.factors = {{kMinusQ, 1, 0, 1}, {kQOdd, 1, 1, -1}};
      h.monomial = [](long n) { return TermMonomial{1, n * (n + 1) / 2}; };
      break;
    case MockFunction::sigma:
      // q^{(n+1)(n+2)/2} (-q)_n / (q;q^2)_{n+1}
      h.factors = {{kMinusQ, 1, 0, 1}, {kQOdd, 1, 1, -1}};
      h.monomial = [](long n) { return TermMonomial{1, (n + 1) * (n + 2) / 2}; };
      break;
    case MockFunction::lambda:
      // (-q)^n (q;q^2)_n / (-q)_n
      h.factors = {{kQOdd, 1, 0, 1}, {kMinusQ, 1, 0, -1}};
      h.monomial = [](long n) { return TermMonomial{sign_power(n), n}; };
      break;
    case MockFunction::mu:
      // (-1)^n (q;q^2)_n / (-q)_n, summed in the Cesàro sense
      h.factors = {{kQOdd, 1, 0, 1}, {kMinusQ, 1, 0, -1}};
      h.monomial = [](long n) { return TermMonomial{sign_power(n), 0}; };
      h.cesaro = true;
      break;
    case MockFunction::phi_minus:
      // n >= 1: (-q)_{2n-1} q^n / (q;q^2)_n
      h.factors = {{kMinusQ, 2, 1, 1}, {kQOdd, 1, 1, -1}};
      h.monomial = [](long n) { return TermMonomial{1, n + 1}; };
      break;
    case MockFunction::psi_minus:
      // n >= 1: (-q)_{2n-2} q^n / (q;q^2)_n
      h.factors = {{kMinusQ, 2, 0, 1}, {kQOdd, 1, 1, -1}};
      h.monomial = [](long n) { return TermMonomial{1, n + 1}; };
      break;
  }
  return h;
}

TermStream mock_stream(MockFunction f, long order) { return mock_definition(f).stream(order); }

QSeries mock_series(MockFunction f, long order) {
  if (order < 1) throw SeriesError("mock_series: order must be >= 1");
  return mock_definition(f).sum(order);
}

QSeries mock_series(std::string_view name, long order) {
  return mock_series(parse_mock_function(name), order);
}

}  // namespace qseries
