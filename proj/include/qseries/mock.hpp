#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/products.hpp"
#include "qseries/series.hpp"

namespace qseries {

/// Terms t_0, t_1, ... of a q-series sum with a declared lower bound L(n) on
/// the exponent of t_n. term() must be called with n = 0, 1, 2, ... in order,
/// which lets generators update running products instead of rebuilding them.
struct TermStream {
  std::function<QSeries(long n)> term;
  std::function<long(long n)> lower_bound;
};

/// Ordinary summation of all terms with L(n) < order. Throws
/// ConvergenceError when L(n) stops growing for more than order + 16 terms.
QSeries sum_stream(const TermStream& ts, long order);

/// Cesàro sum: the average of the limits of the even and odd partial sums.
/// Uses (S_M + S_{M+1}) / 2 with M the least even integer with M + 1 >= order
/// and rechecks against M + 2; a mismatch throws ConvergenceError.
QSeries cesaro_sum(const TermStream& ts, long order);

/// One Pochhammer factor of a hypergeometric term: (spec)_{scale*n + offset}^power.
struct PochFactor {
  PochSpec spec;
  long scale = 1;
  long offset = 0;
  int power = 1;
};

/// coef * q^exp.
struct TermMonomial {
  Rational coef;
  long exp = 0;
};

/// sum_n monomial(n) * prod factors(n), optionally times a per-term binomial
/// (1 - beta_n q^(k_n)). The exponent of monomial(n) is the lower bound L(n),
/// which must be nondecreasing.
struct HyperSum {
  std::vector<PochFactor> factors;
  std::function<TermMonomial(long n)> monomial;
  std::function<std::pair<Rational, long>(long n)> binomial;
  bool cesaro = false;

  TermStream stream(long order) const;
  QSeries sum(long order) const;
};

enum class MockFunction { phi, psi, rho, sigma, lambda, mu, phi_minus, psi_minus };

/// Parses "phi", "psi", ..., "phi_minus", "psi_minus"; throws ParameterError
/// for anything else.
MockFunction parse_mock_function(std::string_view name);
std::string_view to_string(MockFunction f);
const std::vector<MockFunction>& all_mock_functions();

/// The defining sum of a sixth-order mock theta function. phi_minus and
/// psi_minus are reindexed to start at n = 0.
HyperSum mock_definition(MockFunction f);
TermStream mock_stream(MockFunction f, long order);
QSeries mock_series(MockFunction f, long order);
QSeries mock_series(std::string_view name, long order);

}  // namespace qseries
