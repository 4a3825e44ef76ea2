#pragma once

// Independent brute-force routines used to derive expected values in tests.
// They work on plain integer coefficient vectors and never call the library.

#include <cstdint>
#include <vector>

namespace oracle {

using Poly = std::vector<std::int64_t>;  // coefficient of q^i at index i

inline Poly truncate(Poly p, size_t n) {
  p.resize(n, 0);
  return p;
}

inline Poly multiply(const Poly& a, const Poly& b, size_t n) {
  Poly out(n, 0);
  for (size_t i = 0; i < a.size() && i < n; ++i) {
    for (size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// 1 / d for d with constant term +-1, by long division.
inline Poly reciprocal(const Poly& d, size_t n) {
  Poly out(n, 0);
  std::int64_t lead = d.at(0);
  for (size_t k = 0; k < n; ++k) {
    std::int64_t acc = (k == 0) ? 1 : 0;
    for (size_t i = 1; i <= k && i < d.size(); ++i) acc -= d[i] * out[k - i];
    out[k] = acc / lead;
  }
  return out;
}

/// 1 - c q^e as a polynomial.
inline Poly binomial(std::int64_t c, size_t e) {
  Poly p(e + 1, 0);
  p[0] += 1;
  p[e] -= c;
  return p;
}

/// Naive product of (1 - c_j q^(e_j)) over the listed factors.
inline Poly product(const std::vector<std::pair<std::int64_t, size_t>>& factors, size_t n) {
  Poly out{1};
  out = truncate(out, n);
  for (auto [c, e] : factors) out = multiply(out, binomial(c, e), n);
  return out;
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

inline Poly shift(const Poly& a, size_t k, size_t n) {
  Poly out(n, 0);
  for (size_t i = 0; i + k < n && i < a.size(); ++i) out[i + k] = a[i];
  return out;
}

/// Number of divisors d of k with d = r mod m.
inline std::int64_t divisors_in_class(std::int64_t k, std::int64_t r, std::int64_t m) {
  std::int64_t count = 0;
  for (std::int64_t d = 1; d <= k; ++d) {
    if (k % d == 0 && d % m == r % m) ++count;
  }
  return count;
}

}  // namespace oracle
