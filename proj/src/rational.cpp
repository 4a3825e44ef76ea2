#include "qseries/rational.hpp"

#include <regex>

#include "qseries/errors.hpp"

namespace qseries {

namespace {

std::string trim(std::string_view text) {
  auto begin = text.find_first_not_of(" \t");
  if (begin == std::string_view::npos) return {};
  auto end = text.find_last_not_of(" \t");
  return std::string(text.substr(begin, end - begin + 1));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"([+-]?[0-9]+(/[0-9]+)?)");
  std::string s = trim(text);
  if (!std::regex_match(s, pattern)) {
    throw SeriesError("malformed rational: '" + s + "'");
  }
  if (s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  if (slash != std::string::npos && mpz_class(s.substr(slash + 1)) == 0) {
    throw SeriesError("zero denominator in rational: '" + s + "'");
  }
  Rational value(s, 10);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational power(const Rational& value, long k) {
  if (k < 0) throw SeriesError("negative exponent in power()");
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), value.get_den_mpz_t(), static_cast<unsigned long>(k));
  return Rational(num, den);
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

long to_long(const Rational& value) {
  if (!is_integer(value) || !value.get_num().fits_slong_p()) {
    throw SeriesError("expected a machine integer, got " + to_string(value));
  }
  return value.get_num().get_si();
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Rational c = a.coef * b.coef;
  if (c == 0) return Monomial();
  return {c, a.exp + b.exp};
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (b.coef == 0) throw ParameterError("division by a zero parameter");
  Rational c = a.coef / b.coef;
  if (c == 0) return Monomial();
  return {c, a.exp - b.exp};
}

Monomial operator-(const Monomial& a) { return {-a.coef, a.exp}; }

Monomial pow(const Monomial& m, long k) {
  if (k == 0) return Monomial(1);
  Rational c = power(m.coef, k);
  if (c == 0) return Monomial();
  return {c, m.exp * k};
}

Monomial parse_monomial(std::string_view text) {
  std::string s = trim(text);
  auto qpos = s.find('q');
  if (qpos == std::string::npos) return Monomial(parse_rational(s));

  std::string head = trim(std::string_view(s).substr(0, qpos));
  std::string tail = trim(std::string_view(s).substr(qpos + 1));
  if (!head.empty() && head.back() == '*') head = trim(std::string_view(head).substr(0, head.size() - 1));

  Rational coef(1);
  if (head.empty() || head == "+") {
    coef = 1;
  } else if (head == "-") {
    coef = -1;
  } else {
    coef = parse_rational(head);
  }

  Rational exp(1);
  if (!tail.empty()) {
    if (tail.front() != '^') throw SeriesError("malformed monomial: '" + s + "'");
    std::string e = trim(std::string_view(tail).substr(1));
    if (e.size() >= 2 && e.front() == '(' && e.back() == ')') e = e.substr(1, e.size() - 2);
    exp = parse_rational(e);
  }
  if (coef == 0) return Monomial();
  return {coef, exp};
}

std::string to_string(const Monomial& m) {
  if (m.coef == 0 || m.exp == 0) return to_string(m.coef);
  std::string out;
  if (m.coef == -1) {
    out = "-";
  } else if (m.coef != 1) {
    out = to_string(m.coef) + "*";
  }
  out += "q";
  if (m.exp != 1) out += "^" + to_string(m.exp);
  return out;
}

}  // namespace qseries
