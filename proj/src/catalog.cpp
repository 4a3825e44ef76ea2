#include "qseries/catalog.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "qseries/errors.hpp"

namespace qseries {

namespace {

Monomial m(std::string_view text) { return parse_monomial(text); }

ParameterDecl nonzero(std::string name) {
  return {std::move(name), "nonzero", [](const Monomial& v, const ParamPoint&) { return !v.is_zero(); }};
}

ParameterDecl any_power_series(std::string name) {
  return {std::move(name), "zero, or a monomial with q-exponent >= 0",
          [](const Monomial& v, const ParamPoint&) { return v.is_zero() || v.exp >= 0; }};
}

ParameterDecl x_decl() {
  return {"x", "nonzero with q-exponent 0 or 1 (x = q is the specialization)",
          [](const Monomial& v, const ParamPoint&) {
            return !v.is_zero() && (v.exp == 0 || v.exp == 1);
          }};
}

std::vector<ParameterDecl> heine_decls() {
  return {
      any_power_series("a"),
      {"b", "nonzero with q-exponent >= 1",
       [](const Monomial& v, const ParamPoint&) { return !v.is_zero() && v.exp >= 1; }},
      {"c", "zero, or q-exponent >= that of b",
       [](const Monomial& v, const ParamPoint& p) { return v.is_zero() || v.exp >= p.at("b").exp; }},
      {"t", "nonzero with q-exponent >= 1",
       [](const Monomial& v, const ParamPoint&) { return !v.is_zero() && v.exp >= 1; }},
  };
}

std::vector<ParamPoint> ax_panel(std::initializer_list<std::pair<const char*, const char*>> pts) {
  std::vector<ParamPoint> out;
  for (auto [a, x] : pts) out.push_back({{"a", m(a)}, {"x", m(x)}});
  return out;
}

std::vector<ParamPoint> abct_panel() {
  std::vector<ParamPoint> out;
  const char* rows[][4] = {{"2", "3q", "5q", "1/7*q"},
                           {"-2", "1/2*q", "3q^2", "q"},
                           {"1/2", "-q", "0", "3q"},
                           {"3", "2q", "-q", "1/5*q^2"},
                           {"q^2", "q", "2q", "-q"}};
  for (auto& r : rows) out.push_back({{"a", m(r[0])}, {"b", m(r[1])}, {"c", m(r[2])}, {"t", m(r[3])}});
  return out;
}

IdentitySpec fixed(std::string id, std::string description, std::string anchor,
                   Sides (*build)(long)) {
  return {std::move(id),
          std::move(description),
          std::move(anchor),
          {},
          {ParamPoint{}},
          [build](const ParamPoint&, long order) { return build(order); }};
}

std::vector<IdentitySpec> build_catalog() {
  std::vector<IdentitySpec> c;

  c.push_back(fixed("ram-eq1", "Ramanujan: q^-1 psi(q^2) + rho(q) as a product",
                    "q^-1 psi(q^2) + rho(q) = (-q;q^2)^2 (-q,-q^5,q^6;q^6)", sides::ram_eq1));
  c.push_back(fixed("ram-eq2", "Ramanujan: phi(q^2) + 2 sigma(q) as a product",
                    "phi(q^2) + 2 sigma(q) = (-q;q^2)^2 (-q^3,-q^3,q^6;q^6)", sides::ram_eq2));
  c.push_back(fixed("ram-eq3", "Ramanujan: 2 phi(q^2) - 2 mu(-q) as a product",
                    "2 phi(q^2) - 2 mu(-q) = (-q;q^2)^2 (-q^3,-q^3,q^6;q^6)", sides::ram_eq3));
  c.push_back(fixed("ram-eq4", "Ramanujan: 2 q^-1 psi(q^2) + lambda(-q) as a product",
                    "2 q^-1 psi(q^2) + lambda(-q) = (-q;q^2)^2 (-q,-q^5,q^6;q^6)", sides::ram_eq4));

  c.push_back(fixed("inter-1", "x = q, a = 1 specialization: mu in terms of phi and sigma",
                    "mu(q) = phi(q^2)/2 - sigma(-q)", sides::inter1));
  c.push_back(fixed("inter-2", "x = q, a = -1 specialization: phi(q^2) + 2 sigma(-q) as a product",
                    "(q;q^2)^3 (-q,-q^2,q^3;q^3) = phi(q^2) + 2 sigma(-q)", sides::inter2));
  c.push_back(fixed("inter-3", "x = q specialization: lambda in terms of rho and psi",
                    "lambda(q) = rho(-q) + q^-1 psi(q^2)", sides::inter3));
  c.push_back(fixed("inter-4", "x = q specialization: rho(-q) - q^-1 psi(q^2) as a product",
                    "(q;q^2)^3 (-q^3,-q^3,q^3;q^3) = rho(-q) - q^-1 psi(q^2)", sides::inter4));

  c.push_back(fixed("rr1", "Rogers-Ramanujan type identity, Cesàro-summed left side",
                    "2 sum (q;q^2)_n (-1)^n/(q)_n = (q;q^2)(-q,-q^2,q^3;q^3)/(q^2;q^2)", sides::rr1));
  c.push_back(fixed("rr2", "Rogers-Ramanujan type identity",
                    "sum (q;q^2)_n (-q)^n/(q)_n = (q;q^2)(-q^3,-q^3,q^3;q^3)/(q^2;q^2)", sides::rr2));

  c.push_back({"trans1",
               "Transformation of sum (x;q^2)_n (aq)_n (-q/x)^n / (q^2;q^2)_n",
               "(-aq)/(-q) sum (x;q^2)_n (aq)_n (-q/x)^n/(q^2;q^2)_n = "
               "(-a^2q/x;q^2)/(-q/x;q^2) sum (a^2q^2;q^2)_2n (-1)^n q^2n^2/((q^4;q^4)_n (-a^2q/x;q^2)_2n+1) "
               "- a (-a^2q^2/x;q^2)/(-q^2/x;q^2) sum_n>=1 (a^2q^2;q^2)_n-1 (-q)^n(n+1)/2/((-q;-q)_n-1 (-a^2q^2/x;q^2)_n)",
               {any_power_series("a"), x_decl()},
               ax_panel({{"2", "3"}, {"1/2", "-2"}, {"-2", "1/2"}, {"3", "3"}, {"5/3", "-2"},
                         {"0", "3"}, {"1", "q"}, {"-1", "q"}}),
               [](const ParamPoint& p, long n) { return sides::trans1(p.at("a"), p.at("x"), n); }});
  c.push_back({"trans2",
               "Transformation of sum (x;q^2)_n (aq)_n (-q^2/x)^n / (q^2;q^2)_n",
               "(-aq)/(-q) sum (x;q^2)_n (aq)_n (-q^2/x)^n/(q^2;q^2)_n = "
               "(-a^2q^2/x;q^2)/(-q^2/x;q^2) sum (a^2q^2;q^2)_n (-q)^n(n+1)/2/((-q;-q)_n (-a^2q^2/x;q^2)_n+1) "
               "+ a (-a^2q^3/x;q^2)/(-q^3/x;q^2) sum (a^2q^2;q^2)_2n (-1)^n q^(2n^2+4n+1)/((q^4;q^4)_n (-a^2q^3/x;q^2)_2n+1)",
               {any_power_series("a"), x_decl()},
               ax_panel({{"-2", "3"}, {"2", "-2"}, {"1/2", "1/2"}, {"3", "3"}, {"5/3", "-2"},
                         {"0", "1/2"}, {"1", "q"}, {"-1", "q"}}),
               [](const ParamPoint& p, long n) { return sides::trans2(p.at("a"), p.at("x"), n); }});

  c.push_back({"heine1",
               "Heine-type transformation with (b)_2n, (c)_2n",
               "sum (a;q^2)_n (b)_2n t^n/((q^2;q^2)_n (c)_2n) = "
               "(b)(at;q^2)/((c)(t;q^2)) sum (c/b)_n (t;q^2)_n b^n/((q)_n (at;q^2)_n)",
               heine_decls(), abct_panel(),
               [](const ParamPoint& p, long n) {
                 return sides::heine1(p.at("a"), p.at("b"), p.at("c"), p.at("t"), n);
               }});
  c.push_back({"heine2",
               "Heine-type transformation split into even and odd parts",
               "sum (a;q^2)_n (b)_n t^n/((q^2;q^2)_n (c)_n) = "
               "(b)(at;q^2)/((c)(t;q^2)) sum (c/b)_2n (t;q^2)_n b^2n/((q)_2n (at;q^2)_n) "
               "+ (b)(atq;q^2)/((c)(tq;q^2)) sum (c/b)_2n+1 (tq;q^2)_n b^2n+1/((q)_2n+1 (atq;q^2)_n)",
               heine_decls(), abct_panel(),
               [](const ParamPoint& p, long n) {
                 return sides::heine2(p.at("a"), p.at("b"), p.at("c"), p.at("t"), n);
               }});

  auto aux_panel = ax_panel({{"2", "3"}, {"1/2", "-2"}, {"-2", "1/2"}, {"3", "3"}, {"5/3", "-2"}});
  c.push_back({"aux-first",
               "Heine1 at base q^2 with t -> 0",
               "sum (a^2q^2;q^2)_2n (-1)^n q^2n^2/((q^4;q^4)_n (-a^2q/x;q^2)_2n+1) = "
               "(a^2q^2;q^2)(q^2;q^4)/(-a^2q/x;q^2) sum (-q/x;q^2)_n a^2n q^2n/((q^2;q^2)_n (q^2;q^4)_n)",
               {any_power_series("a"), x_decl()}, aux_panel,
               [](const ParamPoint& p, long n) { return sides::aux_first(p.at("a"), p.at("x"), n); }});
  c.push_back({"aux-second",
               "Heine1 with c = 0 followed by q -> -q",
               "sum (-q^2/x;q^2)_n a^2n+1 q^2n+1/((q)_2n+1 (-q^2;q^2)_n) = "
               "-a (-a^2q^2/x,-q;q^2)/(a^2q^2;q^2) sum_n>=1 (a^2q^2;q^2)_n-1 (-q)^n(n+1)/2/((-q;-q)_n-1 (-a^2q^2/x;q^2)_n)",
               {any_power_series("a"), x_decl()}, aux_panel,
               [](const ParamPoint& p, long n) { return sides::aux_second(p.at("a"), p.at("x"), n); }});
  auto third_panel = aux_panel;
  third_panel.push_back({{"a", m("1")}, {"x", m("q")}});
  c.push_back({"aux-third",
               "Heine2 with (a,b,c,t) = (x,aq,0,-q/x)",
               "(-aq)/(-q) sum (x;q^2)_n (aq)_n (-q/x)^n/(q^2;q^2)_n = "
               "(a^2q^2;q^2)/(-q^2,-q/x;q^2) sum (-q/x;q^2)_n a^2n q^2n/((q)_2n (-q;q^2)_n) "
               "+ (a^2q^2;q^2)/(-q,-q^2/x;q^2) sum (-q^2/x;q^2)_n a^2n+1 q^2n+1/((q)_2n+1 (-q^2;q^2)_n)",
               {any_power_series("a"), x_decl()}, third_panel,
               [](const ParamPoint& p, long n) { return sides::aux_third(p.at("a"), p.at("x"), n); }});

  {
    std::vector<ParamPoint> panel;
    const char* rows[][5] = {{"2", "3", "5", "7", "1/2"},
                             {"-2", "1/2", "-3", "2", "5"},
                             {"1/2", "2", "-1", "3", "-2"},
                             {"3", "-2", "1/3", "5", "7"},
                             {"q", "2", "3", "-q^1/2", "q^1/2"}};
    for (auto& r : rows) {
      panel.push_back({{"a", m(r[0])}, {"b", m(r[1])}, {"c", m(r[2])}, {"d", m(r[3])}, {"e", m(r[4])}});
    }
    ParameterDecl a{"a", "not 0 or 1", [](const Monomial& v, const ParamPoint&) {
                      return !v.is_zero() && !(v == Monomial(1));
                    }};
    c.push_back({"ww",
                 "Limiting case of the Watson-Whipple transformation",
                 "sum (1-aq^2n)(a,b,c,d,e)_n (-1)^n q^n(n-1)/2 (aq)^2n/((1-a)(q,aq/b,aq/c,aq/d,aq/e)_n (bcde)^n) = "
                 "(aq,aq/de)/(aq/d,aq/e) sum (aq/bc,d,e)_n (aq/de)^n/(q,aq/b,aq/c)_n",
                 {a, nonzero("b"), nonzero("c"), nonzero("d"), nonzero("e")}, panel,
                 [](const ParamPoint& p, long n) {
                   return sides::ww(p.at("a"), p.at("b"), p.at("c"), p.at("d"), p.at("e"), n);
                 }});
  }
  {
    std::vector<ParamPoint> panel;
    const char* rows[][3] = {{"2", "3", "5"},          {"-2", "1/2", "-3"}, {"q", "-q^1/2", "q^1/2"},
                             {"1/2", "2", "-1"},       {"3/2", "-2", "1/3"}, {"q", "2", "3"}};
    for (auto& r : rows) panel.push_back({{"a", m(r[0])}, {"d", m(r[1])}, {"e", m(r[2])}});
    ParameterDecl a{"a", "not 0 or 1", [](const Monomial& v, const ParamPoint&) {
                      return !v.is_zero() && !(v == Monomial(1));
                    }};
    c.push_back({"ww-limit",
                 "Watson-Whipple limit with b, c -> infinity",
                 "sum (1-aq^2n)(a,d,e)_n (-1)^n q^3n(n-1)/2 (aq)^2n/((1-a)(q,aq/d,aq/e)_n (de)^n) = "
                 "(aq,aq/de)/(aq/d,aq/e) sum (d,e)_n (aq/de)^n/(q)_n",
                 {a, nonzero("d"), nonzero("e")}, panel, [](const ParamPoint& p, long n) {
                   return ww_limit_sides(p.at("a"), p.at("d"), p.at("e"), n);
                 }});
  }

  c.push_back(fixed("bc-eq1", "Berndt-Chan: -2 q^-1 psi_-(q^2) + rho(q) as a product",
                    "-2 q^-1 psi_-(q^2) + rho(q) = (-q^2;q^2)^3 (q^6,q^6,q^12;q^12)", sides::bc_eq1));
  c.push_back(fixed("bc-eq2", "Berndt-Chan: -phi_-(q^2) + sigma(q) as a product",
                    "-phi_-(q^2) + sigma(q) = q (-q^2;q^2)^2 (-q^6,-q^6,q^6;q^6)", sides::bc_eq2));
  c.push_back(fixed("bc-eq3", "Berndt-Chan: 4 phi_-(q^2) + 2 mu(q) as a product",
                    "4 phi_-(q^2) + 2 mu(q) = (-q;q^2)^2 (-q^3,-q^3,q^6;q^6)", sides::bc_eq3));
  c.push_back(fixed("bc-eq4", "Berndt-Chan: 4 q^-1 psi_-(q^2) + lambda(q) as a product",
                    "4 q^-1 psi_-(q^2) + lambda(q) = (-q;q^2)^3 (q^3,q^9,q^12;q^12)", sides::bc_eq4));

  c.push_back(fixed("ter-eq1", "psi + 2 psi_- at q^2 as a difference of products",
                    "q^-1 psi(q^2) + 2 q^-1 psi_-(q^2) = (-q;q^2)^2 (-q,-q^5,q^6;q^6) - (-q^2;q^2)^3 (q^6,q^6,q^12;q^12)",
                    sides::ter_eq1));
  c.push_back(fixed("ter-eq2", "phi + 2 phi_- at q^2 as a difference of products",
                    "phi(q^2) + 2 phi_-(q^2) = (-q;q^2)^2 (-q^3,-q^3,q^6;q^6) - 2q (-q^2;q^2)^2 (-q^6,-q^6,q^6;q^6)",
                    sides::ter_eq2));
  c.push_back(fixed("ter-eq3", "2 phi + 4 phi_- at q^2 as a sum of products",
                    "2 phi(q^2) + 4 phi_-(q^2) = (-q;q^2)^2 (-q^3,-q^3,q^6;q^6) + (q;q^2)^2 (q^3,q^3,q^6;q^6)",
                    sides::ter_eq3));
  c.push_back(fixed("ter-eq4", "2 psi + 4 psi_- at q^2 as a difference of products",
                    "2 q^-1 psi(q^2) + 4 q^-1 psi_-(q^2) = (-q;q^2)^2 (-q,-q^5,q^6;q^6) - (q;q^2)^3 (-q^3,-q^9,q^12;q^12)",
                    sides::ter_eq4));

  c.push_back(fixed("ram-342", "phi + 2 phi_- through a Lambert series",
                    "phi(q) + 2 phi_-(q) = (1 + 6 sum (q^(6n+2)/(1-q^(6n+2)) - q^(6n+4)/(1-q^(6n+4)))) / (q)_inf",
                    sides::ram_342));
  c.push_back(fixed("lorenz", "Hexagonal lattice theta series as a Lambert series",
                    "sum_{m,n} q^(m^2+mn+n^2) = 1 + 6 sum (q^(3n+1)/(1-q^(3n+1)) - q^(3n+2)/(1-q^(3n+2)))",
                    sides::lorenz));
  c.push_back({"ramanother",
               "psi-type identity in a; a = -1 gives psi + 2 psi_-",
               "sum (-aq;q^2)_n a^(n+1) q^(n+1)^2/(aq)_2n+1 - sum_n>=1 (1/a)_2n-1 q^n/(-q/a;q^2)_n = "
               "q (q^2;q^2)(-a^3,-q^6/a^3,q^6;q^6) / (a (aq)(q;q^2)(-a,-q^2/a,-q/a,q^2;q^2))",
               {{"a", "nonzero rational", [](const Monomial& v, const ParamPoint&) {
                   return !v.is_zero() && v.exp == 0;
                 }}},
               {{{"a", m("2")}}, {{"a", m("1/2")}}, {{"a", m("-1")}}, {{"a", m("3")}},
                {{"a", m("-2/3")}}, {{"a", m("1")}}},
               [](const ParamPoint& p, long n) { return ramanother_sides(p.at("a").coef, n); }});
  c.push_back(fixed("eta-g024", "Weight one eta-quotient identity on Gamma0(24)",
                    "-3 eta^4(24z)/eta^2(12z) = eta(8z) eta^3(2z) eta(24z)/(eta(6z) eta^2(4z)) - "
                    "eta^4(8z)/eta^2(4z); q-expansions agree up to q^4",
                    sides::eta_g024));
  return c;
}

}  // namespace

const std::vector<IdentitySpec>& list_identities() {
  static const std::vector<IdentitySpec> catalog = build_catalog();
  return catalog;
}

const IdentitySpec& find_identity(std::string_view id) {
  for (const auto& s : list_identities()) {
    if (s.id == id) return s;
  }
  throw ParameterError("unknown identity '" + std::string(id) + "'");
}

void check_parameters(const IdentitySpec& spec, const ParamPoint& point) {
  for (const auto& [name, value] : point) {
    bool declared = false;
    for (const auto& d : spec.parameters) declared = declared || d.name == name;
    if (!declared) throw ParameterError(spec.id + ": unexpected parameter '" + name + "'");
  }
  for (const auto& d : spec.parameters) {
    auto it = point.find(d.name);
    if (it == point.end()) throw ParameterError(spec.id + ": missing parameter '" + d.name + "'");
  }
  for (const auto& d : spec.parameters) {
    const Monomial& v = point.at(d.name);
    if (!d.admissible(v, point)) {
      throw ParameterError(spec.id + ": parameter " + d.name + " = " + to_string(v) +
                           " violates constraint: " + d.constraint);
    }
  }
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::error:
      return "error";
  }
  return "error";
}

VerificationReport verify(const IdentitySpec& spec, const ParamPoint& point, long order) {
  auto started = std::chrono::steady_clock::now();
  VerificationReport r;
  r.id = spec.id;
  r.params = point;
  r.requested_order = order;
  try {
    if (order < 1) throw ParameterError("order must be >= 1");
    check_parameters(spec, point);
    Sides s = spec.builder(point, order);
    Comparison cmp = compare(s.lhs, s.rhs, order);
    r.effective_order = cmp.effective_order;
    r.status = cmp.pass ? Status::pass : Status::fail;
    r.first_mismatch = cmp.first_mismatch;
    if (cmp.clamped) r.message = "order clamped to " + std::to_string(cmp.effective_order);
  } catch (const Error& e) {
    r.status = Status::error;
    r.message = e.what();
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  return r;
}

VerificationReport verify(std::string_view id, const ParamPoint& point, long order) {
  return verify(find_identity(id), point, order);
}

std::vector<VerificationReport> verify_all(const std::vector<IdentitySpec>& catalog, long order,
                                           unsigned threads) {
  std::vector<std::pair<const IdentitySpec*, const ParamPoint*>> jobs;
  for (const auto& spec : catalog) {
    for (const auto& p : spec.panel) jobs.emplace_back(&spec, &p);
  }
  std::vector<VerificationReport> out(jobs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < jobs.size(); i = next++) {
      out[i] = verify(*jobs[i].first, *jobs[i].second, order);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return out;
}

std::vector<VerificationReport> verify_all(long order, unsigned threads) {
  return verify_all(list_identities(), order, threads);
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (r.status != Status::pass) return false;
  }
  return true;
}

std::string format_params(const ParamPoint& point) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : point) {
    if (!first) out += ", ";
    first = false;
    out += k + "=" + to_string(v);
  }
  return out + "}";
}

}  // namespace qseries

namespace qseries {

Sides identity_sides(const std::string& id, const ParamPoint& p, long order) {
  const IdentitySpec& spec = find_identity(id);
  check_parameters(spec, p);
  return spec.builder(p, order);
}

}  // namespace qseries
