// qseries: verify q-series identities, list the catalog, expand series and
// time the full verification run.
//
// Exit status: 0 all pass, 1 verification failure, 2 usage error.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qseries/catalog.hpp"
#include "qseries/errors.hpp"
#include "qseries/report.hpp"

namespace {

using namespace qseries;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  long order = kDefaultOrder;
  std::string identity = "all";
  std::vector<std::string> params;
  std::string format = "text";
  std::string series;
  unsigned threads = 0;
  bool perturb_rhs = false;
  std::vector<long> bench_orders{50, 100, 200, 400};
};

ParamPoint parse_params(const std::vector<std::string>& items) {
  ParamPoint p;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParameterError("parameter must look like name=value, got '" + item + "'");
    }
    p[item.substr(0, eq)] = parse_monomial(item.substr(eq + 1));
  }
  return p;
}

IdentitySpec perturbed(IdentitySpec spec) {
  auto build = spec.builder;
  spec.builder = [build](const ParamPoint& p, long order) {
    Sides s = build(p, order);
    s.rhs = mul_binomial(std::move(s.rhs), -1, 1);
    return s;
  };
  return spec;
}

int run_verify(const RunConfig& cfg) {
  std::vector<IdentitySpec> selected;
  if (cfg.identity == "all") {
    if (!cfg.params.empty()) throw ParameterError("--param requires a single --identity");
    selected = list_identities();
  } else {
    selected.push_back(find_identity(cfg.identity));
    if (!cfg.params.empty()) {
      ParamPoint point = parse_params(cfg.params);
      check_parameters(selected.back(), point);
      selected.back().panel = {point};
    }
  }
  if (cfg.perturb_rhs) {
    for (auto& s : selected) s = perturbed(std::move(s));
  }

  auto reports = verify_all(selected, cfg.order, cfg.threads);
  if (cfg.format == "json") {
    std::cout << reports_to_json(reports, cfg.order).dump(2) << "\n";
  } else {
    for (const auto& r : reports) std::cout << format_report(r) << "\n";
    std::cout << (all_pass(reports) ? "all pass" : "FAILURES") << " (" << reports.size()
              << " reports at order " << cfg.order << ")\n";
  }
  return all_pass(reports) ? kExitPass : kExitFail;
}

int run_list(const RunConfig& cfg) {
  if (cfg.format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : list_identities()) {
      nlohmann::json params = nlohmann::json::array();
      for (const auto& d : s.parameters) params.push_back({{"name", d.name}, {"constraint", d.constraint}});
      nlohmann::json panel = nlohmann::json::array();
      for (const auto& p : s.panel) {
        nlohmann::json point = nlohmann::json::object();
        for (const auto& [k, v] : p) point[k] = to_string(v);
        panel.push_back(point);
      }
      out.push_back({{"id", s.id},
                     {"description", s.description},
                     {"anchor", s.anchor},
                     {"parameters", params},
                     {"panel", panel}});
    }
    std::cout << out.dump(2) << "\n";
    return kExitPass;
  }
  for (const auto& s : list_identities()) {
    std::cout << s.id << "\t" << s.description << "\n    " << s.anchor << "\n";
    for (const auto& d : s.parameters) std::cout << "    param " << d.name << ": " << d.constraint << "\n";
    if (!s.parameters.empty()) std::cout << "    panel: " << s.panel.size() << " points\n";
  }
  return kExitPass;
}

QSeries named_series(const RunConfig& cfg) {
  const std::string& name = cfg.series;
  auto dot = name.rfind('.');
  if (dot != std::string::npos) {
    std::string side = name.substr(dot + 1);
    if (side != "lhs" && side != "rhs") throw ParameterError("series side must be .lhs or .rhs");
    const IdentitySpec& spec = find_identity(name.substr(0, dot));
    ParamPoint p = cfg.params.empty() ? spec.panel.front() : parse_params(cfg.params);
    Sides s = identity_sides(spec.id, p, cfg.order);
    return side == "lhs" ? s.lhs : s.rhs;
  }
  return mock_series(name, cfg.order);
}

int run_expand(const RunConfig& cfg) {
  QSeries f = named_series(cfg);
  long top = std::min(f.order(), cfg.order);
  for (long k = f.min_exp(); k < top; ++k) {
    std::cout << k << "\t" << to_string(f.coeff(k)) << "\n";
  }
  return kExitPass;
}

int run_bench(const RunConfig& cfg) {
  std::printf("%8s %10s %8s %10s\n", "order", "reports", "status", "seconds");
  bool ok = true;
  for (long order : cfg.bench_orders) {
    auto started = std::chrono::steady_clock::now();
    auto reports = verify_all(order, cfg.threads);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    bool pass = all_pass(reports);
    ok = ok && pass;
    std::printf("%8ld %10zu %8s %10.3f\n", order, reports.size(), pass ? "pass" : "FAIL", secs);
    std::fflush(stdout);
  }
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-series engine and identity verifier for sixth-order mock theta functions"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--order", cfg.order, "truncation order")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--threads", cfg.threads, "worker threads (0 = hardware concurrency)");
  };

  auto* verify = app.add_subcommand("verify", "verify identities at their panel points");
  add_common(verify);
  verify->add_option("--identity", cfg.identity, "identity id or 'all'");
  verify->add_option("--param", cfg.params, "parameter override name=value (single identity)");
  verify->add_flag("--perturb-rhs", cfg.perturb_rhs, "multiply every RHS by (1+q); failure-path self test");

  auto* list = app.add_subcommand("list", "print the identity catalog");
  add_common(list);

  auto* expand = app.add_subcommand("expand", "print coefficients as exponent<TAB>p/q");
  add_common(expand);
  expand->add_option("--series", cfg.series, "mock function name, or <identity>.lhs / <identity>.rhs")
      ->required();
  expand->add_option("--param", cfg.params, "parameter values for identity sides");

  auto* bench = app.add_subcommand("bench", "time verify_all at several orders");
  add_common(bench);
  bench->add_option("--orders", cfg.bench_orders, "orders to time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) return run_verify(cfg);
    if (*list) return run_list(cfg);
    if (*expand) return run_expand(cfg);
    if (*bench) return run_bench(cfg);
  } catch (const qseries::Error& e) {
    std::cerr << "qseries: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
