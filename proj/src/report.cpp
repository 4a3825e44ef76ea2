#include "qseries/report.hpp"

namespace qseries {

nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports, long order) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.params) params[k] = to_string(v);
    nlohmann::json mismatch = nullptr;
    if (r.first_mismatch) {
      mismatch = {{"exponent", r.first_mismatch->exponent},
                  {"lhs", to_string(r.first_mismatch->lhs)},
                  {"rhs", to_string(r.first_mismatch->rhs)}};
    }
    results.push_back({{"id", r.id},
                       {"params", params},
                       {"status", std::string(to_string(r.status))},
                       {"first_mismatch", mismatch},
                       {"elapsed_ms", r.elapsed_ms}});
  }
  return {{"order", order}, {"results", results}, {"all_pass", all_pass(reports)}};
}

std::string format_report(const VerificationReport& r) {
  std::string status;
  switch (r.status) {
    case Status::pass:
      status = "PASS ";
      break;
    case Status::fail:
      status = "FAIL ";
      break;
    case Status::error:
      status = "ERROR";
      break;
  }
  std::string line = status + " " + r.id + " " + format_params(r.params) +
                     " order=" + std::to_string(r.effective_order);
  if (r.first_mismatch) {
    line += " first mismatch at q^" + std::to_string(r.first_mismatch->exponent) +
            ": lhs=" + to_string(r.first_mismatch->lhs) + " rhs=" + to_string(r.first_mismatch->rhs);
  }
  if (!r.message.empty()) line += " [" + r.message + "]";
  line += " (" + std::to_string(r.elapsed_ms) + " ms)";
  return line;
}

}  // namespace qseries
