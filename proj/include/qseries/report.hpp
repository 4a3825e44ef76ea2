#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qseries/catalog.hpp"

namespace qseries {

/// {"order", "results": [{"id", "params", "status", "first_mismatch", "elapsed_ms"}], "all_pass"}
nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports, long order);

/// One line per report: "PASS ram-eq1 {} order=100 (12 ms)" and so on.
std::string format_report(const VerificationReport& r);

}  // namespace qseries
