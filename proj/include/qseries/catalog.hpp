#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/identities.hpp"

namespace qseries {

/// A named parameter and the constraint its values must satisfy. The
/// predicate sees the whole point because some constraints relate parameters.
struct ParameterDecl {
  std::string name;
  std::string constraint;
  std::function<bool(const Monomial& value, const ParamPoint& point)> admissible;
};

struct IdentitySpec {
  std::string id;
  std::string description;
  /// The identity written out as a formula.
  std::string anchor;
  std::vector<ParameterDecl> parameters;
  /// Deterministic verification points; {{}} for parameter-free identities.
  std::vector<ParamPoint> panel;
  std::function<Sides(const ParamPoint&, long order)> builder;
};

/// All catalog identities in a fixed order.
const std::vector<IdentitySpec>& list_identities();

/// Throws ParameterError for an unknown id.
const IdentitySpec& find_identity(std::string_view id);

/// Throws ParameterError naming the first violated constraint.
void check_parameters(const IdentitySpec& spec, const ParamPoint& point);

enum class Status { pass, fail, error };
std::string_view to_string(Status s);

struct VerificationReport {
  std::string id;
  ParamPoint params;
  long requested_order = 0;
  long effective_order = 0;
  Status status = Status::error;
  std::optional<Mismatch> first_mismatch;
  long elapsed_ms = 0;
  /// Diagnostic for status = error; also notes order clamping.
  std::string message;
};

/// Builds both sides and compares them exactly. Parameter violations and
/// evaluation failures are reported with status = error, never thrown.
VerificationReport verify(const IdentitySpec& spec, const ParamPoint& point, long order);
/// Throws ParameterError when id is unknown.
VerificationReport verify(std::string_view id, const ParamPoint& point, long order);

/// Every identity at every panel point. Work is spread over `threads` workers
/// (0 picks the hardware concurrency); the result order is the catalog order
/// regardless.
std::vector<VerificationReport> verify_all(long order, unsigned threads = 0);
std::vector<VerificationReport> verify_all(const std::vector<IdentitySpec>& catalog, long order,
                                           unsigned threads = 0);

bool all_pass(const std::vector<VerificationReport>& reports);

std::string format_params(const ParamPoint& point);

}  // namespace qseries
