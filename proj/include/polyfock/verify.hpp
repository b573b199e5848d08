#pragma once

// Registry of numerical identity checks and the JSON report they produce.
//
// Every check has a built-in parameter range (e.g. m, p <= 12). --max-m and
// --max-p only ever shrink those ranges. A check whose range becomes empty, or
// which is not selected by the name filter, is reported as "excluded" and does
// not affect the overall verdict.

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace polyfock::verify {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr int kNoCap = std::numeric_limits<int>::max();

struct Options {
  int max_m = kNoCap;
  int max_p = kNoCap;
  double tol_scale = 1.0;
  std::string only = "*";  // shell-style glob on check names
  bool timing = true;      // false: runtime_ms is null, output is byte-stable

  void validate() const;
};

enum class Status { Passed, Failed, Excluded };

std::string_view to_string(Status s);

struct CheckResult {
  std::string name;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  double max_error = 0.0;
  double tolerance = 0.0;
  Status status = Status::Excluded;
  std::optional<double> runtime_ms;
  std::string note;

  bool passed() const noexcept { return status == Status::Passed; }
};

struct Report {
  std::vector<CheckResult> checks;

  /// True when no selected check failed.
  bool passed() const noexcept;
  nlohmann::ordered_json to_json() const;
};

/// Check names in execution order.
const std::vector<std::string>& check_names();

/// Runs one check by name regardless of the name filter in `opts`.
/// Throws DomainError for unknown names.
CheckResult run_check(std::string_view name, const Options& opts);

Report run_suite(const Options& opts);

}  // namespace polyfock::verify
