#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "incgrade/json_io.hpp"

namespace incgrade {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitAssertionFailed = 1,  // a verification found a counterexample
  kExitInputError = 2,
};

/// What one CLI invocation computed. JSON keys are emitted sorted, so equal
/// reports serialize to identical bytes.
struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::string version = kVersion;
  std::optional<double> timing_ms;  // only with --timing

  Json to_json() const;
  static RunReport from_json(const Json& j);

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Runs one command line (args[0] is the program name). Writes the report
/// (JSON or table) to `out` and diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Enumeration budget: INCGRADE_MAX_BUDGET if set, else the library default.
std::uint64_t enumeration_budget_from_env();

}  // namespace incgrade
