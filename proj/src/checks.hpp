#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "constants_override.hpp"

namespace skv {

enum class CheckStatus { Pass, Fail, Error };

const char* status_name(CheckStatus s);  // "pass" / "fail" / "error"

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;   // counterexample on fail, classification on error
  std::string anchor;   // the identity or fact the check pins down
  std::int64_t elapsed_ms;
};

struct CheckContext {
  std::uint64_t seed = 0;
  int trials = 100;
  int precision = 12;
  ConstantsOverride constants;
};

struct CheckDef {
  std::string name;
  std::string anchor;
  // Returns pass/fail plus a detail message; throws Error on hard failures.
  std::function<std::pair<bool, std::string>(const CheckContext&)> run;
};

// The full registry in its fixed, stable order.  Contains at minimum the
// relation, residue, root-of-unity, series and property checks named in the
// reports.
const std::vector<CheckDef>& check_registry();

std::vector<std::pair<std::string, std::string>> list_checks();

// Throws UnknownCheck for an unregistered name; never throws for registered
// checks (their errors are captured in the result).
CheckResult run_check(const std::string& name, const CheckContext& ctx);

struct Report {
  std::vector<CheckResult> results;
  bool all_pass;
};

Report run_all(const CheckContext& ctx);

std::string report_to_text(const Report& report);
std::string report_to_json(const Report& report);

}  // namespace skv
