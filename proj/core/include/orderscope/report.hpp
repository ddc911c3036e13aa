#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace osc {

/// One verified fact. `expected`/`actual` are exact strings (rationals as
/// "p/q"); `oracle` names how the expected value was obtained (a named
/// enumeration, a direct formula, or a fixed reference value).
struct Check {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
  std::string oracle;
};

/// Deterministic given (suite, seed, config): no timestamps or machine
/// state are recorded in the report body. Wall time is logged separately.
struct Report {
  std::string suite;
  uint64_t seed = 0;
  long trials = 0;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<Check> checks;

  bool all_pass() const;
  long failures() const;
  void add(const std::string& name, bool pass, const std::string& expected = "",
           const std::string& actual = "", const std::string& oracle = "");
};

std::string report_json(const Report& r);
std::string report_csv(const Report& r);

}  // namespace osc
