#include "orderscope/report.hpp"

#include "json.hpp"

namespace osc {

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

long Report::failures() const {
  long f = 0;
  for (const auto& c : checks)
    if (!c.pass) ++f;
  return f;
}

void Report::add(const std::string& name, bool pass, const std::string& expected,
                 const std::string& actual, const std::string& oracle) {
  checks.push_back(Check{name, pass, expected, actual, oracle});
}

std::string report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.config) cfg[k] = v;
  j["config"] = cfg;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (!c.expected.empty()) e["expected"] = c.expected;
    if (!c.actual.empty()) e["actual"] = c.actual;
    if (!c.oracle.empty()) e["oracle"] = c.oracle;
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["failures"] = r.failures();
  j["pass"] = r.all_pass();
  return j.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  return out + "\"";
}

}  // namespace

std::string report_csv(const Report& r) {
  std::string out = "suite,check,pass,expected,actual,oracle\n";
  for (const auto& c : r.checks) {
    out += csv_escape(r.suite) + "," + csv_escape(c.name) + "," + (c.pass ? "1" : "0") + "," +
           csv_escape(c.expected) + "," + csv_escape(c.actual) + "," + csv_escape(c.oracle) +
           "\n";
  }
  return out;
}

}  // namespace osc
