#include "hacs/report.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace hacs::rep {

bool SuiteReport::all_pass() const { return failures() == 0; }

int SuiteReport::failures() const {
  int n = 0;
  for (const auto& c : checks) n += c.pass ? 0 : 1;
  return n;
}

std::string to_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["ref"] = c.ref;
    e["measured"] = c.measured;
    e["tolerance"] = c.tolerance;
    e["pass"] = c.pass;
    j["checks"].push_back(e);
  }
  j["seed"] = r.seed;
  j["config"] = r.config;  // std::map iterates in key order: deterministic
  return j.dump(2) + "\n";
}

bool write_json(const SuiteReport& r, const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary: LF stays LF everywhere
  if (!out) return false;
  out << to_json(r);
  return bool(out);
}

std::string format_line(const CheckResult& c) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s %-44s measured=%.17g tol=%.17g",
                c.pass ? "PASS" : "FAIL", c.name.c_str(), c.measured, c.tolerance);
  return buf;
}

}  // namespace hacs::rep
