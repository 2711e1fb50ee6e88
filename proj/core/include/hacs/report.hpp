#pragma once

// Per-check result records and their deterministic serialization. The JSON
// writer is the only place the library touches a JSON implementation, so the
// byte layout of reports is pinned here.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hacs::rep {

struct CheckResult {
  std::string name;
  std::string ref;  // neutral identifier of the identity behind the check
  double measured = 0;
  double tolerance = 0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  std::map<std::string, double> config;  // every tolerance/knob in effect

  bool all_pass() const;
  int failures() const;
};

// Schema {suite, checks: [{name, ref, measured, tolerance, pass}], seed,
// config}; fixed key order, LF endings, byte-identical for identical input.
std::string to_json(const SuiteReport& r);
bool write_json(const SuiteReport& r, const std::string& path);

// "PASS name  measured=...  tol=..." console line, 17 significant digits.
std::string format_line(const CheckResult& c);

}  // namespace hacs::rep
