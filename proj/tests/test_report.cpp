#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "hacs/report.hpp"
#include "hacs/suites.hpp"

using namespace hacs;

namespace {
rep::SuiteReport sample_report() {
  rep::SuiteReport r;
  r.suite = "demo";
  r.seed = 7;
  r.checks.push_back({"alpha", "first identity", 1.0 / 3.0, 1e-8, true});
  r.checks.push_back({"beta", "second identity", 2e-3, 1e-6, false});
  r.config = {{"gram", 1e-8}, {"mellin", 1e-4}};
  return r;
}
}  // namespace

TEST_CASE("report bookkeeping") {
  auto r = sample_report();
  CHECK_FALSE(r.all_pass());
  CHECK(r.failures() == 1);
  r.checks[1].pass = true;
  CHECK(r.all_pass());
  CHECK(r.failures() == 0);
}

TEST_CASE("json serialization is deterministic and ordered") {
  auto r = sample_report();
  std::string a = rep::to_json(r), b = rep::to_json(r);
  CHECK(a == b);
  CHECK(a.back() == '\n');
  CHECK(a.find('\r') == std::string::npos);

  auto p_suite = a.find("\"suite\"");
  auto p_checks = a.find("\"checks\"");
  auto p_seed = a.find("\"seed\"");
  auto p_config = a.find("\"config\"");
  REQUIRE(p_suite != std::string::npos);
  REQUIRE(p_checks != std::string::npos);
  REQUIRE(p_seed != std::string::npos);
  REQUIRE(p_config != std::string::npos);
  CHECK(p_suite < p_checks);
  CHECK(p_checks < p_seed);
  CHECK(p_seed < p_config);
  CHECK(a.find("0.3333333333333333") != std::string::npos);  // shortest round-trip form
  CHECK(a.find("\"pass\": false") != std::string::npos);

  std::string path = "report_roundtrip_tmp.json";
  REQUIRE(rep::write_json(r, path));
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == a);
  in.close();
  std::remove(path.c_str());
}

TEST_CASE("console line format") {
  rep::CheckResult ok{"gram-lightcone", "overlap identity", 3.25e-10, 1e-8, true};
  auto line = rep::format_line(ok);
  CHECK(line.rfind("PASS", 0) == 0);
  CHECK(line.find("gram-lightcone") != std::string::npos);
  CHECK(line.find("measured=") != std::string::npos);
  CHECK(line.find("tol=") != std::string::npos);

  rep::CheckResult bad{"x", "y", 2.0, 1.0, false};
  CHECK(rep::format_line(bad).rfind("FAIL", 0) == 0);
}

TEST_CASE("suite registry") {
  auto names = suites::suite_names();
  REQUIRE(names.size() == 7);
  CHECK(names.front() == "algebra");
  CHECK(names.back() == "all");
  for (auto& n : names) CHECK(suites::is_suite(n));
  CHECK_FALSE(suites::is_suite("nope"));
  CHECK_THROWS_AS(suites::run_suite("nope", suites::Options{}), std::invalid_argument);
}
