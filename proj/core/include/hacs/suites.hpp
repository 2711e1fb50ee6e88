#pragma once

// Named verification suites over the whole library. Each run draws samples
// from a seed-fixed stream, evaluates the checks it owns against the
// tolerance registry, and returns a serializable report; running "all" gives
// exactly the concatenation of the individual suites at the same seed.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "coherent.hpp"
#include "numerics.hpp"
#include "report.hpp"

namespace hacs::suites {

struct Options {
  std::uint64_t seed = 7;
  int trunc = 40;            // series truncation for the discrete family
  int mc_samples = 1000000;  // Monte-Carlo draws in the robertson suite
  num::Tolerances tol;
};

const std::vector<std::string>& suite_names();  // six suites plus "all"
bool is_suite(const std::string& name);

// Throws std::invalid_argument for names outside suite_names().
rep::SuiteReport run_suite(const std::string& name, const Options& opt);

// Per-label rows behind the robertson suite, exposed so the CLI can export
// them as CSV without re-rolling the sampling.
struct RobRow {
  cs::CVec3 u;
  double det_sigma = 0, det_omega = 0, gap = 0;
  std::array<double, 4> residual{};
  int rank = 0;
};
std::vector<RobRow> robertson_rows(const Options& opt, int count = 50);

}  // namespace hacs::suites
