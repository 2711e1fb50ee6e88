// Command-line driver: `hacs verify` runs named check suites and emits
// deterministic JSON reports, `hacs eval` samples states on a grid as CSV.
// Exit codes: 0 all checks pass / output written, 1 at least one check
// failed, 2 usage or label-validity errors (the violated condition is
// printed).

#include <cinttypes>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hacs/coherent.hpp"
#include "hacs/hydrogen.hpp"
#include "hacs/report.hpp"
#include "hacs/suites.hpp"

namespace {

using cd = std::complex<double>;

struct Axis {
  double a = 0, b = 0;
  int n = 1;
};

bool parse_grid(const std::string& spec, Axis out[3], std::string& err) {
  std::stringstream ss(spec);
  std::string part;
  const char* names[3] = {"x1", "x2", "x3"};
  int idx = 0;
  while (std::getline(ss, part, ',')) {
    if (idx >= 3) {
      err = "grid has more than three axes";
      return false;
    }
    std::stringstream ps(part);
    std::string name, sa, sb, sn;
    if (!std::getline(ps, name, ':') || !std::getline(ps, sa, ':') ||
        !std::getline(ps, sb, ':') || !std::getline(ps, sn, ':')) {
      err = "grid axis '" + part + "' is not name:min:max:count";
      return false;
    }
    if (name != names[idx]) {
      err = "grid axes must appear in order x1,x2,x3 (got '" + name + "')";
      return false;
    }
    try {
      out[idx].a = std::stod(sa);
      out[idx].b = std::stod(sb);
      out[idx].n = std::stoi(sn);
    } catch (const std::exception&) {
      err = "grid axis '" + part + "' has non-numeric fields";
      return false;
    }
    if (out[idx].n < 1) {
      err = "grid axis '" + part + "' needs count >= 1";
      return false;
    }
    ++idx;
  }
  if (idx != 3) {
    err = "grid needs all three axes x1,x2,x3";
    return false;
  }
  return true;
}

double axis_value(const Axis& ax, int i) {
  if (ax.n == 1) return ax.a;
  return ax.a + (ax.b - ax.a) * double(i) / double(ax.n - 1);
}

int run_verify(const std::string& suite, std::uint64_t seed, int trunc, int samples,
               const std::vector<std::string>& tol_args, const std::string& report_path,
               const std::string& out_path) {
  hacs::suites::Options opt;
  opt.seed = seed;
  opt.trunc = trunc;
  opt.mc_samples = samples;
  for (const auto& kv : tol_args) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "bad --tol argument '" << kv << "', expected KEY=VAL\n";
      return 2;
    }
    std::string key = kv.substr(0, eq);
    double val = 0;
    try {
      val = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
      std::cerr << "bad --tol value in '" << kv << "'\n";
      return 2;
    }
    if (!opt.tol.set(key, val)) {
      std::cerr << "unknown tolerance key '" << key << "'\n";
      return 2;
    }
  }

  auto report = hacs::suites::run_suite(suite, opt);
  for (const auto& c : report.checks) std::cout << hacs::rep::format_line(c) << "\n";
  std::printf("suite %s: %zu checks, %d failed (seed %" PRIu64 ")\n", report.suite.c_str(),
              report.checks.size(), report.failures(), report.seed);

  if (!report_path.empty() && !hacs::rep::write_json(report, report_path)) {
    std::cerr << "cannot write report to '" << report_path << "'\n";
    return 2;
  }

  if (!out_path.empty() && (suite == "robertson" || suite == "all")) {
    auto rows = hacs::suites::robertson_rows(opt);
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
      std::cerr << "cannot write '" << out_path << "'\n";
      return 2;
    }
    os << "u1_re,u1_im,u2_re,u2_im,u3_re,u3_im,det_sigma,det_omega,gap,"
          "res_a1,res_a2,res_b1,res_b2\n";
    char buf[512];
    for (const auto& r : rows) {
      std::snprintf(buf, sizeof buf,
                    "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                    "%.17g\n",
                    r.u[0].real(), r.u[0].imag(), r.u[1].real(), r.u[1].imag(), r.u[2].real(),
                    r.u[2].imag(), r.det_sigma, r.det_omega, r.gap, r.residual[0], r.residual[1],
                    r.residual[2], r.residual[3]);
      os << buf;
    }
  }

  return report.all_pass() ? 0 : 1;
}

int run_eval(const std::string& kind, const std::vector<double>& uvals,
             const std::vector<double>& vvals, const std::vector<int>& label, bool physical,
             const std::string& grid_spec, const std::string& out_path) {
  std::function<cd(const hacs::hyd::Point3&)> f;

  if (kind == "discrete-cs") {
    if (uvals.size() != 6) {
      std::cerr << "discrete-cs needs --u re1,im1,re2,im2,re3,im3\n";
      return 2;
    }
    hacs::cs::CVec3 u{cd(uvals[0], uvals[1]), cd(uvals[2], uvals[3]), cd(uvals[4], uvals[5])};
    auto cls = hacs::cs::classify_u(u);
    if (!cls.ok) {
      std::cerr << "invalid label u: " << cls.violated << "\n";
      return 2;
    }
    f = [u](const hacs::hyd::Point3& x) { return hacs::cs::cs_discrete_closed(u, x); };
  } else if (kind == "continuous-cs") {
    if (vvals.size() != 3) {
      std::cerr << "continuous-cs needs --v v1,v2,v3\n";
      return 2;
    }
    hacs::cs::RVec3 v{vvals[0], vvals[1], vvals[2]};
    if (v[0] * v[0] + v[1] * v[1] + v[2] * v[2] == 1.0) {
      std::cerr << "invalid label v: v.v = 1\n";
      return 2;
    }
    f = [v](const hacs::hyd::Point3& x) { return hacs::cs::cs_continuous_closed(v, x); };
  } else {  // basis
    if (label.size() != 3) {
      std::cerr << "basis needs --label n1,n2,m\n";
      return 2;
    }
    hacs::hyd::DiscreteLabel l{label[0], label[1], label[2]};
    if (l.n1 < 0 || l.n2 < 0) {
      std::cerr << "invalid label: n1 and n2 must be >= 0\n";
      return 2;
    }
    f = [l, physical](const hacs::hyd::Point3& x) {
      return hacs::hyd::psi_discrete(l, x, physical);
    };
  }

  Axis ax[3];
  std::string err;
  if (!parse_grid(grid_spec, ax, err)) {
    std::cerr << err << "\n";
    return 2;
  }

  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "cannot write '" << out_path << "'\n";
      return 2;
    }
    os = &file;
  }

  *os << "x1,x2,x3,re,im,abs2\n";
  char buf[256];
  for (int i = 0; i < ax[0].n; ++i)
    for (int j = 0; j < ax[1].n; ++j)
      for (int k = 0; k < ax[2].n; ++k) {
        hacs::hyd::Point3 x{axis_value(ax[0], i), axis_value(ax[1], j), axis_value(ax[2], k)};
        cd val = f(x);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", x.x1, x.x2, x.x3,
                      val.real(), val.imag(), std::norm(val));
        *os << buf;
      }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hydrogen coherent-state verification toolkit"};
  app.require_subcommand(1);

  auto* v = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  std::uint64_t seed = 7;
  int trunc = 40, samples = 1000000;
  std::vector<std::string> tol_args;
  std::string report_path, rob_csv;
  v->add_option("--suite", suite, "suite name")
      ->check(CLI::IsMember(hacs::suites::suite_names()));
  v->add_option("--seed", seed, "RNG seed for all sampled checks");
  v->add_option("--trunc", trunc, "series truncation");
  v->add_option("--samples", samples, "Monte-Carlo sample count");
  v->add_option("--tol", tol_args, "override a tolerance, KEY=VAL (repeatable)");
  v->add_option("--report", report_path, "write the JSON report here");
  v->add_option("--out", rob_csv, "write robertson per-label rows as CSV");

  auto* e = app.add_subcommand("eval", "evaluate a state on a grid, CSV output");
  std::string kind, grid_spec, eval_out;
  std::vector<double> uvals, vvals;
  std::vector<int> label;
  bool physical = false;
  e->add_option("kind", kind, "discrete-cs | continuous-cs | basis")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>{"discrete-cs", "continuous-cs", "basis"}));
  e->add_option("--u", uvals, "complex label, re1,im1,re2,im2,re3,im3")->delimiter(',');
  e->add_option("--v", vvals, "real label, v1,v2,v3")->delimiter(',');
  e->add_option("--label", label, "basis label, n1,n2,m")->delimiter(',');
  e->add_flag("--physical", physical, "rescale the basis argument by 1/n");
  e->add_option("--grid", grid_spec, "x1:min:max:count,x2:...,x3:...")->required();
  e->add_option("--out", eval_out, "CSV path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);  // prints the message / help text
    return ex.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (v->parsed())
      return run_verify(suite, seed, trunc, samples, tol_args, report_path, rob_csv);
    return run_eval(kind, uvals, vvals, label, physical, grid_spec, eval_out);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
