#include "hacs/suites.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hacs/generators.hpp"
#include "hacs/hydrogen.hpp"
#include "hacs/robertson.hpp"
#include "hacs/specfun.hpp"

namespace hacs::suites {

namespace {

using cs::CVec3;
using cs::CVec4;
using cs::RVec3;
using hyd::Point3;
using rep::CheckResult;
using cd = std::complex<double>;

constexpr double kPi = 3.141592653589793238462643383279502884;

void add(std::vector<CheckResult>& out, const std::string& name, const std::string& ref,
         double measured, double tol) {
  out.push_back({name, ref, measured, tol, measured <= tol});
}

void add_exact(std::vector<CheckResult>& out, const std::string& name, const std::string& ref,
               double measured) {
  out.push_back({name, ref, measured, 0.0, measured == 0.0});
}

Point3 random_point(num::Rng& rng, double rmin, double rmax) {
  double g1 = rng.normal(), g2 = rng.normal(), g3 = rng.normal();
  double n = std::sqrt(g1 * g1 + g2 * g2 + g3 * g3);
  if (n == 0.0) return {rmin, 0, 0};
  double r = rng.uniform(rmin, rmax);
  return {r * g1 / n, r * g2 / n, r * g3 / n};
}

RVec3 random_ball(num::Rng& rng, double radius, double min_norm = 0.0) {
  for (;;) {
    RVec3 v{rng.uniform(-radius, radius), rng.uniform(-radius, radius),
            rng.uniform(-radius, radius)};
    double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (n <= radius && n >= min_norm) return v;
  }
}

bool expfn_zero(const exact::ExpFn<exact::CQ>& f) { return f.Q.max_abs_coeff() == 0.0; }

// ---------------- algebra ----------------

void run_algebra(const Options& opt, num::Rng& rng, std::vector<CheckResult>& out) {
  for (auto tag : {gen::Realization::osc8, gen::Realization::param13,
                   gen::Realization::param_cont2, gen::Realization::twistor3}) {
    auto fam = gen::build_family(tag);
    auto findings = gen::check_commutators(fam);
    add_exact(out, "commutators-" + gen::to_string(tag), "bracket closure, metric (+,-,-,-,+,-)",
              double(findings.size()));
  }

  int bad_eigen = 0, bad_cons = 0;
  for (const auto& l : hyd::labels_up_to_n(5)) {
    if (!expfn_zero(gen::check_eigen_L50(l))) ++bad_eigen;
    if (!expfn_zero(gen::check_constraint(gen::fock_state(l).value))) ++bad_cons;
  }
  add_exact(out, "fock-eigenvalue", "compact generator eigenvalue n1+n2+|m|+1",
            double(bad_eigen));
  add_exact(out, "fock-constraint", "oscillator-balance constraint", double(bad_cons));

  {
    using exact::CQ;
    using exact::Rat;
    auto q = [](long rn, long rd, long in_ = 0, long id = 1) {
      return CQ(Rat(rn, rd), Rat(in_, id));
    };
    const std::vector<std::array<CQ, 3>> labels = {
        {q(1, 4), q(0, 1), q(0, 1)},
        {q(0, 1), q(1, 2), q(0, 1)},
        {q(0, 1, 1, 4), q(1, 4), q(0, 1)},
        {q(1, 5, 1, 10), q(0, 1), q(1, 5)},
        {q(1, 10), q(1, 10, 1, 10), q(1, 10)},
        {q(0, 1), q(0, 1), q(3, 10)},
        {q(1, 8, 1, 8), q(1, 8), q(1, 4)},
        {q(1, 3), q(0, 1, 1, 6), q(0, 1)},
        {q(1, 6, 1, 6), q(1, 6, 1, 6), q(1, 6, 1, 6)},
        {q(2, 5), q(1, 5), q(0, 1)},
    };
    int bad = 0;
    for (const auto& u : labels)
      for (const auto& res : gen::check_annihilation_exact(u))
        if (!expfn_zero(res)) ++bad;
    add_exact(out, "annihilation-exact", "lowering identities at rational labels", double(bad));
  }

  {
    double worst = 0;
    for (int i = 0; i < 100; ++i)
      worst = std::max(worst, gen::check_annihilation_float(cs::random_valid_u(rng, 0.5, 0.05)));
    add(out, "annihilation-float", "lowering identities at random labels", worst,
        opt.tol.annihilation_float);
  }

  {
    auto rep = gen::check_sp2r_span();
    out.push_back({"sp2r-span", "quadratic operators inside the generator span",
                   double(rep.rank), 10.0,
                   rep.rank == 10 && rep.consistent && rep.y_trace_is_l50});
  }

  {
    const std::vector<CVec3> labels = {
        {cd(0.1, 0.0), cd(0.0, 0.05), cd(0.0, 0.0)},
        {cd(0.05, 0.05), cd(0.0, 0.0), cd(0.1, 0.0)},
        {cd(0.0, 0.0), cd(0.12, 0.0), cd(0.0, 0.06)},
    };
    double worst = 0;
    for (const auto& u : labels)
      worst = std::max(worst, gen::perelomov_ray_residual(u, 12));
    add(out, "perelomov-ray", "orbit exponential matches closed labels", worst, 1e-9);
  }
}

// ---------------- states ----------------

void run_states(const Options& opt, num::Rng& rng, std::vector<CheckResult>& out) {
  double g = hyd::gram_identity_error(hyd::labels_up_to_n(4), 64, 64);
  add(out, "gram-lightcone", "cone-measure orthonormality", g, opt.tol.gram);

  std::vector<Point3> pts;
  for (int i = 0; i < 20; ++i) pts.push_back(random_point(rng, 0.5, 3.0));

  {
    double worst = 0;
    for (const auto& l : hyd::labels_up_to_n(3))
      for (const auto& x : pts)
        worst = std::max(worst, hyd::schrodinger_residual(l, x, opt.tol.fd_step_laplacian));
    add(out, "schrodinger-discrete", "bound-state energy residual", worst,
        opt.tol.schrodinger_discrete);
  }
  {
    const std::vector<hyd::ContinuousLabel> labels = {
        {1.0, 1.0, 0}, {1.0, 1.0, 1}, {0.5, 1.5, 0}, {0.5, 1.5, 1}};
    double worst = 0;
    for (const auto& l : labels)
      for (const auto& x : pts)
        worst = std::max(worst, hyd::schrodinger_residual(l, x, opt.tol.fd_step_laplacian));
    add(out, "schrodinger-continuous", "scattering-state energy residual", worst,
        opt.tol.schrodinger_continuous);
  }

  {
    double worst = 0;
    for (int alpha : {0, 1, 2}) {
      double x = rng.uniform(0.2, 3.0), y = rng.uniform(0.2, 3.0);
      cd z = std::polar(0.6, rng.uniform(0.0, 2.0 * kPi));
      worst = std::max(worst, sf::check_bilinear_laguerre(alpha, x, y, z, 60));
      worst = std::max(worst, sf::check_bilinear_laguerre(alpha, x, y, cd(0.5, 0.0), 60));
    }
    add(out, "bilinear-laguerre", "bilinear Laguerre generating identity", worst,
        opt.tol.bilinear_laguerre);
  }
  {
    double worst = std::max({sf::check_bessel_sum(cd(1.3, 0.0), 0.7),
                             sf::check_bessel_sum(cd(0.85, 0.0), 0.15),
                             sf::check_bessel_sum(cd(0.9, 0.3), 0.2),
                             sf::check_bessel_sum(cd(1.25, 0.0), 0.1)});
    add(out, "bessel-sum", "Laurent Bessel generating identity", worst, opt.tol.bessel_sum);
  }

  {
    double worst = 0;
    for (double rho : {0.3, 1.0, 2.0})
      for (int M : {0, 1, 2})
        for (double xi : {0.5, 1.5, 3.0})
          worst = std::max(worst, hyd::phi_radial_continuous_imag(rho, M, xi));
    add(out, "radial-realness", "continuous radial functions are real", worst, 1e-9);
  }

  {
    double worst = 0;
    for (const auto& l : hyd::labels_up_to_n(3)) {
      auto st = gen::fock_state(l);
      for (int i = 0; i < 5; ++i) {
        double x1 = rng.uniform(-1.5, 1.5), x2 = rng.uniform(-1.5, 1.5);
        double e1 = rng.uniform(-1.5, 1.5), e2 = rng.uniform(-1.5, 1.5);
        auto nc = hyd::ks_map(x1, x2, e1, e2);
        cd lhs = st.eval4(x1, x2, e1, e2) / std::sqrt(kPi);
        cd rhs = hyd::psi_discrete(l, {nc.n1, nc.n2, nc.n3});
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
      }
    }
    add(out, "fock-vs-basis", "oscillator word equals parabolic basis", worst, 1e-10);
  }
}

// ---------------- cs-discrete ----------------

void run_cs_discrete(const Options& opt, num::Rng& rng, std::vector<CheckResult>& out) {
  {
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
      CVec3 u = cs::random_valid_u(rng, 0.6, 0.01);
      auto wv = cs::w_of_u(u);
      worst = std::max(worst, std::abs(wv.ww - cs::w_norm_sq_closed(u)));
      CVec4 k = cs::k_of_u(u);
      cd kk = k[0] * k[0] - k[1] * k[1] - k[2] * k[2] - k[3] * k[3];
      worst = std::max(worst, std::abs(kk - 1.0));
    }
    CVec3 probe{cd(0.3, 0.0), cd(0.0, 0.0), cd(0.0, 0.0)};
    bool alt_differs =
        std::abs(cs::w_norm_sq_alt(probe) - cs::w_of_u(probe).ww) > 1e-3;
    out.push_back({"w-route-agreement", "real-part vector norm, two routes", worst, 1e-12,
                   worst <= 1e-12 && alt_differs});
  }

  {
    int mismatch = 0;
    for (int i = 0; i < 10000; ++i) {
      CVec3 u;
      for (auto& c : u) c = cd(rng.uniform(-0.75, 0.75), rng.uniform(-0.75, 0.75));
      auto cls = cs::classify_u(u);
      if (std::abs(1.0 - cs::dot(u, u)) < 1e-9) continue;  // boundary of the chart
      if (std::abs(cls.h) < 1e-12) continue;               // boundary of the domain
      auto wv = cs::w_of_u(u);
      bool cone_side = wv.w[0] > 0.0 && wv.ww > 0.0;
      if (cls.ok != cone_side) ++mismatch;
    }
    add_exact(out, "validity-equivalence", "label domain equals cone positivity",
              double(mismatch));
  }

  std::vector<std::pair<cd, cd>> lambdas;
  for (int i = 0; i < 20; ++i) {
    auto draw = [&]() {
      for (;;) {
        cd l(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
        if (std::abs(l) <= 0.5) return l;
      }
    };
    lambdas.emplace_back(draw(), draw());
  }

  {
    std::vector<Point3> pts;
    for (int i = 0; i < 10; ++i) pts.push_back(random_point(rng, 0.1, 4.0));
    double worst = 0;
    for (const auto& [l1, l2] : lambdas)
      for (const auto& x : pts)
        worst = std::max(worst, std::abs(cs::cs_discrete_series(l1, l2, x, opt.trunc) -
                                         cs::cs_discrete_closed(cs::u_of_series(l1, l2), x)));
    add(out, "series-vs-closed", "basis expansion equals closed form", worst,
        opt.tol.series_closed);
  }

  {
    double worst = 0;
    for (const auto& [l1, l2] : lambdas)
      worst = std::max(worst,
                       std::abs(cs::cs_norm_quadrature(cs::u_of_series(l1, l2)) - 1.0));
    add(out, "norm-quadrature", "unit norm under the cone measure", worst,
        opt.tol.norm_quadrature);
  }

  {
    double worst = 0;
    CVec3 u1{cd(0.0), cd(0.5), cd(0.0)};
    worst = std::max(worst, std::abs(cs::c0_norm_sq(u1) - 2.25));
    CVec3 u2{cd(0.0, 0.25), cd(0.25, 0.0), cd(0.0)};
    worst = std::max(worst, std::abs(cs::w_of_u(u2).ww - cs::w_norm_sq_closed(u2)));
    CVec3 u0{cd(0.0), cd(0.0), cd(0.0)};
    for (double x3 : {-1.2, 0.7}) {
      worst = std::max(worst, std::abs(cs::cs_1d_reduction(u0, x3) -
                                       std::exp(-std::abs(x3)) / std::sqrt(kPi)));
      CVec3 uz{cd(0.0), cd(0.0), cd(0.3, 0.1)};
      worst = std::max(worst, std::abs(cs::cs_1d_reduction(uz, x3) -
                                       cs::cs_discrete_closed(uz, {0.0, 0.0, x3})));
    }
    add(out, "discrete-examples", "pinned closed-form values", worst, 1e-12);
  }

  {
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
      CVec3 u = cs::random_valid_u(rng, 0.35, 0.2);
      Point3 x = random_point(rng, 0.5, 1.5);
      worst = std::max(worst,
                       cs::covariance_check_L50(u, x, opt.tol.fd_step_laplacian, 3e-3));
    }
    add(out, "covariance-l50", "compact flow covariance", worst, opt.tol.covariance_l50);
  }

  {
    double worst = 0;
    for (int i = 0; i < 10; ++i) {
      CVec3 u = cs::random_valid_u(rng, 0.5, 0.05);
      Point3 x = random_point(rng, 0.5, 2.0);
      CVec4 k = cs::k_of_u(u);
      CVec4 z{cd(0, 1) * k[0], cd(0, 1) * k[1], cd(0, 1) * k[2], cd(0, 1) * k[3]};
      cd lhs = cs::twistor_kernel(x, z);
      cd rhs = cs::cs_discrete_closed(u, x) / std::sqrt(cs::w_of_u(u).ww / kPi);
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
    add(out, "kernel-discrete", "tube kernel restricts to the bound family", worst,
        opt.tol.kernel_reduction);
  }

  {
    double worst = 0;
    auto p0 = cs::twistor_interior({cd(0), cd(0), cd(0), cd(0)});
    worst = std::max(worst, std::abs(p0.z[0] - cd(0, 1)) + std::abs(p0.z[1]) +
                                std::abs(p0.z[2]) + std::abs(p0.z[3]));
    if (!p0.ok) worst = std::max(worst, 1.0);
    auto p1 = cs::twistor_interior({cd(0), cd(0.5), cd(0), cd(0)});
    CVec4 k1 = cs::k_of_u({cd(0), cd(0.5), cd(0)});
    for (int a = 0; a < 4; ++a)
      worst = std::max(worst, std::abs(p1.z[a] - cd(0, 1) * k1[a]));
    if (!p1.ok) worst = std::max(worst, 1.0);
    for (int i = 0; i < 10; ++i) {
      CVec4 b;
      for (auto& c : b) c = cd(rng.uniform(-0.25, 0.25), rng.uniform(-0.25, 0.25));
      if (!cs::twistor_interior(b).ok) worst = std::max(worst, 1.0);
    }
    add(out, "tube-interior", "bounded ball maps into the forward tube", worst, 1e-12);
  }
}

// ---------------- cs-continuous ----------------

void run_cs_continuous(const Options& opt, num::Rng& rng, std::vector<CheckResult>& out) {
  {
    double worst = cs::verify_mellin(0.0, 0, 0.0, 0.0, opt.tol.mellin_quad_tol);
    for (double rho : {0.0, 0.5, 1.0})
      for (int M : {0, 1, 2})
        for (auto [xi, eta] : {std::pair{0.7, 1.3}, {1.8, 0.4}, {1.0, 1.0}})
          worst = std::max(worst,
                           cs::verify_mellin(rho, M, xi, eta, opt.tol.mellin_quad_tol));
    add(out, "mellin-identity", "line integral equals radial product", worst, opt.tol.mellin);
  }

  {
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
      RVec3 v = random_ball(rng, 0.7);
      Point3 x = random_point(rng, 0.5, 1.5);
      worst = std::max(worst,
                       cs::covariance_check_L06(v, x, opt.tol.fd_step_laplacian, 3e-3));
    }
    add(out, "covariance-l06", "dilation flow covariance", worst, opt.tol.covariance_l06);
  }

  {
    double worst = 0;
    RVec3 d = cs::so41_act(cs::So41::Dilate, {1, 0, 0}, {std::log(2.0), 0, 0});
    worst = std::max({worst, std::abs(d[0] - 2.0), std::abs(d[1]), std::abs(d[2])});
    for (int i = 0; i < 5; ++i) {
      RVec3 v = random_ball(rng, 0.5);
      RVec3 a = random_ball(rng, 0.25), b = random_ball(rng, 0.25);
      RVec3 ab{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
      RVec3 two = cs::so41_act(cs::So41::Special, cs::so41_act(cs::So41::Special, v, a), b);
      RVec3 one = cs::so41_act(cs::So41::Special, v, ab);
      for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(two[k] - one[k]));
      RVec3 z0 = cs::so41_act(cs::So41::Special, {0, 0, 0}, a);
      for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(z0[k]));
      double s = rng.uniform(-0.5, 0.5);
      RVec3 rd = cs::so41_act(cs::So41::Rotate, cs::so41_act(cs::So41::Dilate, v, {s, 0, 0}), a);
      RVec3 dr = cs::so41_act(cs::So41::Dilate, cs::so41_act(cs::So41::Rotate, v, a), {s, 0, 0});
      for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(rd[k] - dr[k]));
      RVec3 tt = cs::so41_act(cs::So41::Translate, cs::so41_act(cs::So41::Translate, v, a), b);
      RVec3 ts = cs::so41_act(cs::So41::Translate, v, ab);
      for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(tt[k] - ts[k]));
    }
    add(out, "group-action", "conformal label action composition", worst, opt.tol.group_action);
  }

  {
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
      RVec3 v = random_ball(rng, 0.8);
      double m = cs::measure_density(v);
      worst = std::max(worst, std::abs(cs::measure_density_fd(v) - m) / std::abs(m));
    }
    add(out, "measure-density", "invariant density, closed vs Jacobian", worst,
        opt.tol.measure_density);
  }

  {
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
      RVec3 v = random_ball(rng, 0.5);
      double e1 = rng.uniform(-0.25, 0.25), e2 = rng.uniform(-0.25, 0.25);
      RVec3 ve = cs::so41_act(cs::So41::Dilate, v, {e1, 0, 0});
      double lhs = cs::dilation_weight(v, e1 + e2);
      double rhs = cs::dilation_weight(v, e1) * cs::dilation_weight(ve, e2);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    add(out, "weight-composition", "dilation cocycle", worst, opt.tol.weight_composition);
  }

  {
    double worst = 0;
    for (int i = 0; i < 10; ++i) {
      RVec3 v = random_ball(rng, 0.7, 0.05);
      Point3 x = random_point(rng, 0.5, 2.0);
      auto k = cs::k_of_v(v);
      CVec4 z{cd(-k[0]), cd(-k[1]), cd(-k[2]), cd(-k[3])};
      cd lhs = cs::twistor_kernel(x, z);
      cd rhs = cs::cs_continuous_closed(v, x);
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
      double vv = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
      RVec3 anti{v[0] / vv, v[1] / vv, v[2] / vv};
      auto ka = cs::k_of_v(anti);
      for (int a = 0; a < 4; ++a) worst = std::max(worst, std::abs(ka[a] + k[a]));
    }
    add(out, "kernel-continuous", "tube kernel restricts to the scattering family", worst,
        opt.tol.kernel_reduction);
  }
}

// ---------------- robertson ----------------

void run_robertson(const Options& opt, std::vector<CheckResult>& out) {
  auto rows = robertson_rows(opt);
  double worst_gap = 0, worst_res = 0;
  int min_rank = 4, max_rank = 4;
  for (const auto& r : rows) {
    worst_gap = std::max(worst_gap, r.gap);
    for (double c : r.residual) worst_res = std::max(worst_res, c);
    min_rank = std::min(min_rank, r.rank);
    max_rank = std::max(max_rank, r.rank);
  }
  add(out, "robertson-gap", "symplectic determinant equality", worst_gap,
      opt.tol.robertson_gap);
  add(out, "robertson-constraints", "null directions of Sigma + i Omega", worst_res,
      opt.tol.robertson_constraint);
  out.push_back({"robertson-rank", "constraint matrix rank", double(min_rank), 4.0,
                 min_rank == 4 && max_rank == 4});

  num::Rng rng(opt.seed + 6007);
  double worst_mc = 0;
  for (int i = 0; i < 3 && i < int(rows.size()); ++i)
    worst_mc = std::max(worst_mc, rob::mc_moments(rows[i].u, opt.mc_samples, rng).max_err);
  add(out, "robertson-mc", "sampled moments match closed blocks", worst_mc,
      opt.tol.robertson_mc);
}

// ---------------- intertwine ----------------

void run_intertwine(const Options& opt, num::Rng& rng, std::vector<CheckResult>& out) {
  {
    std::vector<std::pair<Point3, std::array<cd, 4>>> samples;
    for (int i = 0; i < 10; ++i) {
      Point3 x = random_point(rng, 0.5, 2.0);
      std::array<cd, 4> z;
      for (auto& c : z) c = cd(rng.uniform(-0.35, 0.35), rng.uniform(-0.35, 0.35));
      samples.emplace_back(x, z);
    }
    double worst = gen::check_intertwining(samples, opt.tol.fd_step);
    add(out, "intertwining", "x-side equals z-side on the pairing kernel", worst,
        opt.tol.intertwine);
  }
  {
    double worst = gen::config11_closure_residual(opt.seed + 17, 2);
    add(out, "config11-closure", "bracket closure by nested differences", worst,
        opt.tol.config11_closure);
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "algebra", "states", "cs-discrete", "cs-continuous", "robertson", "intertwine", "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<RobRow> robertson_rows(const Options& opt, int count) {
  num::Rng rng(opt.seed + 4);  // matches the robertson slot in run_suite
  std::vector<RobRow> rows;
  rows.reserve(count);
  for (int i = 0; i < count; ++i) {
    RobRow row;
    row.u = cs::random_valid_u(rng, 0.5, 0.05);
    auto mom = rob::closed_moments(row.u);
    row.det_sigma = mom.det_sigma;
    row.det_omega = mom.det_omega;
    row.gap = mom.gap;
    auto con = rob::constraint_check(row.u);
    row.residual = con.residual;
    row.rank = con.rank;
    rows.push_back(row);
  }
  return rows;
}

rep::SuiteReport run_suite(const std::string& name, const Options& opt) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite: " + name);

  rep::SuiteReport report;
  report.suite = name;
  report.seed = opt.seed;
  report.config = opt.tol.as_map();
  report.config["trunc"] = double(opt.trunc);
  report.config["mc_samples"] = double(opt.mc_samples);

  auto dispatch = [&](const std::string& s) {
    // per-suite streams: suite index fixes the seed offset so a single-suite
    // run reproduces exactly its slice of "all"
    const auto& names = suite_names();
    std::uint64_t idx = std::find(names.begin(), names.end(), s) - names.begin();
    num::Rng rng(opt.seed + idx);
    if (s == "algebra") run_algebra(opt, rng, report.checks);
    else if (s == "states") run_states(opt, rng, report.checks);
    else if (s == "cs-discrete") run_cs_discrete(opt, rng, report.checks);
    else if (s == "cs-continuous") run_cs_continuous(opt, rng, report.checks);
    else if (s == "robertson") run_robertson(opt, report.checks);
    else if (s == "intertwine") run_intertwine(opt, rng, report.checks);
  };

  if (name == "all") {
    for (const auto& s : suite_names())
      if (s != "all") dispatch(s);
  } else {
    dispatch(name);
  }
  return report;
}

}  // namespace hacs::suites
