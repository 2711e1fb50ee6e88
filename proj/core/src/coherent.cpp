#include "hacs/coherent.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hacs/numerics.hpp"
#include "hacs/specfun.hpp"

namespace hacs::cs {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr cd kI{0.0, 1.0};

double vdot(const RVec3& a, const RVec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

CVec3 scale_u(const CVec3& u, cd s) { return {u[0] * s, u[1] * s, u[2] * s}; }

double abs2(cd z) { return z.real() * z.real() + z.imag() * z.imag(); }

}  // namespace

cd dot(const CVec3& a, const CVec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

UValidity classify_u(const CVec3& u) {
  UValidity v;
  cd uu = dot(u, u);
  v.uu_abs = std::abs(uu);
  double uus = abs2(u[0]) + abs2(u[1]) + abs2(u[2]);
  v.h = 1.0 - 2.0 * uus + v.uu_abs * v.uu_abs;
  if (v.uu_abs >= 1.0) {
    v.violated = "|u.u| >= 1";
  } else if (v.h <= 0.0) {
    v.violated = "1 - 2 u.u* + |u.u|^2 <= 0";
  } else {
    v.ok = true;
  }
  return v;
}

bool valid_u(const CVec3& u) { return classify_u(u).ok; }

double h_of_u(const CVec3& u) { return classify_u(u).h; }

CVec3 random_valid_u(num::Rng& rng, double radius, double min_h) {
  for (;;) {
    CVec3 u;
    for (auto& c : u) c = cd(rng.uniform(-radius, radius), rng.uniform(-radius, radius));
    auto v = classify_u(u);
    if (v.ok && v.h > min_h) return u;
  }
}

CVec4 k_of_u(const CVec3& u) {
  cd uu = dot(u, u);
  cd den = 1.0 - uu;
  if (den == cd(0.0)) throw std::domain_error("k_of_u: u.u = 1");
  return {(1.0 + uu) / den, 2.0 * u[0] / den, 2.0 * u[1] / den, 2.0 * u[2] / den};
}

WVector w_of_u(const CVec3& u) {
  CVec4 k = k_of_u(u);
  WVector wv;
  for (int i = 0; i < 4; ++i) wv.w[i] = k[i].real();
  wv.ww = wv.w[0] * wv.w[0] - wv.w[1] * wv.w[1] - wv.w[2] * wv.w[2] - wv.w[3] * wv.w[3];
  return wv;
}

double w_norm_sq_closed(const CVec3& u) {
  cd den = 1.0 - dot(u, u);
  if (den == cd(0.0)) throw std::domain_error("w_norm_sq_closed: u.u = 1");
  return h_of_u(u) / abs2(den);
}

double w_norm_sq_alt(const CVec3& u) {
  cd den = 1.0 + dot(u, u);
  if (den == cd(0.0)) throw std::domain_error("w_norm_sq_alt: u.u = -1");
  return h_of_u(u) / abs2(den);
}

double c0_norm_sq(const CVec3& u) {
  double uu_abs = std::abs(dot(u, u));
  if (uu_abs == 0.0) throw std::domain_error("c0_norm_sq: u.u = 0");
  return h_of_u(u) / uu_abs;
}

cd c0_of_u(const CVec3& u) {
  cd uu = dot(u, u);
  if (uu == cd(0.0)) throw std::domain_error("c0_of_u: u.u = 0");
  return std::sqrt(cd(w_norm_sq_closed(u))) * (1.0 - uu) / std::sqrt(-uu);
}

cd cs_discrete_closed(const CVec3& u, const Point3& x) {
  WVector wv = w_of_u(u);
  if (wv.ww <= 0.0) throw std::domain_error("cs_discrete_closed: w.w <= 0");
  CVec4 k = k_of_u(u);
  cd kn = k[0] * x.r() - k[1] * x.x1 - k[2] * x.x2 - k[3] * x.x3;
  return std::sqrt(wv.ww / kPi) * std::exp(-kn);
}

CVec3 u_of_series(cd lambda1, cd lambda2) {
  return {(lambda1 - lambda2) / 2.0, kI * (lambda1 + lambda2) / 2.0, cd(0.0)};
}

cd cs_discrete_series(cd lambda1, cd lambda2, const Point3& x, int nmax) {
  CVec3 u = u_of_series(lambda1, lambda2);
  cd uu = dot(u, u);  // -lambda1 lambda2
  WVector wv = w_of_u(u);
  if (wv.ww <= 0.0) throw std::domain_error("cs_discrete_series: w.w <= 0");
  cd pref = std::sqrt(cd(wv.ww)) * (1.0 - uu);

  // c0 q^{2n+|m|+1} t^m collapses to integer powers l1^{n+(|m|+m)/2} l2^{n+(|m|-m)/2}
  // once one q is folded into c0; this form is branch-free in (l1, l2).
  std::vector<cd> p1(2 * nmax + 1), p2(2 * nmax + 1);
  p1[0] = p2[0] = 1.0;
  for (int j = 1; j <= 2 * nmax; ++j) {
    p1[j] = p1[j - 1] * lambda1;
    p2[j] = p2[j - 1] * lambda2;
  }

  cd sum = 0.0;
  for (int n = 0; n <= nmax; ++n) {
    for (int m = -nmax; m <= nmax; ++m) {
      int M = std::abs(m);
      cd coeff = p1[n + (M + m) / 2] * p2[n + (M - m) / 2];
      sum += coeff * hyd::psi_discrete({n, n, m}, x);
    }
  }
  return pref * sum;
}

cd cs_1d_reduction(const CVec3& u, double x3) {
  CVec4 k = k_of_u(u);
  if (std::abs(k[1]) + std::abs(k[2]) > 1e-12 * (1.0 + std::abs(k[0])))
    throw std::domain_error("cs_1d_reduction: transverse k components nonzero");
  WVector wv = w_of_u(u);
  if (wv.ww <= 0.0) throw std::domain_error("cs_1d_reduction: w.w <= 0");
  return std::sqrt(wv.ww / kPi) * std::exp(-k[0] * std::abs(x3) + k[3] * x3);
}

double cs_norm_quadrature(const CVec3& u, int nrad, int nphi) {
  WVector wv = w_of_u(u);
  double A = wv.w[0] - wv.w[3];
  double B = wv.w[0] + wv.w[3];
  if (A <= 0.0 || B <= 0.0 || wv.ww <= 0.0)
    throw std::domain_error("cs_norm_quadrature: label outside the valid set");
  double c1 = wv.w[1], c2 = wv.w[2];

  auto gl = num::QuadratureRule::gauss_laguerre(nrad);
  auto ph = num::QuadratureRule::uniform_periodic(nphi);

  // s = y/A, t = y'/B turns (1/2) int |cs|^2 ds dt dphi into a doubly
  // exponential-weighted integral the Laguerre rule handles directly; the
  // cross term stays subdominant because c1^2 + c2^2 < A B (that is w.w > 0).
  double inv_rt_ab = 1.0 / std::sqrt(A * B);
  double total = 0.0;
  for (int i = 0; i < nrad; ++i) {
    for (int j = 0; j < nrad; ++j) {
      double amp = 2.0 * std::sqrt(gl.x[i] * gl.x[j]) * inv_rt_ab;
      double wij = gl.w[i] * gl.w[j];  // native weights pair with e^{-y-y'}
      double phi_sum = 0.0;
      for (int p = 0; p < nphi; ++p) {
        double cross = amp * (c1 * std::cos(ph.x[p]) + c2 * std::sin(ph.x[p]));
        phi_sum += ph.w[p] * std::exp(cross);
      }
      total += wij * phi_sum;
    }
  }
  return 0.5 * (wv.ww / kPi) / (A * B) * total;
}

namespace {

cd orbit_weight_l50(const CVec3& u, double eps) {
  cd uu = dot(u, u);
  cd e2 = std::exp(cd(0.0, 2.0 * eps));
  CVec3 ue = scale_u(u, std::exp(cd(0.0, eps)));
  double ww_u = w_norm_sq_closed(u);
  double ww_e = w_norm_sq_closed(ue);
  return std::exp(cd(0.0, eps)) * std::sqrt(ww_u / ww_e) * (1.0 - uu) / (1.0 - uu * e2);
}

template <class F>
cd fd_laplacian(F&& psi, const Point3& x, double h) {
  cd lap = 0.0;
  for (int axis = 0; axis < 3; ++axis) {
    auto slice = [&](double d) {
      Point3 y = x;
      (axis == 0 ? y.x1 : axis == 1 ? y.x2 : y.x3) += d;
      return psi(y);
    };
    lap += num::fd_d2(slice, 0.0, h);
  }
  return lap;
}

}  // namespace

double covariance_check_L50(const CVec3& u, const Point3& x, double h, double h_eps) {
  auto psi = [&](const Point3& y) { return cs_discrete_closed(u, y); };
  cd lap = fd_laplacian(psi, x, h);
  double r = x.r();
  cd lhs = kI * 0.5 * (-r * lap + r * psi(x));

  auto flow = [&](double eps) {
    CVec3 ue = scale_u(u, std::exp(cd(0.0, eps)));
    return orbit_weight_l50(u, eps) * cs_discrete_closed(ue, x);
  };
  cd rhs = num::fd_d1(flow, 0.0, h_eps);

  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

RVec4 k_of_v(const RVec3& v) {
  double vv = vdot(v, v);
  double den = 1.0 - vv;
  if (den == 0.0) throw std::domain_error("k_of_v: v.v = 1");
  return {(1.0 + vv) / den, 2.0 * v[0] / den, 2.0 * v[1] / den, 2.0 * v[2] / den};
}

cd cs_continuous_closed(const RVec3& v, const Point3& x) {
  RVec4 k = k_of_v(v);
  double kn = k[0] * x.r() - k[1] * x.x1 - k[2] * x.x2 - k[3] * x.x3;
  return std::polar(1.0, -kn);
}

RVec3 so41_act(So41 kind, const RVec3& v, const RVec3& a) {
  switch (kind) {
    case So41::Translate:
      return {v[0] - a[0], v[1] - a[1], v[2] - a[2]};
    case So41::Special: {
      double vv = vdot(v, v), aa = vdot(a, a), va = vdot(v, a);
      double den = 1.0 + 2.0 * va + vv * aa;
      if (den == 0.0) throw std::domain_error("so41_act: singular special-conformal denominator");
      return {(v[0] + a[0] * vv) / den, (v[1] + a[1] * vv) / den, (v[2] + a[2] * vv) / den};
    }
    case So41::Dilate: {
      double s = std::exp(a[0]);
      return {v[0] * s, v[1] * s, v[2] * s};
    }
    case So41::Rotate: {
      double th = std::sqrt(vdot(a, a));
      if (th == 0.0) return v;
      RVec3 n{a[0] / th, a[1] / th, a[2] / th};
      double c = std::cos(th), s = std::sin(th), nv = vdot(n, v);
      RVec3 nxv{n[1] * v[2] - n[2] * v[1], n[2] * v[0] - n[0] * v[2], n[0] * v[1] - n[1] * v[0]};
      return {v[0] * c + nxv[0] * s + n[0] * nv * (1.0 - c),
              v[1] * c + nxv[1] * s + n[1] * nv * (1.0 - c),
              v[2] * c + nxv[2] * s + n[2] * nv * (1.0 - c)};
    }
  }
  throw std::logic_error("so41_act: unknown kind");
}

double measure_density(const RVec3& v) {
  double den = 1.0 - vdot(v, v);
  if (den == 0.0) throw std::domain_error("measure_density: v.v = 1");
  return 8.0 / (den * den * den);
}

double measure_density_fd(const RVec3& v, double h) {
  std::vector<std::vector<double>> jac(3, std::vector<double>(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      auto ki = [&](double d) {
        RVec3 vv = v;
        vv[j] += d;
        return k_of_v(vv)[i + 1];
      };
      jac[i][j] = num::fd_d1(ki, 0.0, h);
    }
  }
  return std::abs(num::dense_det(jac)) / k_of_v(v)[0];
}

double dilation_weight(const RVec3& v, double eps) {
  double vv = vdot(v, v);
  double den = 1.0 - vv * std::exp(2.0 * eps);
  if (den == 0.0) throw std::domain_error("dilation_weight: flow hits v.v = 1");
  return std::exp(eps) * (1.0 - vv) / den;
}

double covariance_check_L06(const RVec3& v, const Point3& x, double h, double h_eps) {
  auto psi = [&](const Point3& y) { return cs_continuous_closed(v, y); };
  cd lap = fd_laplacian(psi, x, h);
  double r = x.r();
  cd lhs = kI * 0.5 * r * (lap + psi(x));

  auto flow = [&](double eps) {
    RVec3 ve{v[0] * std::exp(eps), v[1] * std::exp(eps), v[2] * std::exp(eps)};
    return cd(dilation_weight(v, eps)) * cs_continuous_closed(ve, x);
  };
  cd rhs = num::fd_d1(flow, 0.0, h_eps);

  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

double verify_mellin(double rho, int m_abs, double xi, double eta, double quad_tol) {
  auto f = [&](double w) -> cd {
    double sech = 1.0 / std::cosh(w);
    double tanh = std::tanh(w);
    cd osc = std::exp(cd(0.0, 2.0 * rho * w + 0.5 * (xi * xi + eta * eta) * tanh));
    return osc * sech * sf::bessel_i(m_abs, cd(xi * eta * sech));
  };
  cd lhs = 0.5 * num::integrate_adaptive(f, -40.0, 40.0, quad_tol);
  double rhs = kPi * std::exp(kPi * rho) * hyd::phi_radial_continuous(rho, m_abs, xi) *
               hyd::phi_radial_continuous(rho, m_abs, eta);
  return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-30});
}

double packet_norm_ratio(double center, double sigma, double smax, int nrho, int ns) {
  auto rule = num::QuadratureRule::gauss_legendre(nrho, center - 6.0 * sigma, center + 6.0 * sigma);
  auto g = [&](double rho) {
    double d = (rho - center) / sigma;
    return std::exp(-0.5 * d * d);
  };

  // e^{pi rho} phi is the delta-normalized mode in the d(xi^2) measure.
  auto packet = [&](double s) {
    double xi = std::sqrt(s);
    double acc = 0.0;
    for (int k = 0; k < nrho; ++k)
      acc += rule.w[k] * g(rule.x[k]) * std::exp(M_PI * rule.x[k]) *
             hyd::phi_radial_continuous(rule.x[k], 0, xi);
    return acc;
  };

  // composite Simpson over s in [0, smax]
  if (ns % 2) ++ns;
  double hstep = smax / ns;
  double mass = 0.0;
  for (int j = 0; j <= ns; ++j) {
    double f = packet(j * hstep);
    double wj = (j == 0 || j == ns) ? 1.0 : (j % 2 ? 4.0 : 2.0);
    mass += wj * f * f;
  }
  mass *= hstep / 3.0;

  double gg = 0.0;
  for (int k = 0; k < nrho; ++k) gg += rule.w[k] * g(rule.x[k]) * g(rule.x[k]);
  return mass / gg;
}

cd twistor_kernel(const Point3& x, const CVec4& z) {
  cd nz = x.r() * z[0] - x.x1 * z[1] - x.x2 * z[2] - x.x3 * z[3];
  return std::exp(kI * nz);
}

InteriorPoint twistor_interior(const CVec4& b) {
  InteriorPoint out;
  cd q = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
  cd nb = b[3] * b[3] - q;
  double s2 = abs2(b[0]) + abs2(b[1]) + abs2(b[2]) + abs2(b[3]);
  double hb = 1.0 - 2.0 * s2 + abs2(nb);
  if (std::abs(nb) >= 1.0 || hb <= 0.0) {
    out.violated = "input outside the bounded ball";
    return out;
  }
  cd den = (1.0 - b[3]) * (1.0 - b[3]) - q;
  if (den == cd(0.0)) {
    out.violated = "degenerate map denominator";
    return out;
  }
  out.z = {kI * (1.0 - b[3] * b[3] + q) / den, 2.0 * kI * b[0] / den, 2.0 * kI * b[1] / den,
           2.0 * kI * b[2] / den};
  double y0 = out.z[0].imag(), y1 = out.z[1].imag(), y2 = out.z[2].imag(), y3 = out.z[3].imag();
  if (y0 <= 0.0 || y0 * y0 - y1 * y1 - y2 * y2 - y3 * y3 <= 0.0) {
    out.violated = "image outside the forward tube";
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace hacs::cs
