#include "hacs/hydrogen.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "hacs/numerics.hpp"
#include "hacs/specfun.hpp"

namespace hacs::hyd {

namespace {
const double kPi = 3.141592653589793238462643383279502884;
const double kTwoPi = 2.0 * kPi;
}  // namespace

double Point3::r() const { return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3); }

int DiscreteLabel::n() const { return n1 + n2 + std::abs(m) + 1; }

LightConeVector ks_map(double xi1, double xi2, double eta1, double eta2) {
  LightConeVector n;
  n.n0 = 0.5 * (xi1 * xi1 + xi2 * xi2 + eta1 * eta1 + eta2 * eta2);
  n.n1 = xi1 * eta1 + xi2 * eta2;
  n.n2 = xi2 * eta1 - xi1 * eta2;
  n.n3 = 0.5 * (xi1 * xi1 + xi2 * xi2 - eta1 * eta1 - eta2 * eta2);
  return n;
}

LightConeVector lightcone_of(const Point3& x) {
  return LightConeVector{x.r(), x.x1, x.x2, x.x3};
}

ParabolicPoint parabolic_of(const Point3& x) {
  double r = x.r();
  ParabolicPoint p;
  p.xi = std::sqrt(std::max(0.0, r + x.x3));
  p.eta = std::sqrt(std::max(0.0, r - x.x3));
  p.phi = std::atan2(x.x2, x.x1);
  if (p.phi < 0) p.phi += kTwoPi;
  return p;
}

Point3 point_of(const ParabolicPoint& p) {
  return Point3{p.xi * p.eta * std::cos(p.phi), p.xi * p.eta * std::sin(p.phi),
                0.5 * (p.xi * p.xi - p.eta * p.eta)};
}

double phi_radial_discrete(int n, int m_abs, double xi) {
  double s = xi * xi;
  double norm = 1.0;
  for (int j = 1; j <= m_abs; ++j) norm /= std::sqrt(double(n + j));
  return std::exp(-0.5 * s) * std::pow(xi, m_abs) * norm * sf::laguerre(n, m_abs, s);
}

cd psi_discrete(const DiscreteLabel& l, const Point3& x, bool physical) {
  Point3 y = x;
  if (physical) {
    double n = l.n();
    y = Point3{x.x1 / n, x.x2 / n, x.x3 / n};
  }
  ParabolicPoint p = parabolic_of(y);
  int ma = std::abs(l.m);
  int sign_exp = l.n1 + (l.m - ma) / 2;
  double sgn = (sign_exp % 2 == 0) ? 1.0 : -1.0;
  double rad = phi_radial_discrete(l.n1, ma, p.xi) * phi_radial_discrete(l.n2, ma, p.eta);
  return sgn / std::sqrt(kPi) * std::exp(cd(0.0, l.m * p.phi)) * rad;
}

double energy(const DiscreteLabel& l) {
  double n = l.n();
  return -0.5 / (n * n);
}

double energy(const ContinuousLabel& l) {
  double s = l.rho1 + l.rho2;
  if (s == 0.0) throw std::domain_error("energy: rho1 + rho2 = 0");
  return 0.5 / (s * s);
}

namespace {
cd phi_cont_complex(double rho, int m_abs, double xi) {
  double s = xi * xi;
  cd a(0.5 * (m_abs + 1), -rho);
  cd g = std::exp(cd(0.0, 0.5 * s)) * sf::hyp1f1(a, m_abs + 1, cd(0.0, -s));
  double pre = 1.0 / std::sqrt(kTwoPi * std::exp(kPi * rho)) * std::abs(sf::gamma(a));
  double fac = 1.0;
  for (int j = 1; j <= m_abs; ++j) fac *= j;
  return pre / fac * std::pow(xi, m_abs) * g;
}
}  // namespace

double phi_radial_continuous(double rho, int m_abs, double xi) {
  return phi_cont_complex(rho, m_abs, xi).real();
}

double phi_radial_continuous_imag(double rho, int m_abs, double xi) {
  return std::abs(phi_cont_complex(rho, m_abs, xi).imag());
}

cd psi_continuous(const ContinuousLabel& l, const Point3& x, bool physical) {
  Point3 y = x;
  if (physical) {
    double s = l.rho1 + l.rho2;
    y = Point3{x.x1 / s, x.x2 / s, x.x3 / s};
  }
  ParabolicPoint p = parabolic_of(y);
  int ma = std::abs(l.m);
  double rad = phi_radial_continuous(l.rho1, ma, p.xi) * phi_radial_continuous(l.rho2, ma, p.eta);
  return std::exp(cd(0.0, l.m * p.phi)) * rad;
}

namespace {
template <class F>
double residual_impl(F&& psi, double E, const Point3& x, double h) {
  if (x.r() <= 3.0 * h) throw std::domain_error("schrodinger_residual: too close to the origin");
  auto lap_axis = [&](int axis) {
    auto g = [&](double t) {
      Point3 y = x;
      (axis == 0 ? y.x1 : axis == 1 ? y.x2 : y.x3) += t;
      return psi(y);
    };
    return num::fd_d2(g, 0.0, h);
  };
  cd lap = lap_axis(0) + lap_axis(1) + lap_axis(2);
  cd val = psi(x);
  cd res = -0.5 * lap - val / x.r() - E * val;
  return std::abs(res) / std::max(std::abs(val), 1e-8);
}
}  // namespace

double schrodinger_residual(const DiscreteLabel& l, const Point3& x, double h) {
  return residual_impl([&](const Point3& y) { return psi_discrete(l, y, true); }, energy(l), x,
                       h);
}

double schrodinger_residual(const ContinuousLabel& l, const Point3& x, double h) {
  return residual_impl([&](const Point3& y) { return psi_continuous(l, y, true); }, energy(l),
                       x, h);
}

std::vector<DiscreteLabel> labels_up_to_n(int nmax) {
  std::vector<DiscreteLabel> out;
  for (int n = 1; n <= nmax; ++n)
    for (int m = -(n - 1); m <= n - 1; ++m)
      for (int n1 = 0; n1 + std::abs(m) <= n - 1; ++n1)
        out.push_back(DiscreteLabel{n1, n - 1 - std::abs(m) - n1, m});
  return out;
}

std::vector<std::vector<cd>> gram_matrix(const std::vector<DiscreteLabel>& labels, int nrad,
                                         int nphi) {
  // The integrand factorizes as radial(xi^2) * radial(eta^2) * e^{i(mb-ma)phi},
  // so the triple quadrature sum is evaluated factor by factor.
  auto gl = num::QuadratureRule::gauss_laguerre(nrad);
  size_t L = labels.size();

  // radial overlap I(n, n', M) = sum_i w_i s^M sqrt(n!/(n+M)!) sqrt(n'!/(n'+M)!) L_n L_n'
  auto radial_overlap = [&](int na, int nb, int M) {
    double norm = 1.0;
    for (int j = 1; j <= M; ++j) norm /= std::sqrt(double(na + j) * double(nb + j));
    double acc = 0.0;
    for (int i = 0; i < nrad; ++i) {
      double s = gl.x[i];
      double sm = 1.0;
      for (int k = 0; k < M; ++k) sm *= s;
      acc += gl.w[i] * sm * sf::laguerre(na, M, s) * sf::laguerre(nb, M, s);
    }
    return acc * norm;
  };

  // phi factor by the uniform rule (exact for |mb - ma| < nphi)
  auto phi_factor = [&](int dm) {
    cd acc(0.0, 0.0);
    for (int k = 0; k < nphi; ++k) {
      double phi = kTwoPi * k / nphi;
      acc += std::exp(cd(0.0, dm * phi));
    }
    return acc * (kTwoPi / double(nphi));
  };

  std::vector<std::vector<cd>> G(L, std::vector<cd>(L));
  for (size_t a = 0; a < L; ++a)
    for (size_t b = 0; b < L; ++b) {
      const auto& la = labels[a];
      const auto& lb = labels[b];
      cd pf = phi_factor(lb.m - la.m);
      if (std::abs(pf) < 1e-14) {
        G[a][b] = 0.0;
        continue;
      }
      int Ma = std::abs(la.m), Mb = std::abs(lb.m);
      // different |m| with equal m cannot happen; equal m means equal M
      double sa = ((la.n1 + (la.m - Ma) / 2) % 2 == 0) ? 1.0 : -1.0;
      double sb = ((lb.n1 + (lb.m - Mb) / 2) % 2 == 0) ? 1.0 : -1.0;
      double rad = radial_overlap(la.n1, lb.n1, Ma) * radial_overlap(la.n2, lb.n2, Ma);
      G[a][b] = sa * sb / kPi * 0.5 * pf * rad;
    }
  return G;
}

double gram_identity_error(const std::vector<DiscreteLabel>& labels, int nrad, int nphi) {
  auto G = gram_matrix(labels, nrad, nphi);
  double err = 0.0;
  for (size_t a = 0; a < G.size(); ++a)
    for (size_t b = 0; b < G.size(); ++b) {
      cd want = (a == b) ? cd(1.0, 0.0) : cd(0.0, 0.0);
      err = std::max(err, std::abs(G[a][b] - want));
    }
  return err;
}

}  // namespace hacs::hyd
