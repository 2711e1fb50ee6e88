#pragma once

// Coordinate systems, the null-cone map from R^4, the discrete and continuous
// basis functions, energies, and finite-difference Schrodinger residuals.
// Units are fixed: hbar = mu = e = 1, so the length scale is 1 and the energy
// scale is 1/2; dimensionless states turn physical by rescaling the argument.

#include <complex>
#include <vector>

namespace hacs::hyd {

using cd = std::complex<double>;

struct Point3 {
  double x1 = 0, x2 = 0, x3 = 0;
  double r() const;
};

struct ParabolicPoint {
  double xi = 0, eta = 0, phi = 0;  // x1 = xi eta cos phi, x2 = xi eta sin phi,
                                    // x3 = (xi^2 - eta^2)/2, r = (xi^2 + eta^2)/2
};

struct LightConeVector {
  double n0 = 0, n1 = 0, n2 = 0, n3 = 0;  // n.n = 0 by construction, n0 = r
};

struct DiscreteLabel {
  int n1 = 0, n2 = 0, m = 0;
  int n() const;  // principal quantum number n1 + n2 + |m| + 1
};

struct ContinuousLabel {
  double rho1 = 0, rho2 = 0;
  int m = 0;
};

// Quadratic map R^4 -> light cone, in the orientation with n2 = xi2 eta1 - xi1 eta2.
LightConeVector ks_map(double xi1, double xi2, double eta1, double eta2);
LightConeVector lightcone_of(const Point3& x);  // (r, x)
ParabolicPoint parabolic_of(const Point3& x);
Point3 point_of(const ParabolicPoint& p);

// e^{-xi^2/2} xi^M sqrt(n!/(n+M)!) L_n^M(xi^2); orthonormal in d(xi^2).
double phi_radial_discrete(int n, int m_abs, double xi);

// (-1)^{n1+(m-|m|)/2} e^{im phi} / sqrt(pi) * phi_{n1|m|}(xi) phi_{n2|m|}(eta).
// physical = true evaluates at x/n (bound state of energy -1/(2 n^2)).
cd psi_discrete(const DiscreteLabel& l, const Point3& x, bool physical = false);

double energy(const DiscreteLabel& l);    // -1/(2 n^2)
double energy(const ContinuousLabel& l);  // +1/(2 (rho1+rho2)^2)

// Real continuous-spectrum radial function:
// (2 pi e^{pi rho})^{-1/2} |Gamma((M+1)/2 - i rho)| / M! * xi^M
//   * Re[e^{i xi^2/2} 1F1((M+1)/2 - i rho, M+1, -i xi^2)].
double phi_radial_continuous(double rho, int m_abs, double xi);
// Magnitude of the imaginary part the Re[] discards (realness certificate).
double phi_radial_continuous_imag(double rho, int m_abs, double xi);

// e^{im phi} phi_{rho1|m|}(xi) phi_{rho2|m|}(eta); physical rescales by rho1+rho2.
cd psi_continuous(const ContinuousLabel& l, const Point3& x, bool physical = false);

// |(-(1/2) Lap_FD - 1/r - E) Psi| / max(|Psi|, floor), 4th-order Laplacian.
double schrodinger_residual(const DiscreteLabel& l, const Point3& x, double h);
double schrodinger_residual(const ContinuousLabel& l, const Point3& x, double h);

std::vector<DiscreteLabel> labels_up_to_n(int nmax);

// Gram matrix of the given labels under the light-cone measure
// r^{-1} d^3x = (1/2) d(xi^2) d(eta^2) dphi, by Gauss-Laguerre^2 x uniform phi.
std::vector<std::vector<cd>> gram_matrix(const std::vector<DiscreteLabel>& labels,
                                         int nrad = 64, int nphi = 64);
double gram_identity_error(const std::vector<DiscreteLabel>& labels, int nrad = 64,
                           int nphi = 64);

}  // namespace hacs::hyd
