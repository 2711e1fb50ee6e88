#pragma once

// Shared numerical infrastructure: fixed quadrature rules (Gauss-Legendre,
// Gauss-Laguerre, uniform periodic), an adaptive Gauss-Kronrod integrator,
// central finite-difference stencils, small dense linear algebra via LU with
// partial pivoting, and a deterministic RNG (mt19937_64 + own Box-Muller so
// streams are reproducible for a given seed regardless of library version).

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace hacs::num {

struct QuadratureRule {
  enum class Kind { GaussLegendre, GaussLaguerre, UniformPeriodic };
  Kind kind;
  std::vector<double> x;   // nodes
  std::vector<double> w;   // weights against the rule's native measure
  std::vector<double> we;  // Gauss-Laguerre only: w * e^x, for plain dx integrands

  // n-node rule on [a,b], exact on polynomials of degree <= 2n-1.
  static QuadratureRule gauss_legendre(int n, double a, double b);
  // n-node rule for integrals over [0,inf) with weight e^{-x} (w) or dx (we).
  static QuadratureRule gauss_laguerre(int n);
  // n equispaced nodes on [0, period), weight period/n; exact for harmonics |m| < n.
  static QuadratureRule uniform_periodic(int n, double period = 6.283185307179586476925286766559005768);
};

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f);
std::complex<double> integrate(const QuadratureRule& rule,
                               const std::function<std::complex<double>(double)>& f);

// Adaptive Gauss-Kronrod (G7,K15) bisection to the requested absolute tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, int max_depth = 48);
std::complex<double> integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                                        double a, double b, double tol, int max_depth = 48);

struct FDStencil {
  int order = 1;     // 1 or 2
  int accuracy = 4;  // 2 or 4
  double h = 1e-4;
};

// Central finite differences, templated so they run on double or long double
// abscissas and on real or complex values.
template <class S, class F>
auto fd_d1(F&& f, S x, S h) -> decltype(f(x)) {
  return (f(x - 2 * h) - f(x + 2 * h) + S(8) * (f(x + h) - f(x - h))) / (S(12) * h);
}
template <class S, class F>
auto fd_d2(F&& f, S x, S h) -> decltype(f(x)) {
  return (-f(x + 2 * h) - f(x - 2 * h) + S(16) * (f(x + h) + f(x - h)) - S(30) * f(x)) /
         (S(12) * h * h);
}
template <class S, class F>
auto fd_d1_o2(F&& f, S x, S h) -> decltype(f(x)) {
  return (f(x + h) - f(x - h)) / (S(2) * h);
}
template <class S, class F>
auto fd_d2_o2(F&& f, S x, S h) -> decltype(f(x)) {
  return (f(x + h) - S(2) * f(x) + f(x - h)) / (h * h);
}

double fd_derivative(const FDStencil& st, const std::function<double(double)>& f, double x);
std::complex<double> fd_derivative(const FDStencil& st,
                                   const std::function<std::complex<double>(double)>& f,
                                   double x);

// Dense LU with partial pivoting, n <= 16.
double dense_det(std::vector<std::vector<double>> m);
std::complex<double> dense_det(std::vector<std::vector<std::complex<double>>> m);
int dense_rank(std::vector<std::vector<double>> m, double tol = 1e-10);
int dense_rank(std::vector<std::vector<std::complex<double>>> m, double tol = 1e-10);
std::vector<double> dense_solve(std::vector<std::vector<double>> m, std::vector<double> rhs);
std::vector<std::vector<double>> dense_inverse(std::vector<std::vector<double>> m);

struct Rng {
  std::mt19937_64 eng;
  bool have_spare = false;
  double spare = 0.0;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  double uniform() {  // [0,1), 53-bit
    return double(eng() >> 11) * 0x1.0p-53;
  }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  double normal();  // Box-Muller, deterministic draw order
};

// Every tolerance and step used by the verification checks, in one record so
// the CLI can override any of them by key and reports can echo them.
struct Tolerances {
  double annihilation_float = 1e-10;
  double gram = 1e-8;
  double schrodinger_discrete = 1e-5;
  double schrodinger_continuous = 1e-4;
  double series_closed = 1e-8;
  double norm_quadrature = 1e-8;
  double bilinear_laguerre = 1e-8;
  double bessel_sum = 1e-10;
  double robertson_gap = 1e-10;
  double robertson_mc = 0.05;
  double robertson_constraint = 1e-10;
  double mellin = 1e-4;
  double covariance_l50 = 1e-6;
  double covariance_l06 = 1e-5;
  double intertwine = 1e-6;
  double kernel_reduction = 1e-12;
  double config11_closure = 1e-5;
  double packet_norm = 0.05;
  double group_action = 1e-12;
  double weight_composition = 1e-10;
  double measure_density = 1e-6;

  double fd_step = 1e-4;            // first derivatives and epsilon derivatives
  double fd_step_laplacian = 1e-3;  // second derivatives in x
  double mellin_quad_tol = 1e-6;

  bool set(const std::string& key, double val);
  std::map<std::string, double> as_map() const;
};

}  // namespace hacs::num
