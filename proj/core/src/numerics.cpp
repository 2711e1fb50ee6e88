#include "hacs/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace hacs::num {

QuadratureRule QuadratureRule::gauss_legendre(int n, double a, double b) {
  QuadratureRule r;
  r.kind = Kind::GaussLegendre;
  r.x.resize(n);
  r.w.resize(n);
  const long double eps = 1e-17L;
  int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    long double z = cosl(3.141592653589793238L * (i + 0.75L) / (n + 0.5L));
    long double pp = 0;
    for (int it = 0; it < 100; ++it) {
      long double p0 = 1, p1 = 0;
      for (int j = 0; j < n; ++j) {
        long double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * z * p1 - j * p2) / (j + 1);
      }
      pp = n * (z * p0 - p1) / (z * z - 1);
      long double dz = p0 / pp;
      z -= dz;
      if (fabsl(dz) < eps) break;
    }
    long double xm = 0.5L * (b + a), xl = 0.5L * (b - a);
    r.x[i] = double(xm - xl * z);
    r.x[n - 1 - i] = double(xm + xl * z);
    double wv = double(2.0L * xl / ((1 - z * z) * pp * pp));
    r.w[i] = wv;
    r.w[n - 1 - i] = wv;
  }
  return r;
}

QuadratureRule QuadratureRule::gauss_laguerre(int n) {
  QuadratureRule r;
  r.kind = Kind::GaussLaguerre;
  r.x.resize(n);
  r.w.resize(n);
  r.we.resize(n);
  const long double eps = 1e-16L;
  long double z = 0;
  for (int i = 0; i < n; ++i) {
    if (i == 0)
      z = 3.0L / (1 + 2.4L * n);
    else if (i == 1)
      z += 15.0L / (1 + 2.5L * n);
    else
      z += ((1 + 2.55L * (i - 1)) / (1.9L * (i - 1))) * (z - r.x[i - 2]);
    long double p0 = 0, p1 = 0, pp = 0;
    for (int it = 0; it < 200; ++it) {
      p0 = 1;
      p1 = 0;
      for (int j = 0; j < n; ++j) {
        long double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1 - z) * p1 - j * p2) / (j + 1);
      }
      pp = n * (p0 - p1) / z;  // dL_n/dx = n (L_n - L_{n-1}) / x
      long double dz = p0 / pp;
      z -= dz;
      if (fabsl(dz) < eps * fmaxl(1.0L, fabsl(z))) break;
    }
    r.x[i] = double(z);
    // L_{n+1} at the node, via one more recurrence step from L_n = p0 ~ 0, L_{n-1} = p1
    long double lnp1 = ((2 * n + 1 - z) * p0 - n * p1) / (n + 1);
    r.w[i] = double(z / ((n + 1) * (n + 1) * lnp1 * lnp1));
    // scaled weight w e^z without overflow: z * (e^{z/2} / ((n+1) L_{n+1}))^2
    long double s = expl(0.5L * z) / ((n + 1) * lnp1);
    r.we[i] = double(z * s * s);
  }
  return r;
}

QuadratureRule QuadratureRule::uniform_periodic(int n, double period) {
  QuadratureRule r;
  r.kind = Kind::UniformPeriodic;
  r.x.resize(n);
  r.w.assign(n, period / n);
  for (int i = 0; i < n; ++i) r.x[i] = period * i / n;
  return r;
}

namespace {
template <class T>
T integrate_impl(const QuadratureRule& rule, const std::function<T(double)>& f) {
  const std::vector<double>& w =
      rule.kind == QuadratureRule::Kind::GaussLaguerre ? rule.we : rule.w;
  T s{};
  for (size_t i = 0; i < rule.x.size(); ++i) s += w[i] * f(rule.x[i]);
  return s;
}

// Gauss-Kronrod 7-15 abscissae/weights (positive half; symmetric).
const double kXgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                        0.741531185599394, 0.586087235467691, 0.405845151377397,
                        0.207784955007898, 0.0};
const double kWgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                        0.140653259715525, 0.169004726639267, 0.190350578064785,
                        0.204432940075298, 0.209482141084728};
const double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                       0.417959183673469};

template <class T>
void gk15(const std::function<T(double)>& f, double a, double b, T& kron, double& err) {
  double c = 0.5 * (a + b), hl = 0.5 * (b - a);
  T fc = f(c);
  T resg = kWg[3] * fc;
  T resk = kWgk[7] * fc;
  for (int j = 0; j < 7; ++j) {
    double dx = hl * kXgk[j];
    T f1 = f(c - dx), f2 = f(c + dx);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  kron = resk * hl;
  err = std::abs((resk - resg) * hl);
}

template <class T>
T adaptive_impl(const std::function<T(double)>& f, double a, double b, double tol,
                int depth) {
  T kron;
  double err;
  gk15(f, a, b, kron, err);
  if (err <= tol || depth <= 0) {
    if (err > tol && depth <= 0)
      throw std::runtime_error("adaptive quadrature: tolerance not reached");
    return kron;
  }
  double c = 0.5 * (a + b);
  return adaptive_impl(f, a, c, 0.5 * tol, depth - 1) +
         adaptive_impl(f, c, b, 0.5 * tol, depth - 1);
}
}  // namespace

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f) {
  return integrate_impl<double>(rule, f);
}
std::complex<double> integrate(const QuadratureRule& rule,
                               const std::function<std::complex<double>(double)>& f) {
  return integrate_impl<std::complex<double>>(rule, f);
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, int max_depth) {
  return adaptive_impl<double>(f, a, b, tol, max_depth);
}
std::complex<double> integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                                        double a, double b, double tol, int max_depth) {
  return adaptive_impl<std::complex<double>>(f, a, b, tol, max_depth);
}

namespace {
template <class T>
T fd_impl(const FDStencil& st, const std::function<T(double)>& f, double x) {
  double h = st.h;
  if (st.order == 1 && st.accuracy == 2) return fd_d1_o2(f, x, h);
  if (st.order == 1) return fd_d1(f, x, h);
  if (st.accuracy == 2) return fd_d2_o2(f, x, h);
  return fd_d2(f, x, h);
}
}  // namespace

double fd_derivative(const FDStencil& st, const std::function<double(double)>& f, double x) {
  return fd_impl<double>(st, f, x);
}
std::complex<double> fd_derivative(const FDStencil& st,
                                   const std::function<std::complex<double>(double)>& f,
                                   double x) {
  return fd_impl<std::complex<double>>(st, f, x);
}

namespace {
// LU with partial pivoting; returns false on (numerically) singular input.
template <class T>
bool lu_decompose(std::vector<std::vector<T>>& m, std::vector<int>& perm, int& sign) {
  int n = int(m.size());
  perm.resize(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  sign = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    double best = std::abs(m[c][c]);
    for (int r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > best) {
        best = std::abs(m[r][c]);
        piv = r;
      }
    if (best == 0.0) return false;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      std::swap(perm[piv], perm[c]);
      sign = -sign;
    }
    for (int r = c + 1; r < n; ++r) {
      T f = m[r][c] / m[c][c];
      m[r][c] = f;
      for (int cc = c + 1; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
    }
  }
  return true;
}

template <class T>
T det_impl(std::vector<std::vector<T>> m) {
  std::vector<int> perm;
  int sign;
  if (!lu_decompose(m, perm, sign)) return T{};
  T d = T(sign);
  for (size_t i = 0; i < m.size(); ++i) d *= m[i][i];
  return d;
}

template <class T>
int rank_impl(std::vector<std::vector<T>> m, double tol) {
  int rows = int(m.size());
  if (rows == 0) return 0;
  int cols = int(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    double best = tol;
    for (int r = rank; r < rows; ++r)
      if (std::abs(m[r][c]) > best) {
        best = std::abs(m[r][c]);
        piv = r;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = rank + 1; r < rows; ++r) {
      T f = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}
}  // namespace

double dense_det(std::vector<std::vector<double>> m) { return det_impl(std::move(m)); }
std::complex<double> dense_det(std::vector<std::vector<std::complex<double>>> m) {
  return det_impl(std::move(m));
}
int dense_rank(std::vector<std::vector<double>> m, double tol) {
  return rank_impl(std::move(m), tol);
}
int dense_rank(std::vector<std::vector<std::complex<double>>> m, double tol) {
  return rank_impl(std::move(m), tol);
}

std::vector<double> dense_solve(std::vector<std::vector<double>> m, std::vector<double> rhs) {
  int n = int(m.size());
  std::vector<int> perm;
  int sign;
  if (!lu_decompose(m, perm, sign)) throw std::domain_error("dense_solve: singular matrix");
  std::vector<double> b(n);
  for (int i = 0; i < n; ++i) b[i] = rhs[perm[i]];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) b[i] -= m[i][j] * b[j];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) b[i] -= m[i][j] * b[j];
    b[i] /= m[i][i];
  }
  return b;
}

std::vector<std::vector<double>> dense_inverse(std::vector<std::vector<double>> m) {
  int n = int(m.size());
  std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0.0));
  std::vector<int> perm;
  int sign;
  auto lu = m;
  if (!lu_decompose(lu, perm, sign)) throw std::domain_error("dense_inverse: singular matrix");
  for (int c = 0; c < n; ++c) {
    std::vector<double> e(n, 0.0), b(n);
    e[c] = 1.0;
    for (int i = 0; i < n; ++i) b[i] = e[perm[i]];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) b[i] -= lu[i][j] * b[j];
    for (int i = n - 1; i >= 0; --i) {
      for (int j = i + 1; j < n; ++j) b[i] -= lu[i][j] * b[j];
      b[i] /= lu[i][i];
    }
    for (int r = 0; r < n; ++r) inv[r][c] = b[r];
  }
  return inv;
}

double Rng::normal() {
  if (have_spare) {
    have_spare = false;
    return spare;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 6.283185307179586476925286766559005768 * u2;
  spare = r * std::sin(a);
  have_spare = true;
  return r * std::cos(a);
}

bool Tolerances::set(const std::string& key, double val) {
  auto m = as_map();
  if (!m.count(key)) return false;
  if (key == "annihilation_float") annihilation_float = val;
  else if (key == "gram") gram = val;
  else if (key == "schrodinger_discrete") schrodinger_discrete = val;
  else if (key == "schrodinger_continuous") schrodinger_continuous = val;
  else if (key == "series_closed") series_closed = val;
  else if (key == "norm_quadrature") norm_quadrature = val;
  else if (key == "bilinear_laguerre") bilinear_laguerre = val;
  else if (key == "bessel_sum") bessel_sum = val;
  else if (key == "robertson_gap") robertson_gap = val;
  else if (key == "robertson_mc") robertson_mc = val;
  else if (key == "robertson_constraint") robertson_constraint = val;
  else if (key == "mellin") mellin = val;
  else if (key == "covariance_l50") covariance_l50 = val;
  else if (key == "covariance_l06") covariance_l06 = val;
  else if (key == "intertwine") intertwine = val;
  else if (key == "kernel_reduction") kernel_reduction = val;
  else if (key == "config11_closure") config11_closure = val;
  else if (key == "packet_norm") packet_norm = val;
  else if (key == "group_action") group_action = val;
  else if (key == "weight_composition") weight_composition = val;
  else if (key == "measure_density") measure_density = val;
  else if (key == "fd_step") fd_step = val;
  else if (key == "fd_step_laplacian") fd_step_laplacian = val;
  else if (key == "mellin_quad_tol") mellin_quad_tol = val;
  return true;
}

std::map<std::string, double> Tolerances::as_map() const {
  return {
      {"annihilation_float", annihilation_float},
      {"gram", gram},
      {"schrodinger_discrete", schrodinger_discrete},
      {"schrodinger_continuous", schrodinger_continuous},
      {"series_closed", series_closed},
      {"norm_quadrature", norm_quadrature},
      {"bilinear_laguerre", bilinear_laguerre},
      {"bessel_sum", bessel_sum},
      {"robertson_gap", robertson_gap},
      {"robertson_mc", robertson_mc},
      {"robertson_constraint", robertson_constraint},
      {"mellin", mellin},
      {"covariance_l50", covariance_l50},
      {"covariance_l06", covariance_l06},
      {"intertwine", intertwine},
      {"kernel_reduction", kernel_reduction},
      {"config11_closure", config11_closure},
      {"packet_norm", packet_norm},
      {"group_action", group_action},
      {"weight_composition", weight_composition},
      {"measure_density", measure_density},
      {"fd_step", fd_step},
      {"fd_step_laplacian", fd_step_laplacian},
      {"mellin_quad_tol", mellin_quad_tol},
  };
}

}  // namespace hacs::num
