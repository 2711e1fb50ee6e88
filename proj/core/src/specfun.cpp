#include "hacs/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace hacs::sf {

namespace {
const double kPi = 3.141592653589793238462643383279502884;

const double kLanczos[9] = {0.99999999999980993,      676.5203681218851,
                            -1259.1392167224028,      771.32342877765313,
                            -176.61502916214059,      12.507343278686905,
                            -0.13857109526572012,     9.9843695780195716e-6,
                            1.5056327351493116e-7};
}  // namespace

cd gamma(cd z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw std::domain_error("gamma: pole at nonpositive integer");
  if (z.real() < 0.5) {
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return kPi / (std::sin(kPi * z) * gamma(1.0 - z));
  }
  z -= 1.0;
  cd x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + cd(double(i), 0.0));
  cd t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

double gamma(double x) { return gamma(cd(x, 0.0)).real(); }

double laguerre(int n, double alpha, double x) {
  if (n == 0) return 1.0;
  double lm = 1.0, l = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    double lp = ((2 * k + 1 + alpha - x) * l - (k + alpha) * lm) / (k + 1);
    lm = l;
    l = lp;
  }
  return l;
}

std::vector<double> laguerre_upto(int nmax, double alpha, double x) {
  std::vector<double> out(nmax + 1);
  out[0] = 1.0;
  if (nmax == 0) return out;
  out[1] = 1.0 + alpha - x;
  for (int k = 1; k < nmax; ++k)
    out[k + 1] = ((2 * k + 1 + alpha - x) * out[k] - (k + alpha) * out[k - 1]) / (k + 1);
  return out;
}

namespace {
cd bessel_series(double nu, cd z, double sign) {
  // sign = -1: J; sign = +1: I
  if (z == cd(0.0, 0.0)) return nu == 0.0 ? cd(1.0, 0.0) : cd(0.0, 0.0);
  cd h = 0.5 * z;
  cd t = std::pow(h, nu) / gamma(cd(nu + 1.0, 0.0));
  cd sum = t;
  cd h2 = sign * h * h;
  for (int k = 1; k < 400; ++k) {
    t *= h2 / (double(k) * (nu + k));
    sum += t;
    if (std::abs(t) < 1e-17 * std::abs(sum) && k > 4) break;
  }
  return sum;
}
}  // namespace

cd bessel_j(double nu, cd z) {
  if (nu < 0.0) throw std::domain_error("bessel_j: nu must be >= 0");
  if (std::abs(z) > kBesselSeriesMax)
    throw std::domain_error("bessel_j: |z| outside the series window");
  return bessel_series(nu, z, -1.0);
}

cd bessel_i(double nu, cd z) {
  if (nu < 0.0) throw std::domain_error("bessel_i: nu must be >= 0");
  if (std::abs(z) > kBesselSeriesMax)
    throw std::domain_error("bessel_i: |z| outside the series window");
  return bessel_series(nu, z, +1.0);
}

namespace {
cd hyp1f1_series(cd a, int b, cd z) {
  cd t(1.0, 0.0), sum(1.0, 0.0);
  for (int k = 0; k < 700; ++k) {
    t *= (a + double(k)) * z / ((double(b) + double(k)) * double(k + 1));
    sum += t;
    if (std::abs(t) < 1e-17 * std::abs(sum) && k > 3) return sum;
  }
  return sum;
}

// Two-tail large-|z| expansion with adaptive truncation at the smallest term.
cd hyp1f1_asymptotic(cd a, int b, cd z) {
  cd bb(double(b), 0.0);
  cd s1(1.0, 0.0), t1(1.0, 0.0);
  cd mzi = 1.0 / (-z);
  double last = 1e300;
  for (int s = 0; s < 80; ++s) {
    t1 *= (a + double(s)) * (a - bb + 1.0 + double(s)) * mzi / double(s + 1);
    if (std::abs(t1) >= last) break;
    s1 += t1;
    last = std::abs(t1);
    if (last < 1e-18 * std::abs(s1)) break;
  }
  cd s2(1.0, 0.0), t2(1.0, 0.0);
  cd zi = 1.0 / z;
  last = 1e300;
  for (int s = 0; s < 80; ++s) {
    t2 *= (bb - a + double(s)) * (1.0 - a + double(s)) * zi / double(s + 1);
    if (std::abs(t2) >= last) break;
    s2 += t2;
    last = std::abs(t2);
    if (last < 1e-18 * std::abs(s2)) break;
  }
  double sgn = z.imag() >= 0.0 ? 1.0 : -1.0;
  cd ipa = std::exp(cd(0.0, sgn * kPi) * a);
  cd term1 = ipa * std::pow(z, -a) / gamma(bb - a) * s1;
  cd term2 = std::exp(z) * std::pow(z, a - bb) / gamma(a) * s2;
  return gamma(bb) * (term1 + term2);
}
}  // namespace

cd hyp1f1(cd a, int b, cd z) {
  if (b < 1) throw std::domain_error("hyp1f1: b must be a positive integer");
  if (z.real() < 0.0) return std::exp(z) * hyp1f1(cd(double(b), 0.0) - a, b, -z);
  if (std::abs(z) <= kHyp1f1SeriesMax) return hyp1f1_series(a, b, z);
  return hyp1f1_asymptotic(a, b, z);
}

double check_bilinear_laguerre(int alpha, double x, double y, cd z, int N) {
  if (std::abs(z) >= 1.0) throw std::domain_error("check_bilinear_laguerre: need |z| < 1");
  std::vector<double> lx = laguerre_upto(N, alpha, x), ly = laguerre_upto(N, alpha, y);
  double c = 1.0 / gamma(double(alpha) + 1.0);  // n! / Gamma(n+alpha+1) at n = 0
  cd zn(1.0, 0.0), lhs(0.0, 0.0);
  for (int n = 0; n <= N; ++n) {
    lhs += c * lx[n] * ly[n] * zn;
    zn *= z;
    c *= double(n + 1) / double(n + 1 + alpha);
  }
  cd xyz = x * y * z;
  cd rhs = std::pow(xyz, -0.5 * alpha) / (1.0 - z) *
           std::exp(-z * (x + y) / (1.0 - z)) *
           bessel_i(double(alpha), 2.0 * std::sqrt(xyz) / (1.0 - z));
  return std::abs(lhs - rhs);
}

double check_bessel_sum(cd t, double z, double threshold, int nmax) {
  cd sum(0.0, 0.0);
  cd j0 = bessel_j(0.0, cd(z, 0.0));
  if (std::abs(j0) > threshold) sum += j0;
  cd tp(1.0, 0.0), tm(1.0, 0.0);
  for (int n = 1; n <= nmax; ++n) {
    tp *= t;
    tm /= t;
    cd jn = bessel_j(double(n), cd(z, 0.0));
    double sgn = (n % 2 == 0) ? 1.0 : -1.0;  // J_{-n} = (-1)^n J_n
    cd term_p = tp * jn, term_m = sgn * tm * jn;
    bool used = false;
    if (std::abs(term_p) > threshold) {
      sum += term_p;
      used = true;
    }
    if (std::abs(term_m) > threshold) {
      sum += term_m;
      used = true;
    }
    if (!used && n > std::abs(z) + 2) break;
  }
  cd rhs = std::exp((t - 1.0 / t) * (0.5 * z));
  return std::abs(sum - rhs);
}

}  // namespace hacs::sf
