#pragma once

// In-repo special functions over complex arguments. Everything is implemented
// here from series, recurrences, and asymptotics with explicit, test-pinned
// switchover radii; no external math library is involved, so these routines
// serve as an independent check on the symbolic layer and vice versa.

#include <complex>
#include <vector>

namespace hacs::sf {

using cd = std::complex<double>;

// Lanczos with reflection; relative error < 1e-12 for |z| <= 20.
cd gamma(cd z);
double gamma(double x);

// Associated Laguerre L_n^alpha(x) by the stable three-term recurrence.
double laguerre(int n, double alpha, double x);
// All of L_0..L_nmax in one sweep (the recurrence produces them anyway).
std::vector<double> laguerre_upto(int nmax, double alpha, double x);

// Ascending series; principal branch of (z/2)^nu. Validity window |z| <= 50:
// beyond it double-precision cancellation dominates and the call is refused.
cd bessel_j(double nu, cd z);
// Modified Bessel I_nu, same series with positive terms on the real axis.
cd bessel_i(double nu, cd z);

// Confluent hypergeometric 1F1(a; b; z) with b a positive integer.
// Kummer transform for Re z < 0, Taylor series for |z| <= 20, and the
// two-tail asymptotic expansion with adaptive truncation beyond. Relative
// accuracy: ~1e-13 for |z| <= 6, ~e^{|Im z|} eps (cancellation-limited) up to
// the series switch, ~1e-7 on the asymptotic branch.
cd hyp1f1(cd a, int b, cd z);

inline constexpr double kHyp1f1SeriesMax = 20.0;  // series/asymptotic switch radius
inline constexpr double kBesselSeriesMax = 50.0;

// |truncated bilinear Laguerre sum - closed Bessel form|:
//   sum_{n<=N} n!/Gamma(n+alpha+1) L_n^a(x) L_n^a(y) z^n
//   vs (xyz)^{-a/2} (1-z)^{-1} exp(-z(x+y)/(1-z)) I_a(2 sqrt(xyz)/(1-z)).
double check_bilinear_laguerre(int alpha, double x, double y, cd z, int N);

// |sum_n t^n J_n(z) - exp((t - 1/t) z / 2)| with the window chosen adaptively:
// every n with |t^n J_n(z)| > threshold enters the sum.
double check_bessel_sum(cd t, double z, double threshold = 1e-14, int nmax = 64);

}  // namespace hacs::sf
