#pragma once

// Second-moment data of the oscillator-space Gaussian attached to a discrete
// label u: closed-form covariance blocks, the symplectic determinant gap
// (zero exactly when the state saturates the n-observable uncertainty bound),
// the annihilation-constraint residuals, and a Monte-Carlo route to the same
// moments that never touches the closed-form block algebra.

#include <array>
#include <complex>
#include <vector>

#include "coherent.hpp"
#include "numerics.hpp"

namespace hacs::rob {

using cd = std::complex<double>;
using Mat = std::vector<std::vector<double>>;
using CMat = std::vector<std::vector<cd>>;

// Quadratic form of the position-space Gaussian <q|u> ~ exp(-q^T M q / 2) in
// coordinates q = (xi1, xi2, eta1, eta2): M = k0 I - k1 M1 - k2 M2 - k3 M3,
// complex symmetric with positive-definite real part on the valid set.
CMat gaussian_form(const cs::CVec3& u);

struct Moments {
  // 8x8, rows/cols ordered (xi1, xi2, p_xi1, p_xi2, eta1, eta2, p_eta1, p_eta2)
  Mat sigma;
  Mat omega;  // commutator form in the same ordering, det = 2^-8
  double det_sigma = 0;
  double det_omega = 0;
  double gap = 0;  // |det_sigma - det_omega| / det_omega
};
// Blocks from the quadratic form: Sxx = A^{-1}/2, Sxp = -A^{-1}B/2,
// Spp = (A + B A^{-1} B)/2 with A = Re M, B = Im M.
Moments closed_moments(const cs::CVec3& u);

struct ConstraintReport {
  std::array<double, 4> residual{};  // |c^dag (Sigma + i Omega) c| per vector
  int rank = 0;                      // rank of the 4x8 constraint matrix
};
// The four coefficient vectors of A_a - sum_b Lambda(u)_ab conj(B-type pair)
// annihilate the state, so each is a null direction of Sigma + i Omega.
ConstraintReport constraint_check(const cs::CVec3& u);

struct McResult {
  Mat sigma;           // sampled estimate, ordering as in Moments::sigma
  double max_err = 0;  // max entry deviation / max |closed entry|
};
// Draw q from |<q|u>|^2 by Cholesky, then estimate the p-moments through the
// action of the quadratic form on each sample. Independent of closed_moments'
// matrix identities everywhere past the shared Sxx factor.
McResult mc_moments(const cs::CVec3& u, int nsamples, num::Rng& rng);

}  // namespace hacs::rob
