#pragma once

// Generator realizations of the 15-dimensional conformal-type algebra and the
// exact verifications that hang off them: commutation closure, Fock-space
// eigenvalue and constraint identities, coherent-state annihilation equations,
// the sp(2,R) span, and the numeric configuration-space family used for the
// intertwining and nested-finite-difference closure checks.
//
// Index conventions: generators are keyed by ordered pairs (A,B), A < B, with
// stage labels in {0,1,2,3,5,6} ordered 0 < 1 < 2 < 3 < 5 < 6, metric
// diag(+1,-1,-1,-1,+1,-1), and the bracket normalization
//   [L_AB, L_CD] = i (eta_AD L_BC + eta_BC L_AD - eta_AC L_BD - eta_BD L_AC).

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hacs/exact.hpp"
#include "hacs/hydrogen.hpp"

namespace hacs::gen {

using exact::CQ;
using exact::DiffOp;
using exact::ExpFn;
using exact::Poly;
using exact::Rat;
using cd = std::complex<double>;
using Pair = std::pair<int, int>;

enum class Realization { osc8, param13, param_cont2, twistor3 };

Realization realization_from_string(const std::string& s);
std::string to_string(Realization r);

int metric_eta(int idx);  // +1 for 0 and 5, -1 for 1, 2, 3, 6

// All 15 slots (A,B), A<B over {0,1,2,3,5,6}, in deterministic order.
const std::vector<Pair>& canonical_pairs();

struct GeneratorFamily {
  Realization tag;
  std::map<Pair, DiffOp<CQ>> L;
  std::array<std::string, 4> var_names;
};

// osc8: all 15 slots as order-<=2 operators in (z1, z2, zb1, zb2).
// param13: the 10 slots over {0,1,2,3,5} in (u1, u2, u3).
// param_cont2: the 10 slots over {0,1,2,3,6} in (v1, v2, v3).
// twistor3: all 15 slots in (z0, z1, z2, z3).
GeneratorFamily build_family(Realization tag);

// Signed lookup honoring antisymmetry: L(A,B) = -L(B,A), L(A,A) = 0.
DiffOp<CQ> family_slot(const GeneratorFamily& f, int A, int B);

struct CommutatorFinding {
  Pair ab, cd_;
  std::string residual;  // rendered nonzero residual operator
};
// Empty report <=> the family closes exactly on the bracket above.
std::vector<CommutatorFinding> check_commutators(const GeneratorFamily& f);

struct FockState {
  hyd::DiscreteLabel label;
  ExpFn<CQ> value;  // creation word applied to exp(-z.zb), sign and exact
                    // rational factors included; divide by sqrt(norm_sq) to
                    // normalize (norm_sq = n1!(n1+M)! n2!(n2+M)!)
  Rat norm_sq;
  cd eval4(double xi1, double xi2, double eta1, double eta2) const;
};
FockState fock_state(const hyd::DiscreteLabel& label);

// apply(L50, state) - (n1+n2+|m|+1) state; exactly zero on every Fock state.
ExpFn<CQ> check_eigen_L50(const hyd::DiscreteLabel& label);

// apply(a.a+ - b.b+, f); zero iff f lies in the constrained subspace.
ExpFn<CQ> check_constraint(const ExpFn<CQ>& f);

// Coherent-state matrix Lambda(u) = [[u1 - i u2, -u3], [-u3, -u1 - i u2]].
std::array<std::array<cd, 2>, 2> annihilation_matrix(const std::array<cd, 3>& u);

// Exact residuals of the four annihilation operators on exp(-k(u).n), for
// Gaussian-rational u. The operators are scaled by a positive constant so the
// coefficients stay rational; vanishing is unaffected.
std::array<ExpFn<CQ>, 4> check_annihilation_exact(const std::array<CQ, 3>& u);
// Same check in floating point; returns the largest residual coefficient.
double check_annihilation_float(const std::array<cd, 3>& u);

struct Sp2rReport {
  int rank = 0;         // rank of the 10x10 exact coefficient matrix
  bool consistent = false;  // every quadratic op lies in the generator span
  bool y_trace_is_l50 = false;  // Y11 + Y22 equals the compact generator exactly
};
Sp2rReport check_sp2r_span();

// Pairing-kernel intertwining at algebra level: for each canonical slot, the
// configuration-space generator applied by finite differences in x against the
// polynomial-coefficient family applied exactly in z; returns the max residual.
double check_intertwining(
    const std::vector<std::pair<hyd::Point3, std::array<cd, 4>>>& samples, double h);

// Closure of the numeric configuration-space family, nested central finite
// differences on a Gaussian test function at random points; max relative
// residual over all 105 slot pairs.
double config11_closure_residual(std::uint64_t seed, int npoints,
                                 long double h_inner = 1e-3L,
                                 long double h_outer = 6e-3L);

// Compares exp(sum Lambda_ab a+_a b+_b)|0> against the coherent-state
// exponential: both sides expanded (operator powers through kmax, word degree
// 2 kmax), vacuum-normalized, coefficients compared through total degree 4.
// Converges geometrically in |u|; keep |u| well inside the unit ball.
double perelomov_ray_residual(const std::array<cd, 3>& u, int kmax = 10);

}  // namespace hacs::gen
