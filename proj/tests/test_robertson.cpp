#include "doctest.h"

#include <cmath>
#include <complex>

#include "hacs/robertson.hpp"

using namespace hacs;
using cs::CVec3;
using cd = std::complex<double>;

namespace {
const CVec3 kU{cd(0.15, 0.1), cd(-0.2, 0.05), cd(0.1, -0.1)};
}

TEST_CASE("gaussian quadratic form") {
  auto m0 = rob::gaussian_form({cd(0.0), cd(0.0), cd(0.0)});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(std::abs(m0[i][j] - (i == j ? cd(1.0) : cd(0.0))) < 1e-15);

  auto m = rob::gaussian_form(kU);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(std::abs(m[i][j] - m[j][i]) < 1e-16);
}

TEST_CASE("closed moments saturate the determinant bound") {
  auto v = rob::closed_moments({cd(0.0), cd(0.0), cd(0.0)});
  CHECK(std::abs(v.det_omega - std::pow(2.0, -8.0)) < 1e-18);
  CHECK(std::abs(v.det_sigma - std::pow(2.0, -8.0)) < 1e-16);
  CHECK(v.gap < 1e-12);
  for (int i = 0; i < 8; ++i) {
    CHECK(std::abs(v.sigma[i][i] - 0.5) < 1e-14);
    for (int j = 0; j < 8; ++j)
      if (i != j) CHECK(std::abs(v.sigma[i][j]) < 1e-14);
  }

  auto g = rob::closed_moments(kU);
  CHECK(g.gap < 1e-10);
  CHECK(std::abs(g.det_omega - std::pow(2.0, -8.0)) < 1e-18);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) CHECK(std::abs(g.sigma[i][j] - g.sigma[j][i]) < 1e-13);
}

TEST_CASE("annihilation constraints are null directions") {
  for (const CVec3& u : {CVec3{cd(0.0), cd(0.0), cd(0.0)}, kU}) {
    auto rep = rob::constraint_check(u);
    CHECK(rep.rank == 4);
    for (double r : rep.residual) CHECK(r < 1e-10);
  }
}

TEST_CASE("monte carlo reproduces the closed moments") {
  num::Rng rng(271828);
  auto mc = rob::mc_moments(kU, 200000, rng);
  CHECK(mc.max_err < 0.05);
  CHECK(mc.sigma.size() == 8);

  // estimator is deterministic for a fixed seed
  num::Rng rng2(271828);
  auto mc2 = rob::mc_moments(kU, 200000, rng2);
  CHECK(mc.max_err == mc2.max_err);
}
