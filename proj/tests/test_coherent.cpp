#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstring>

#include "hacs/coherent.hpp"
#include "hacs/numerics.hpp"
#include "oracle_constants.hpp"

using namespace hacs;
using cs::CVec3;
using cs::CVec4;
using cs::RVec3;
using cd = std::complex<double>;

namespace {
const double kSqrtPiInv = 1.0 / std::sqrt(M_PI);
}

TEST_CASE("label validity") {
  auto ok = cs::classify_u({cd(0.0), cd(0.5), cd(0.0)});
  CHECK(ok.ok);
  CHECK(std::abs(ok.uu_abs - 0.25) < 1e-15);
  CHECK(std::abs(ok.h - 0.5625) < 1e-15);
  CHECK(ok.violated == nullptr);
  CHECK(std::abs(cs::h_of_u({cd(0.0), cd(0.5), cd(0.0)}) - 0.5625) < 1e-15);

  auto big = cs::classify_u({cd(1.2), cd(0.0), cd(0.0)});
  CHECK_FALSE(big.ok);
  CHECK(std::strcmp(big.violated, "|u.u| >= 1") == 0);

  auto thin = cs::classify_u({cd(0.0, 0.9), cd(0.3), cd(0.0)});
  CHECK_FALSE(thin.ok);  // |u.u| = 0.72 < 1 but h = -0.2816
  CHECK(thin.uu_abs < 1.0);
  CHECK(thin.h < 0.0);
  CHECK(std::strcmp(thin.violated, "1 - 2 u.u* + |u.u|^2 <= 0") == 0);

  CHECK(cs::valid_u({cd(0.0), cd(0.0), cd(0.0)}));
  CHECK_FALSE(cs::valid_u({cd(0.0, 0.9), cd(0.3), cd(0.0)}));

  num::Rng rng(11);
  for (int i = 0; i < 25; ++i) {
    auto u = cs::random_valid_u(rng, 0.6, 0.05);
    auto c = cs::classify_u(u);
    CHECK(c.ok);
    CHECK(c.h > 0.05);
  }
}

TEST_CASE("null vector of a discrete label") {
  CVec3 u{cd(0.0), cd(0.5), cd(0.0)};
  auto k = cs::k_of_u(u);
  CHECK(std::abs(k[0] - 5.0 / 3.0) < 1e-15);
  CHECK(std::abs(k[1]) < 1e-16);
  CHECK(std::abs(k[2] - 4.0 / 3.0) < 1e-15);
  cd kk = k[0] * k[0] - k[1] * k[1] - k[2] * k[2] - k[3] * k[3];
  CHECK(std::abs(kk - 1.0) < 1e-14);
  CHECK_THROWS_AS(cs::k_of_u({cd(1.0), cd(0.0), cd(0.0)}), std::domain_error);
}

TEST_CASE("real part of k: direct and closed norms agree, the alt form does not") {
  // u.u = 0 here, so even the vacuum-amplitude route is off-limits and only
  // the two w routes remain comparable
  CVec3 u0{cd(0.0, 0.25), cd(0.25), cd(0.0)};
  auto wv = cs::w_of_u(u0);
  CHECK(std::abs(wv.w[0] - 1.0) < 1e-15);
  CHECK(std::abs(wv.w[2] - 0.5) < 1e-15);
  CHECK(std::abs(wv.ww - 0.75) < 1e-14);
  CHECK(std::abs(cs::w_norm_sq_closed(u0) - 0.75) < 1e-14);

  CVec3 u1{cd(0.3), cd(0.0), cd(0.0)};
  CHECK(std::abs(cs::w_of_u(u1).ww - 1.0) < 1e-14);
  CHECK(std::abs(cs::w_norm_sq_closed(u1) - 1.0) < 1e-14);
  double alt = cs::w_norm_sq_alt(u1);
  CHECK(std::abs(alt - 0.8281 / 1.1881) < 1e-12);
  CHECK(std::abs(alt - cs::w_of_u(u1).ww) > 0.25);

  num::Rng rng(12);
  for (int i = 0; i < 30; ++i) {
    auto u = cs::random_valid_u(rng, 0.6, 0.02);
    CHECK(std::abs(cs::w_of_u(u).ww - cs::w_norm_sq_closed(u)) < 1e-12);
  }
}

TEST_CASE("vacuum amplitude") {
  CVec3 u{cd(0.0), cd(0.5), cd(0.0)};
  CHECK(std::abs(cs::c0_norm_sq(u) - 2.25) < 1e-14);
  cd c0 = cs::c0_of_u(u);
  CHECK(std::abs(std::norm(c0) - 2.25) < 1e-13);
  CHECK_THROWS_AS(cs::c0_norm_sq({cd(0.0, 0.25), cd(0.25), cd(0.0)}), std::domain_error);
}

TEST_CASE("closed form against frozen values") {
  for (auto& row : oracle::kCsClosedOracle) {
    CVec3 u{cd(row[0], row[1]), cd(row[2], row[3]), cd(row[4], row[5])};
    hacs::hyd::Point3 x{row[6], row[7], row[8]};
    cd want(row[9], row[10]);
    CHECK(std::abs(cs::cs_discrete_closed(u, x) - want) < 1e-12);
  }
  hacs::hyd::Point3 x{0.3, -0.4, 0.5};
  cd g = cs::cs_discrete_closed({cd(0.0), cd(0.0), cd(0.0)}, x);
  CHECK(std::abs(g - kSqrtPiInv * std::exp(-x.r())) < 1e-15);
}

TEST_CASE("series section reproduces the closed form") {
  cd l1(0.3, 0.2), l2(-0.25, 0.1);
  auto u = cs::u_of_series(l1, l2);
  CHECK(std::abs(cs::dot(u, u) + l1 * l2) < 1e-16);
  CHECK(std::abs(u[2]) == 0.0);

  hacs::hyd::Point3 xa{0.8, -0.3, 0.6}, xb{0.2, 0.1, -1.4};
  for (auto& x : {xa, xb}) {
    cd series = cs::cs_discrete_series(l1, l2, x, 40);
    cd closed = cs::cs_discrete_closed(u, x);
    CHECK(std::abs(series - closed) < 1e-8);
  }

  // both ray parameters on the negative real axis probes the branch handling
  cd m1(-0.3, 0.0), m2(-0.2, 0.0);
  hacs::hyd::Point3 x{0.5, 0.2, -0.4};
  CHECK(std::abs(cs::cs_discrete_series(m1, m2, x, 40) -
                 cs::cs_discrete_closed(cs::u_of_series(m1, m2), x)) < 1e-9);

  // degenerate ray l2 = 0 keeps only the n = 0, m = |m| ladder
  cd s1(0.35, -0.1);
  CHECK(std::abs(cs::cs_discrete_series(s1, cd(0.0), x, 40) -
                 cs::cs_discrete_closed(cs::u_of_series(s1, cd(0.0)), x)) < 1e-10);
}

TEST_CASE("state norm is one") {
  CHECK(std::abs(cs::cs_norm_quadrature({cd(0.0), cd(0.0), cd(0.0)}) - 1.0) < 1e-10);
  auto u = cs::u_of_series(cd(0.3, 0.2), cd(-0.25, 0.1));
  CHECK(std::abs(cs::cs_norm_quadrature(u) - 1.0) < 1e-8);
}

TEST_CASE("axis reduction") {
  for (double x3 : {-0.7, 0.7}) {
    CHECK(std::abs(cs::cs_1d_reduction({cd(0.0), cd(0.0), cd(0.0)}, x3) -
                   kSqrtPiInv * std::exp(-std::abs(x3))) < 1e-15);
  }
  CVec3 u{cd(0.0), cd(0.0), cd(0.3, 0.1)};
  for (double x3 : {-1.2, 0.7}) {
    cd lhs = cs::cs_1d_reduction(u, x3);
    cd rhs = cs::cs_discrete_closed(u, {0.0, 0.0, x3});
    CHECK(std::abs(lhs - rhs) < 1e-13);
  }
  CHECK_THROWS_AS(cs::cs_1d_reduction({cd(0.3), cd(0.0), cd(0.0)}, 0.5), std::domain_error);
}

TEST_CASE("compact-generator flow covariance") {
  CVec3 u{cd(0.2), cd(0.0, 0.1), cd(-0.15)};
  CHECK(cs::covariance_check_L50(u, {0.6, -0.4, 0.8}) < 1e-6);
  CHECK(cs::covariance_check_L50({cd(0.0), cd(0.0), cd(0.0)}, {0.9, 0.2, -0.3}) < 1e-6);
}

TEST_CASE("continuous labels") {
  RVec3 v{0.0, 0.5, 0.0};
  auto k = cs::k_of_v(v);
  CHECK(std::abs(k[0] - 5.0 / 3.0) < 1e-15);
  CHECK(std::abs(k[2] - 4.0 / 3.0) < 1e-15);
  CHECK(std::abs(k[0] * k[0] - k[1] * k[1] - k[2] * k[2] - k[3] * k[3] - 1.0) < 1e-14);
  CHECK_THROWS_AS(cs::k_of_v({1.0, 0.0, 0.0}), std::domain_error);

  hacs::hyd::Point3 x{0.4, -0.7, 0.3};
  cd w = cs::cs_continuous_closed({0.0, 0.0, 0.0}, x);
  CHECK(std::abs(w - std::polar(1.0, -x.r())) < 1e-15);
  CHECK(std::abs(std::abs(cs::cs_continuous_closed(v, x)) - 1.0) < 1e-15);
}

TEST_CASE("conformal action on continuous labels") {
  RVec3 v{0.3, -0.2, 0.4}, zero{0.0, 0.0, 0.0};
  auto t = cs::so41_act(cs::So41::Translate, v, {0.1, 0.1, -0.2});
  CHECK(std::abs(t[0] - 0.2) < 1e-15);
  CHECK(std::abs(t[2] - 0.6) < 1e-15);

  auto d = cs::so41_act(cs::So41::Dilate, v, {std::log(2.0), 0.0, 0.0});
  for (int i = 0; i < 3; ++i) CHECK(std::abs(d[i] - 2.0 * v[i]) < 1e-14);

  auto s0 = cs::so41_act(cs::So41::Special, zero, {0.4, -0.1, 0.2});
  for (double c : s0) CHECK(c == 0.0);

  // rotations preserve length and compose additively about a fixed axis
  auto r1 = cs::so41_act(cs::So41::Rotate, v, {0.0, 0.0, 0.3});
  auto r2 = cs::so41_act(cs::So41::Rotate, r1, {0.0, 0.0, 0.4});
  auto r12 = cs::so41_act(cs::So41::Rotate, v, {0.0, 0.0, 0.7});
  double n0 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  double n1 = r1[0] * r1[0] + r1[1] * r1[1] + r1[2] * r1[2];
  CHECK(std::abs(n1 - n0) < 1e-14);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(r2[i] - r12[i]) < 1e-14);
  CHECK(std::abs(r1[2] - v[2]) < 1e-16);
  auto rid = cs::so41_act(cs::So41::Rotate, v, zero);
  for (int i = 0; i < 3; ++i) CHECK(rid[i] == v[i]);
}

TEST_CASE("invariant measure and dilation weight") {
  RVec3 v{0.3, -0.2, 0.4};
  double vv = 0.09 + 0.04 + 0.16;
  CHECK(std::abs(cs::measure_density(v) - 8.0 / std::pow(1.0 - vv, 3)) < 1e-12);
  double fd = cs::measure_density_fd(v);
  CHECK(std::abs(fd - cs::measure_density(v)) / cs::measure_density(v) < 1e-6);

  CHECK(cs::dilation_weight(v, 0.0) == 1.0);
  CHECK(std::abs(cs::dilation_weight({0.0, 0.0, 0.0}, 0.3) - std::exp(0.3)) < 1e-15);
  double w12 = cs::dilation_weight(v, 0.25);
  RVec3 v1 = cs::so41_act(cs::So41::Dilate, v, {0.1, 0.0, 0.0});
  CHECK(std::abs(w12 - cs::dilation_weight(v, 0.1) * cs::dilation_weight(v1, 0.15)) < 1e-12);
}

TEST_CASE("dilation flow covariance") {
  CHECK(cs::covariance_check_L06({0.25, -0.1, 0.3}, {0.7, 0.4, -0.5}) < 1e-5);
  CHECK(cs::covariance_check_L06({0.0, 0.0, 0.0}, {0.9, -0.2, 0.4}) < 1e-5);
}

TEST_CASE("line-integral identity for the continuous radial functions") {
  CHECK(cs::verify_mellin(0.0, 0, 0.0, 0.0) < 1e-6);  // both sides pi/2
  for (auto& row : oracle::kMellinOracle) {
    double rho = row[0], xi = row[2], eta = row[3];
    int M = int(row[1]);
    CHECK(cs::verify_mellin(rho, M, xi, eta) < 1e-4);
    // frozen integral value against the product side, i^M aligning the phases
    cd want = std::pow(cd(0.0, 1.0), M) * cd(row[4], row[5]);
    double lhs = M_PI * std::exp(M_PI * rho) * hyd::phi_radial_continuous(rho, M, xi) *
                 hyd::phi_radial_continuous(rho, M, eta);
    CHECK(std::abs(want.imag()) < 1e-12 * std::abs(want));
    CHECK(std::abs(lhs - want.real()) / std::abs(want) < 1e-8);
  }
}

TEST_CASE("packet capture ratio stays in its honest window") {
  double ratio = cs::packet_norm_ratio(1.5, 0.2, 50.0, 48, 1200);
  CHECK(ratio > 0.5);
  CHECK(ratio < 1.0);
}

TEST_CASE("boundary kernel and its restrictions") {
  hacs::hyd::Point3 x{0.8, -0.3, 0.6};
  cd atI = cs::twistor_kernel(x, {cd(0.0, 1.0), cd(0.0), cd(0.0), cd(0.0)});
  CHECK(std::abs(atI - std::exp(-x.r())) < 1e-15);

  CVec3 u{cd(0.2, 0.1), cd(-0.15, 0.05), cd(0.1)};
  auto ku = cs::k_of_u(u);
  CVec4 z{cd(0.0, 1.0) * ku[0], cd(0.0, 1.0) * ku[1], cd(0.0, 1.0) * ku[2],
          cd(0.0, 1.0) * ku[3]};
  cd lhs = cs::twistor_kernel(x, z);
  cd rhs = cs::cs_discrete_closed(u, x) / (kSqrtPiInv * std::sqrt(cs::w_of_u(u).ww));
  CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-12);

  RVec3 v{0.3, 0.2, -0.4};
  auto kv = cs::k_of_v(v);
  CVec4 zc{cd(-kv[0]), cd(-kv[1]), cd(-kv[2]), cd(-kv[3])};
  CHECK(std::abs(cs::twistor_kernel(x, zc) - cs::cs_continuous_closed(v, x)) < 1e-14);

  // inversion antipode: k(v / v.v) = -k(v)
  double vv = 0.09 + 0.04 + 0.16;
  auto ka = cs::k_of_v({v[0] / vv, v[1] / vv, v[2] / vv});
  for (int i = 0; i < 4; ++i) CHECK(std::abs(ka[i] + kv[i]) < 1e-12);
}

TEST_CASE("bounded chart of the tube interior") {
  auto org = cs::twistor_interior({cd(0.0), cd(0.0), cd(0.0), cd(0.0)});
  CHECK(org.ok);
  CHECK(std::abs(org.z[0] - cd(0.0, 1.0)) < 1e-16);
  for (int i = 1; i < 4; ++i) CHECK(std::abs(org.z[i]) < 1e-16);

  // slice b4 = 0 lands on i k_u
  CVec3 u{cd(0.1, 0.05), cd(-0.2), cd(0.15)};
  auto pt = cs::twistor_interior({u[0], u[1], u[2], cd(0.0)});
  CHECK(pt.ok);
  auto ku = cs::k_of_u(u);
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(pt.z[i] - cd(0.0, 1.0) * ku[i]) < 1e-13);

  auto bad = cs::twistor_interior({cd(1.1), cd(0.0), cd(0.0), cd(0.0)});
  CHECK_FALSE(bad.ok);
  CHECK(std::strcmp(bad.violated, "input outside the bounded ball") == 0);

  num::Rng rng(13);
  for (int i = 0; i < 10; ++i) {
    CVec4 b{cd(rng.uniform(-0.25, 0.25), rng.uniform(-0.25, 0.25)),
            cd(rng.uniform(-0.25, 0.25), rng.uniform(-0.25, 0.25)),
            cd(rng.uniform(-0.25, 0.25), rng.uniform(-0.25, 0.25)),
            cd(rng.uniform(-0.25, 0.25), rng.uniform(-0.25, 0.25))};
    auto p = cs::twistor_interior(b);
    CHECK(p.ok);
    double y0 = p.z[0].imag();
    double yy = y0 * y0 - p.z[1].imag() * p.z[1].imag() - p.z[2].imag() * p.z[2].imag() -
                p.z[3].imag() * p.z[3].imag();
    CHECK(y0 > 0.0);
    CHECK(yy > 0.0);
  }
}
