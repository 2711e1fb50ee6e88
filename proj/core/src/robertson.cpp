#include "hacs/robertson.hpp"

#include <cmath>
#include <stdexcept>

#include "hacs/generators.hpp"

namespace hacs::rob {

namespace {

constexpr double kM1[4][4] = {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
constexpr double kM2[4][4] = {{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}};
constexpr double kM3[4] = {1, 1, -1, -1};

// contract ordering -> internal (x1..x4, p1..p4) ordering
constexpr int kPerm[8] = {0, 1, 4, 5, 2, 3, 6, 7};

Mat matmul(const Mat& a, const Mat& b) {
  std::size_t n = a.size(), m = b[0].size(), k = b.size();
  Mat r(n, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
  return r;
}

struct Blocks {
  Mat a, b;              // Re / Im of the quadratic form
  Mat sxx, sxp, spp;     // covariance blocks in x-order
};

Blocks closed_blocks(const cs::CVec3& u) {
  CMat m = gaussian_form(u);
  Blocks bl;
  bl.a.assign(4, std::vector<double>(4));
  bl.b.assign(4, std::vector<double>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      bl.a[i][j] = m[i][j].real();
      bl.b[i][j] = m[i][j].imag();
    }
  Mat ainv = num::dense_inverse(bl.a);
  bl.sxx.assign(4, std::vector<double>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) bl.sxx[i][j] = 0.5 * ainv[i][j];
  Mat ainv_b = matmul(ainv, bl.b);
  bl.sxp.assign(4, std::vector<double>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) bl.sxp[i][j] = -0.5 * ainv_b[i][j];
  Mat b_ainv_b = matmul(bl.b, ainv_b);
  bl.spp.assign(4, std::vector<double>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) bl.spp[i][j] = 0.5 * (bl.a[i][j] + b_ainv_b[i][j]);
  return bl;
}

Mat assemble_xorder(const Mat& sxx, const Mat& sxp, const Mat& spp) {
  Mat s(8, std::vector<double>(8, 0.0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      s[i][j] = sxx[i][j];
      s[i][4 + j] = sxp[i][j];
      s[4 + i][j] = sxp[j][i];
      s[4 + i][4 + j] = spp[i][j];
    }
  return s;
}

Mat omega_xorder() {
  Mat w(8, std::vector<double>(8, 0.0));
  for (int i = 0; i < 4; ++i) {
    w[i][4 + i] = 0.5;
    w[4 + i][i] = -0.5;
  }
  return w;
}

Mat permute(const Mat& s) {
  Mat r(8, std::vector<double>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) r[i][j] = s[kPerm[i]][kPerm[j]];
  return r;
}

using CVec8 = std::array<cd, 8>;

// coefficient vectors of the four annihilation operators over (x, p)
std::array<CVec8, 4> oscillator_vectors() {
  constexpr cd i1{0.0, 1.0};
  const double rt2 = std::sqrt(2.0);
  auto unit = [&](int j) {
    CVec8 v{};
    v[j] = 1.0 / rt2;
    v[4 + j] = i1 / rt2;
    return v;
  };
  auto lin = [&](cd ca, const CVec8& x, cd cb, const CVec8& y) {
    CVec8 r{};
    for (int k = 0; k < 8; ++k) r[k] = ca * x[k] + cb * y[k];
    return r;
  };
  CVec8 e0 = unit(0), e1 = unit(1), e2 = unit(2), e3 = unit(3);
  CVec8 a1 = lin(1.0 / rt2, e0, -i1 / rt2, e1);
  CVec8 a2 = lin(1.0 / rt2, e2, -i1 / rt2, e3);
  CVec8 b1 = lin(1.0 / rt2, e2, i1 / rt2, e3);
  CVec8 b2 = lin(-1.0 / rt2, e0, -i1 / rt2, e1);
  std::array<CVec8, 4> out;
  out[0] = lin(0.5, a1, 0.5, b1);             // A_1
  out[1] = lin(0.5, a2, 0.5, b2);             // A_2
  out[2] = lin(-0.5 * i1, a1, 0.5 * i1, b1);  // B_1
  out[3] = lin(-0.5 * i1, a2, 0.5 * i1, b2);  // B_2
  return out;
}

}  // namespace

CMat gaussian_form(const cs::CVec3& u) {
  cs::CVec4 k = cs::k_of_u(u);
  CMat m(4, std::vector<cd>(4, cd(0.0)));
  for (int i = 0; i < 4; ++i) {
    m[i][i] = k[0] - k[3] * kM3[i];
    for (int j = 0; j < 4; ++j) m[i][j] -= k[1] * kM1[i][j] + k[2] * kM2[i][j];
  }
  return m;
}

Moments closed_moments(const cs::CVec3& u) {
  Blocks bl = closed_blocks(u);
  Moments out;
  out.sigma = permute(assemble_xorder(bl.sxx, bl.sxp, bl.spp));
  out.omega = permute(omega_xorder());
  out.det_sigma = num::dense_det(out.sigma);
  out.det_omega = num::dense_det(out.omega);
  out.gap = std::abs(out.det_sigma - out.det_omega) / out.det_omega;
  return out;
}

ConstraintReport constraint_check(const cs::CVec3& u) {
  Blocks bl = closed_blocks(u);
  Mat sig = assemble_xorder(bl.sxx, bl.sxp, bl.spp);
  Mat omg = omega_xorder();
  auto lam = gen::annihilation_matrix(u);
  auto vecs = oscillator_vectors();  // {A_1, A_2, B_1, B_2}

  ConstraintReport rep;
  CMat rows;
  for (int fam = 0; fam < 2; ++fam) {    // A-family then B-family
    for (int a = 0; a < 2; ++a) {
      CVec8 c{};
      const CVec8& va = vecs[2 * fam + a];
      for (int k = 0; k < 8; ++k) c[k] = va[k];
      for (int b = 0; b < 2; ++b) {
        const CVec8& vb = vecs[2 * fam + b];
        for (int k = 0; k < 8; ++k) c[k] -= lam[a][b] * std::conj(vb[k]);
      }
      cd q = 0.0;
      for (int al = 0; al < 8; ++al)
        for (int be = 0; be < 8; ++be)
          q += std::conj(c[al]) * cd(sig[al][be], omg[al][be]) * c[be];
      rep.residual[2 * fam + a] = std::abs(q);
      rows.push_back(std::vector<cd>(c.begin(), c.end()));
    }
  }
  rep.rank = num::dense_rank(rows);
  return rep;
}

McResult mc_moments(const cs::CVec3& u, int nsamples, num::Rng& rng) {
  Blocks bl = closed_blocks(u);

  // Cholesky of Sxx
  Mat l(4, std::vector<double>(4, 0.0));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = bl.sxx[i][j];
      for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      if (i == j) {
        if (s <= 0.0) throw std::runtime_error("mc_moments: covariance not positive definite");
        l[i][i] = std::sqrt(s);
      } else {
        l[i][j] = s / l[j][j];
      }
    }
  }

  Mat sxx(4, std::vector<double>(4, 0.0)), sxp(4, std::vector<double>(4, 0.0)),
      spp(4, std::vector<double>(4, 0.0));
  for (int t = 0; t < nsamples; ++t) {
    double g[4], q[4], aq[4], bq[4];
    for (double& x : g) x = rng.normal();
    for (int i = 0; i < 4; ++i) {
      q[i] = 0.0;
      for (int j = 0; j <= i; ++j) q[i] += l[i][j] * g[j];
    }
    for (int i = 0; i < 4; ++i) {
      aq[i] = bq[i] = 0.0;
      for (int j = 0; j < 4; ++j) {
        aq[i] += bl.a[i][j] * q[j];
        bq[i] += bl.b[i][j] * q[j];
      }
    }
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        sxx[i][j] += q[i] * q[j];
        sxp[i][j] -= q[i] * bq[j];
        spp[i][j] += aq[i] * aq[j] + bq[i] * bq[j];
      }
  }
  double inv = 1.0 / nsamples;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      sxx[i][j] *= inv;
      sxp[i][j] *= inv;
      spp[i][j] *= inv;
    }

  McResult out;
  out.sigma = permute(assemble_xorder(sxx, sxp, spp));
  Mat closed = permute(assemble_xorder(bl.sxx, bl.sxp, bl.spp));
  double scale = 0.0, err = 0.0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      scale = std::max(scale, std::abs(closed[i][j]));
      err = std::max(err, std::abs(out.sigma[i][j] - closed[i][j]));
    }
  out.max_err = err / scale;
  return out;
}

}  // namespace hacs::rob
