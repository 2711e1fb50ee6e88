#include "doctest.h"

#include <cmath>
#include <complex>

#include "hacs/numerics.hpp"

using namespace hacs::num;
using cd = std::complex<double>;

TEST_CASE("fixed quadrature rules hit their exactness classes") {
  using RF = std::function<double(double)>;
  auto gl = QuadratureRule::gauss_legendre(8, 0.0, 1.0);
  double x2 = integrate(gl, RF([](double x) { return x * x; }));
  CHECK(std::abs(x2 - 1.0 / 3.0) < 1e-15);
  double x15 = integrate(gl, RF([](double x) { return std::pow(x, 15); }));
  CHECK(std::abs(x15 - 1.0 / 16.0) < 1e-14);

  auto glag = QuadratureRule::gauss_laguerre(16);
  double m3 = 0.0;
  for (std::size_t i = 0; i < glag.x.size(); ++i)
    m3 += glag.w[i] * glag.x[i] * glag.x[i] * glag.x[i];
  CHECK(std::abs(m3 - 6.0) < 1e-11);
  // we = w e^x turns the rule into a plain-dx rule on [0, inf)
  double m2 = 0.0;
  for (std::size_t i = 0; i < glag.x.size(); ++i) {
    double x = glag.x[i];
    m2 += glag.we[i] * x * x * std::exp(-x);
  }
  CHECK(std::abs(m2 - 2.0) < 1e-11);

  auto up = QuadratureRule::uniform_periodic(8);
  double c3 = integrate(up, RF([](double p) { return std::cos(3 * p) * std::cos(3 * p); }));
  CHECK(std::abs(c3 - M_PI) < 1e-13);
  double c1s = integrate(up, RF([](double p) { return std::cos(p) * std::sin(p); }));
  CHECK(std::abs(c1s) < 1e-15);
}

TEST_CASE("adaptive integrator reaches the requested tolerance") {
  using RF = std::function<double(double)>;
  using CF = std::function<cd(double)>;
  double pi4 =
      integrate_adaptive(RF([](double x) { return 4.0 / (1.0 + x * x); }), 0.0, 1.0, 1e-13);
  CHECK(std::abs(pi4 - M_PI) < 1e-12);

  cd osc = integrate_adaptive(CF([](double x) { return std::exp(cd(0.0, x)); }), 0.0, M_PI, 1e-12);
  CHECK(std::abs(osc - cd(0.0, 2.0)) < 1e-11);

  // integrand with a sharp feature off-center
  double peak = integrate_adaptive(
      RF([](double x) { return 1.0 / (1e-4 + (x - 0.3) * (x - 0.3)); }), 0.0, 1.0, 1e-10);
  double exact = (std::atan(0.7 / 1e-2) + std::atan(0.3 / 1e-2)) / 1e-2;
  CHECK(std::abs(peak - exact) / exact < 1e-12);
}

TEST_CASE("central difference stencils") {
  auto f = [](double x) { return std::sin(x); };
  CHECK(std::abs(fd_d1(f, 0.7, 1e-2) - std::cos(0.7)) < 5e-9);
  CHECK(std::abs(fd_d2(f, 0.7, 1e-2) + std::sin(0.7)) < 5e-8);
  CHECK(std::abs(fd_d1_o2(f, 0.7, 1e-5) - std::cos(0.7)) < 1e-9);

  auto g = [](long double x) -> long double { return std::exp(x); };
  long double d = fd_d2(g, 0.5L, 1e-3L);
  CHECK(std::abs(double(d) - std::exp(0.5)) < 1e-11);
}

TEST_CASE("dense linear algebra") {
  std::vector<std::vector<double>> m{{1, 2}, {3, 4}};
  CHECK(std::abs(dense_det(m) + 2.0) < 1e-14);

  std::vector<std::vector<cd>> cm{{cd(0, 1), cd(1, 0)}, {cd(1, 0), cd(0, 1)}};
  CHECK(std::abs(dense_det(cm) - cd(-2.0, 0.0)) < 1e-14);

  std::vector<std::vector<double>> r1{{1, 2, 3}, {2, 4, 6}, {-1, -2, -3}};
  CHECK(dense_rank(r1) == 1);

  // rectangular rank, the shape the constraint check uses
  std::vector<std::vector<cd>> rect{{cd(1), cd(0), cd(1), cd(0), cd(0), cd(0), cd(0), cd(0)},
                                    {cd(0), cd(1), cd(0), cd(1), cd(0), cd(0), cd(0), cd(0)}};
  CHECK(dense_rank(rect) == 2);

  auto sol = dense_solve({{2, 0}, {0, 4}}, {2, 8});
  CHECK(std::abs(sol[0] - 1.0) < 1e-14);
  CHECK(std::abs(sol[1] - 2.0) < 1e-14);

  std::vector<std::vector<double>> a{{4, 1, 0}, {1, 3, -1}, {0, -1, 2}};
  auto inv = dense_inverse(a);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * inv[k][j];
      CHECK(std::abs(s - (i == j ? 1.0 : 0.0)) < 1e-13);
    }
}

TEST_CASE("rng streams are reproducible") {
  Rng a(42), b(42);
  for (int i = 0; i < 16; ++i) CHECK(a.uniform() == b.uniform());
  for (int i = 0; i < 16; ++i) CHECK(a.normal() == b.normal());
  Rng c(43);
  CHECK(c.uniform() != Rng(42).uniform());

  double u = Rng(7).uniform(2.0, 3.0);
  CHECK(u >= 2.0);
  CHECK(u < 3.0);
}

TEST_CASE("tolerance registry round trip") {
  Tolerances t;
  CHECK(t.set("gram", 1e-6));
  CHECK(t.gram == 1e-6);
  CHECK_FALSE(t.set("no_such_key", 1.0));

  auto m = t.as_map();
  CHECK(m.size() == 24);
  CHECK(m.at("gram") == 1e-6);
  CHECK(m.at("measure_density") == 1e-6);
  CHECK(m.at("robertson_mc") == 0.05);
  CHECK(m.at("fd_step_laplacian") == 1e-3);
  for (auto& [k, v] : m) CHECK(t.set(k, v));
}
