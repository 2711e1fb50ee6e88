#include "doctest.h"

#include <complex>

#include "hacs/exact.hpp"

using namespace hacs::exact;
using cd = std::complex<double>;

TEST_CASE("gaussian rational scalar arithmetic") {
  CQ i = CQ::i();
  CHECK(i * i == CQ(-1));
  CHECK((CQ(Rat(1, 3)) + CQ(Rat(1, 6))) == CQ(Rat(1, 2)));
  CQ z(Rat(2), Rat(-1));
  CHECK(z * z.conj() == CQ(5));
  CHECK((z / z) == CQ(1));
  CHECK_THROWS_AS(z / CQ(0), std::domain_error);
  CHECK(to_cd(CQ(Rat(1, 4), Rat(-3, 2))) == cd(0.25, -1.5));
}

TEST_CASE("polynomial ring in canonical form") {
  using P = Poly<CQ>;
  P x = P::var(0), y = P::var(1);
  P p = x * x + y.scaled(CQ(2));

  CHECK(p.deriv(0) == x.scaled(CQ(2)));
  CHECK(p.deriv(1) == P::constant(CQ(2)));
  CHECK(p.deriv(2).is_zero());
  CHECK((p - p).is_zero());

  // (x + y)^2 expands with the cross term collected once
  P s = x + y;
  P sq = s * s;
  CHECK(sq == x * x + (x * y).scaled(CQ(2)) + y * y);

  std::array<cd, MAXV> pt{cd(2, 0), cd(0, 1), cd(0, 0), cd(0, 0)};
  CHECK(std::abs(p.eval(pt) - cd(4.0 + 0.0, 2.0)) < 1e-15);
}

TEST_CASE("normal-form composition obeys the Leibniz rule") {
  using D = DiffOp<CQ>;
  using P = Poly<CQ>;
  D dx = D::d(0);
  D mx = D::mul_by(P::var(0));

  CHECK(commutator(dx, mx) == D::identity());

  // d_x (x^2 .) = x^2 d_x + 2x
  D mx2 = D::mul_by(P::var(0) * P::var(0));
  D expect = compose(mx2, dx) + D::mul_by(P::var(0).scaled(CQ(2)));
  CHECK(compose(dx, mx2) == expect);

  // Euler operator: [x d_x, d_x] = -d_x
  D euler = compose(mx, dx);
  CHECK(commutator(euler, dx) == dx.scaled(CQ(-1)));

  // mixed-variable second order: [d_x d_y, x y] = x d_x + y d_y + 1
  D dxdy = compose(D::d(0), D::d(1));
  D mxy = D::mul_by(P::var(0) * P::var(1));
  D rhs = compose(mx, dx) + compose(D::mul_by(P::var(1)), D::d(1)) + D::identity();
  CHECK(commutator(dxdy, mxy) == rhs);
}

TEST_CASE("operators act exactly on polynomial-exponential functions") {
  using D = DiffOp<CQ>;
  using P = Poly<CQ>;
  // f = x e^{-x^2/2}: d_x f = (1 - x^2) e^{-x^2/2}
  ExpFn<CQ> f;
  f.Q = P::var(0);
  f.S = (P::var(0) * P::var(0)).scaled(-CQ::half());
  ExpFn<CQ> g = apply(D::d(0), f);
  CHECK(g.S == f.S);
  CHECK(g.Q == P::constant(CQ(1)) - P::var(0) * P::var(0));

  // number-operator identity: (-d^2 + x^2) f = 3 f for the first excited state
  D ham = D::mul_by(P::var(0) * P::var(0)) - compose(D::d(0), D::d(0));
  ExpFn<CQ> hf = apply(ham, f);
  CHECK(hf.Q == f.Q.scaled(CQ(3)));

  std::array<cd, MAXV> pt{cd(0.7, 0.2), cd(0, 0), cd(0, 0), cd(0, 0)};
  cd lhs = hf.eval(pt);
  cd rhs = 3.0 * f.eval(pt);
  CHECK(std::abs(lhs - rhs) < 1e-14);
}

TEST_CASE("exact row reduction over the rational field") {
  using M = std::vector<std::vector<CQ>>;
  M id3 = {{CQ(1), CQ(0), CQ(0)}, {CQ(0), CQ(1), CQ(0)}, {CQ(0), CQ(0), CQ(1)}};
  CHECK(exact_rank(id3) == 3);

  M dep = {{CQ(1), CQ(2), CQ(3)}, {CQ(2), CQ(4), CQ(6)}, {CQ(0), CQ(1), CQ(1)}};
  CHECK(exact_rank(dep) == 2);

  // near-singular in floating point, full rank exactly
  M tight = {{CQ(Rat(1)), CQ(Rat(1))}, {CQ(Rat(1)), CQ(Rat(1)) + CQ(Rat(1, 1000000000000))}};
  CHECK(exact_rank(tight) == 2);
}
