#include "hacs/generators.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "hacs/numerics.hpp"

namespace hacs::gen {

namespace {

using exact::apply;
using exact::commutator;
using exact::compose;
using exact::Mono;
using exact::mono_var;
using exact::mono_zero;
using P = Poly<CQ>;
using D = DiffOp<CQ>;
using PC = Poly<cd>;
using DC = DiffOp<cd>;

const CQ kI = CQ::i();
const CQ kHalf = CQ::half();
const CQ kHalfI = CQ(Rat(0), Rat(1, 2));

struct M2 {
  CQ m[2][2];
};

M2 mmul(const M2& x, const M2& y) {
  M2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = x.m[i][0] * y.m[0][j] + x.m[i][1] * y.m[1][j];
  return r;
}

M2 sigma(int k) {
  M2 r;
  switch (k) {
    case 0: r = {{{CQ(0), CQ(1)}, {CQ(1), CQ(0)}}}; break;
    case 1: r = {{{CQ(0), -kI}, {kI, CQ(0)}}}; break;
    default: r = {{{CQ(1), CQ(0)}, {CQ(0), CQ(-1)}}}; break;
  }
  return r;
}

M2 cmat() { return {{{CQ(0), CQ(1)}, {CQ(-1), CQ(0)}}}; }
M2 id2() { return {{{CQ(1), CQ(0)}, {CQ(0), CQ(1)}}}; }

// Sum_ab M_ab U_a V_b for the unscaled mode operators; U, V hold the
// sqrt2-scaled versions, hence the compensating 1/2.
D bilin(const std::array<D, 2>& U, const M2& M, const std::array<D, 2>& V) {
  D r;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      if (M.m[a][b].is_zero()) continue;
      r = r + compose(U[a], V[b]).scaled(M.m[a][b] * kHalf);
    }
  return r;
}

// sqrt2-scaled mode operators in variables (z1, z2, zb1, zb2) and the shared
// vacuum exponent; the annihilators kill exp(S0) and the pairwise scaled
// commutators are [sa, sad] = [sb, sbd] = 2.
struct Osc {
  std::array<D, 2> sa, sad, sb, sbd;
  std::array<D, 2> Aop, Ad, Bop, Bd;  // coherent-family combinations, scaled
  D L50, Hcon;
  P S0;
};

const Osc& osc() {
  static const Osc o = [] {
    Osc s;
    const int eps[2][2] = {{0, 1}, {-1, 0}};
    for (int a = 0; a < 2; ++a) {
      s.sa[a] = D::mul_by(P::var(2 + a)) + D::d(a);
      s.sad[a] = D::mul_by(P::var(a)) - D::d(2 + a);
      D b, bd;
      for (int k = 0; k < 2; ++k) {
        if (!eps[a][k]) continue;
        b = b + (D::mul_by(P::var(k)) + D::d(2 + k)).scaled(CQ(eps[a][k]));
        bd = bd + (D::mul_by(P::var(2 + k)) - D::d(k)).scaled(CQ(eps[a][k]));
      }
      s.sb[a] = b;
      s.sbd[a] = bd;
    }
    for (int a = 0; a < 2; ++a) {
      s.Aop[a] = (s.sa[a] + s.sb[a]).scaled(kHalf);
      s.Ad[a] = (s.sad[a] + s.sbd[a]).scaled(kHalf);
      s.Bop[a] = (s.sa[a] - s.sb[a]).scaled(-kHalfI);
      s.Bd[a] = (s.sad[a] - s.sbd[a]).scaled(kHalfI);
    }
    s.S0 = P::zero() - P::var(0) * P::var(2) - P::var(1) * P::var(3);
    s.L50 = (bilin(s.sad, id2(), s.sa) + bilin(s.sbd, id2(), s.sb)).scaled(kHalf) + D::identity();
    s.Hcon = bilin(s.sad, id2(), s.sa) - bilin(s.sbd, id2(), s.sb);
    return s;
  }();
  return o;
}

// Null-vector bilinears in (z1, z2, zb1, zb2).
std::array<P, 4> n_polys() {
  P z1 = P::var(0), z2 = P::var(1), w1 = P::var(2), w2 = P::var(3);
  P n0 = z1 * w1 + z2 * w2;
  P n1 = z1 * w2 + w1 * z2;
  P n2 = (w1 * z2 - z1 * w2).scaled(kI);
  P n3 = z1 * w1 - z2 * w2;
  return {n0, n1, n2, n3};
}

GeneratorFamily build_osc8() {
  GeneratorFamily fam;
  fam.tag = Realization::osc8;
  fam.var_names = {"z1", "z2", "w1", "w2"};
  const Osc& o = osc();
  const M2 Cm = cmat();
  D J[3];
  for (int k = 0; k < 3; ++k)
    J[k] = (bilin(o.sad, sigma(k), o.sa) + bilin(o.sbd, sigma(k), o.sb)).scaled(kHalf);
  fam.L[{1, 2}] = J[2];
  fam.L[{2, 3}] = J[0];
  fam.L[{1, 3}] = J[1].scaled(CQ(-1));
  for (int i = 0; i < 3; ++i) {
    M2 siC = mmul(sigma(i), Cm), Csi = mmul(Cm, sigma(i));
    D li5 = bilin(o.sad, siC, o.sbd).scaled(-kHalf) + bilin(o.sa, Csi, o.sb).scaled(kHalf);
    D li0 = (bilin(o.sad, siC, o.sbd) + bilin(o.sa, Csi, o.sb)).scaled(-kHalfI);
    D li6 = bilin(o.sad, sigma(i), o.sa).scaled(-kHalf) + bilin(o.sbd, sigma(i), o.sb).scaled(kHalf);
    fam.L[{i + 1, 5}] = li5;
    fam.L[{0, i + 1}] = li0.scaled(CQ(-1));
    fam.L[{i + 1, 6}] = li6;
  }
  fam.L[{0, 5}] = o.L50.scaled(CQ(-1));
  fam.L[{5, 6}] = bilin(o.sad, Cm, o.sbd).scaled(kHalfI) + bilin(o.sa, Cm, o.sb).scaled(-kHalfI);
  fam.L[{0, 6}] =
      (bilin(o.sad, Cm, o.sbd) + bilin(o.sa, Cm, o.sb)).scaled(kHalf).scaled(CQ(-1));
  return fam;
}

GeneratorFamily build_param13() {
  GeneratorFamily fam;
  fam.tag = Realization::param13;
  fam.var_names = {"u1", "u2", "u3", "_"};
  P U[3] = {P::var(0), P::var(1), P::var(2)};
  P u2 = U[0] * U[0] + U[1] * U[1] + U[2] * U[2];
  P one = P::constant(CQ(1));
  D udot;
  for (int k = 0; k < 3; ++k) udot = udot + D::term(mono_var(k), U[k]);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      fam.L[{i + 1, j + 1}] =
          D::term(mono_var(i), U[j]).scaled(kI) + D::term(mono_var(j), U[i]).scaled(-kI);
  for (int i = 0; i < 3; ++i) {
    D t2;
    for (int k = 0; k < 3; ++k) t2 = t2 + D::term(mono_var(k), U[i] * U[k]);
    D t1 = D::term(mono_var(i), (one + u2).scaled(kHalf));
    fam.L[{i + 1, 5}] = (t1 - t2).scaled(kI);
    D s1 = D::term(mono_var(i), (one - u2).scaled(kHalf));
    fam.L[{0, i + 1}] = (s1 + t2).scaled(CQ(-1));
  }
  fam.L[{0, 5}] = udot.scaled(CQ(-1));
  return fam;
}

GeneratorFamily build_cont2() {
  GeneratorFamily fam;
  fam.tag = Realization::param_cont2;
  fam.var_names = {"v1", "v2", "v3", "_"};
  P V[3] = {P::var(0), P::var(1), P::var(2)};
  P v2 = V[0] * V[0] + V[1] * V[1] + V[2] * V[2];
  D pim[3], pip[3];
  for (int i = 0; i < 3; ++i) {
    pim[i] = D::d(i).scaled(kI);
    D t2;
    for (int k = 0; k < 3; ++k) t2 = t2 + D::term(mono_var(k), V[i] * V[k]);
    pip[i] = (D::term(mono_var(i), v2) + t2.scaled(CQ(-2))).scaled(-kI);
  }
  for (int i = 0; i < 3; ++i) {
    fam.L[{i + 1, 6}] = (pip[i] + pim[i]).scaled(-kHalf);
    fam.L[{0, i + 1}] = (pip[i] - pim[i]).scaled(kHalf);
  }
  D vdot;
  for (int k = 0; k < 3; ++k) vdot = vdot + D::term(mono_var(k), V[k]);
  fam.L[{0, 6}] = vdot.scaled(-kI);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      fam.L[{i + 1, j + 1}] =
          D::term(mono_var(i), V[j]).scaled(kI) + D::term(mono_var(j), V[i]).scaled(-kI);
  return fam;
}

GeneratorFamily build_twistor3() {
  GeneratorFamily fam;
  fam.tag = Realization::twistor3;
  fam.var_names = {"Z0", "Z1", "Z2", "Z3"};
  const int low[4] = {1, -1, -1, -1};
  P Z[4] = {P::var(0), P::var(1), P::var(2), P::var(3)};
  P zdz;
  for (int m = 0; m < 4; ++m) zdz = zdz + (Z[m] * Z[m]).scaled(CQ(low[m]));
  D zdot;
  for (int m = 0; m < 4; ++m) zdot = zdot + D::term(mono_var(m), Z[m]);
  auto Gm = [](int mu) { return D::d(mu); };
  auto Gp = [&](int mu) {
    D t1 = D::term(mono_var(mu), zdz);
    D t2;
    for (int k = 0; k < 4; ++k) t2 = t2 + D::term(mono_var(k), Z[mu] * Z[k]);
    t2 = t2.scaled(CQ(-2 * low[mu]));
    D t3 = D::mul_by(Z[mu].scaled(CQ(-2 * low[mu])));
    return t1 + t2 + t3;
  };
  for (int mu = 0; mu < 4; ++mu) {
    CQ s = CQ(mu == 0 ? 1 : -1) * kHalfI;
    fam.L[{mu, 5}] = (Gp(mu) - Gm(mu)).scaled(s);
    fam.L[{mu, 6}] = (Gp(mu) + Gm(mu)).scaled(s);
  }
  fam.L[{5, 6}] = (zdot + D::identity()).scaled(-kI);
  for (int m = 0; m < 4; ++m)
    for (int p = m + 1; p < 4; ++p) {
      D t = D::term(mono_var(p), Z[m].scaled(CQ(low[m]))).scaled(kI) +
            D::term(mono_var(m), Z[p].scaled(CQ(low[p]))).scaled(-kI);
      fam.L[{m, p}] = m == 0 ? t.scaled(CQ(-1)) : t;
    }
  return fam;
}

PC poly_cd(const P& p) {
  PC r;
  for (auto& [m, c] : p.t) r.add(m, exact::to_cd(c));
  return r;
}

DC diffop_cd(const D& d) {
  DC r;
  for (auto& [a, p] : d.t) r.add(a, poly_cd(p));
  return r;
}

Rat factorial_rat(int n) {
  Rat r(1);
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// Numeric configuration-space generators, assembled from 4th-order central
// differences of a scalar field. S is the working real type.
template <class S>
struct Config11 {
  using C = std::complex<S>;
  using F = std::function<C(const std::array<S, 3>&)>;
  S h;

  C d1(const F& f, std::array<S, 3> x, int i) const {
    const S x0 = x[i];
    auto at = [&](S d) {
      x[i] = x0 + d;
      return f(x);
    };
    return (at(-2 * h) - at(-h) * S(8) + at(h) * S(8) - at(2 * h)) / (S(12) * h);
  }
  C d2(const F& f, std::array<S, 3> x, int i) const {
    const S x0 = x[i];
    auto at = [&](S d) {
      x[i] = x0 + d;
      return f(x);
    };
    return (-at(-2 * h) + at(-h) * S(16) - at(0) * S(30) + at(h) * S(16) - at(2 * h)) /
           (S(12) * h * h);
  }
  C d11(const F& f, std::array<S, 3> x, int i, int j) const {
    const S x0 = x[j];
    auto g = [&](S d) {
      std::array<S, 3> y = x;
      y[j] = x0 + d;
      return d1(f, y, i);
    };
    return (g(-2 * h) - g(-h) * S(8) + g(h) * S(8) - g(2 * h)) / (S(12) * h);
  }

  C apply(const Pair& slot, const F& f, const std::array<S, 3>& x) const {
    const C ic(0, 1);
    auto r_of = [&] { return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]); };
    auto [A, B] = slot;
    if (A >= 1 && A <= 3 && B >= 1 && B <= 3) {  // x_i p_j - x_j p_i
      int a = A - 1, b = B - 1;
      return -ic * (x[a] * d1(f, x, b) - x[b] * d1(f, x, a));
    }
    if (A == 0 && B >= 1 && B <= 3) return r_of() * (-ic) * d1(f, x, B - 1);  // r p_i
    if (B == 5 || B == 6) {
      if (A == 0) {  // -(r p^2 +- r)/2
        C lap = d2(f, x, 0) + d2(f, x, 1) + d2(f, x, 2);
        S r = r_of();
        S sign = B == 5 ? S(1) : S(-1);
        return (r * lap - sign * r * f(x)) / S(2);
      }
      if (A >= 1 && A <= 3) {  // -x_i p^2/2 + p_i(x.p) -+ x_i/2
        int a = A - 1;
        C lap = d2(f, x, 0) + d2(f, x, 1) + d2(f, x, 2);
        C mixed = 0;
        for (int j = 0; j < 3; ++j) mixed += x[j] * (j == a ? d2(f, x, a) : d11(f, x, a, j));
        S sign = B == 5 ? S(-1) : S(1);
        return x[a] * lap / S(2) - d1(f, x, a) - mixed + sign * x[a] * f(x) / S(2);
      }
      if (A == 5 && B == 6) {  // -(x.p - i)
        C s = 0;
        for (int j = 0; j < 3; ++j) s += x[j] * d1(f, x, j);
        return ic * s + ic * f(x);
      }
    }
    throw std::invalid_argument("config11: bad slot");
  }
};

}  // namespace

Realization realization_from_string(const std::string& s) {
  if (s == "osc8") return Realization::osc8;
  if (s == "param13") return Realization::param13;
  if (s == "param-cont2" || s == "param_cont2") return Realization::param_cont2;
  if (s == "twistor3") return Realization::twistor3;
  throw std::invalid_argument("unknown realization: " + s);
}

std::string to_string(Realization r) {
  switch (r) {
    case Realization::osc8: return "osc8";
    case Realization::param13: return "param13";
    case Realization::param_cont2: return "param-cont2";
    default: return "twistor3";
  }
}

int metric_eta(int idx) { return (idx == 0 || idx == 5) ? 1 : -1; }

const std::vector<Pair>& canonical_pairs() {
  static const std::vector<Pair> pairs = [] {
    const int idx[6] = {0, 1, 2, 3, 5, 6};
    std::vector<Pair> v;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) v.emplace_back(idx[a], idx[b]);
    return v;
  }();
  return pairs;
}

GeneratorFamily build_family(Realization tag) {
  switch (tag) {
    case Realization::osc8: return build_osc8();
    case Realization::param13: return build_param13();
    case Realization::param_cont2: return build_cont2();
    default: return build_twistor3();
  }
}

DiffOp<CQ> family_slot(const GeneratorFamily& f, int A, int B) {
  if (A == B) return D::zero();
  auto it = f.L.find({A, B});
  if (it != f.L.end()) return it->second;
  it = f.L.find({B, A});
  if (it != f.L.end()) return it->second.scaled(CQ(-1));
  throw std::out_of_range("family_slot: missing generator");
}

std::vector<CommutatorFinding> check_commutators(const GeneratorFamily& f) {
  std::vector<Pair> keys;
  keys.reserve(f.L.size());
  for (auto& [k, v] : f.L) keys.push_back(k);
  std::vector<CommutatorFinding> bad;
  for (std::size_t a = 0; a < keys.size(); ++a) {
    for (std::size_t b = a + 1; b < keys.size(); ++b) {
      auto [A, B] = keys[a];
      auto [C, E] = keys[b];
      D comm = commutator(f.L.at(keys[a]), f.L.at(keys[b]));
      D rhs;
      auto acc = [&](int coef, int Pp, int Qq) {
        if (coef == 0 || Pp == Qq) return;
        rhs = rhs + family_slot(f, Pp, Qq).scaled(CQ(coef));
      };
      if (A == E) acc(metric_eta(A), B, C);
      if (B == C) acc(metric_eta(B), A, E);
      if (A == C) acc(-metric_eta(A), B, E);
      if (B == E) acc(-metric_eta(B), A, C);
      D resid = comm - rhs.scaled(kI);
      if (!resid.is_zero())
        bad.push_back({keys[a], keys[b], exact::diffop_str(resid, f.var_names)});
    }
  }
  return bad;
}

FockState fock_state(const hyd::DiscreteLabel& label) {
  const int M = std::abs(label.m);
  std::array<int, 4> pows;
  if (label.m >= 0)
    pows = {label.n1 + M, label.n2, label.n2 + M, label.n1};
  else
    pows = {label.n1, label.n2 + M, label.n2, label.n1 + M};
  const Osc& o = osc();
  ExpFn<CQ> st{P::constant(CQ(1)), o.S0};
  const D* ops[4] = {&o.sad[0], &o.sad[1], &o.sbd[0], &o.sbd[1]};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < pows[i]; ++k) st = apply(*ops[i], st);
  Rat scale(1);
  scale /= Rat(boost::multiprecision::cpp_int(1) << (label.n1 + label.n2 + M));
  if ((label.n1 + label.n2) % 2 != 0) scale = -scale;
  st.Q = st.Q.scaled(CQ(scale));
  FockState fs;
  fs.label = label;
  fs.value = st;
  fs.norm_sq = factorial_rat(label.n1) * factorial_rat(label.n1 + M) *
               factorial_rat(label.n2) * factorial_rat(label.n2 + M);
  return fs;
}

cd FockState::eval4(double xi1, double xi2, double eta1, double eta2) const {
  const double s = 1.0 / std::sqrt(2.0);
  cd z1(xi1 * s, xi2 * s), z2(eta1 * s, eta2 * s);
  std::array<cd, 4> pt{z1, z2, std::conj(z1), std::conj(z2)};
  return value.eval(pt) / std::sqrt(norm_sq.convert_to<double>());
}

ExpFn<CQ> check_eigen_L50(const hyd::DiscreteLabel& label) {
  FockState fs = fock_state(label);
  ExpFn<CQ> lhs = apply(osc().L50, fs.value);
  lhs.Q = lhs.Q - fs.value.Q.scaled(CQ(label.n()));
  return lhs;
}

ExpFn<CQ> check_constraint(const ExpFn<CQ>& f) { return apply(osc().Hcon, f); }

std::array<std::array<cd, 2>, 2> annihilation_matrix(const std::array<cd, 3>& u) {
  const cd i(0, 1);
  return {{{u[0] - i * u[1], -u[2]}, {-u[2], -u[0] - i * u[1]}}};
}

std::array<ExpFn<CQ>, 4> check_annihilation_exact(const std::array<CQ, 3>& u) {
  CQ u2 = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
  CQ den = CQ(1) - u2;
  if (den.is_zero()) throw std::domain_error("u.u = 1: light cone of the parameter domain");
  CQ k0 = (CQ(1) + u2) / den;
  CQ k[3] = {CQ(2) * u[0] / den, CQ(2) * u[1] / den, CQ(2) * u[2] / den};
  auto n = n_polys();
  P S = n[0].scaled(-k0) + n[1].scaled(k[0]) + n[2].scaled(k[1]) + n[3].scaled(k[2]);
  ExpFn<CQ> f{P::constant(CQ(1)), S};
  CQ lam[2][2] = {{u[0] - kI * u[1], -u[2]}, {-u[2], CQ(0) - u[0] - kI * u[1]}};
  const Osc& o = osc();
  std::array<ExpFn<CQ>, 4> res;
  for (int a = 0; a < 2; ++a) {
    ExpFn<CQ> ra = apply(o.Aop[a], f);
    ExpFn<CQ> rb = apply(o.Bop[a], f);
    for (int b = 0; b < 2; ++b) {
      ra.Q = ra.Q - apply(o.Ad[b], f).Q.scaled(lam[a][b]);
      rb.Q = rb.Q - apply(o.Bd[b], f).Q.scaled(lam[a][b]);
    }
    res[a] = ra;
    res[2 + a] = rb;
  }
  return res;
}

double check_annihilation_float(const std::array<cd, 3>& u) {
  cd u2 = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
  cd den = 1.0 - u2;
  cd k0 = (1.0 + u2) / den;
  cd k[3] = {2.0 * u[0] / den, 2.0 * u[1] / den, 2.0 * u[2] / den};
  auto n = n_polys();
  PC S = poly_cd(n[0]).scaled(-k0) + poly_cd(n[1]).scaled(k[0]) + poly_cd(n[2]).scaled(k[1]) +
         poly_cd(n[3]).scaled(k[2]);
  ExpFn<cd> f{PC::constant(1.0), S};
  auto lam = annihilation_matrix(u);
  const Osc& o = osc();
  double worst = 0.0;
  for (int a = 0; a < 2; ++a) {
    ExpFn<cd> ra = exact::apply(diffop_cd(o.Aop[a]), f);
    ExpFn<cd> rb = exact::apply(diffop_cd(o.Bop[a]), f);
    for (int b = 0; b < 2; ++b) {
      ra.Q = ra.Q - exact::apply(diffop_cd(o.Ad[b]), f).Q.scaled(lam[a][b]);
      rb.Q = rb.Q - exact::apply(diffop_cd(o.Bd[b]), f).Q.scaled(lam[a][b]);
    }
    worst = std::max({worst, ra.Q.max_abs_coeff(), rb.Q.max_abs_coeff()});
  }
  return worst;
}

namespace {

using Feat = std::pair<Mono, Mono>;

std::map<Feat, CQ> dvec(const D& op) {
  std::map<Feat, CQ> r;
  for (auto& [alpha, p] : op.t)
    for (auto& [m, c] : p.t) r[{alpha, m}] = c;
  return r;
}

// Exact least-structure solve of A x = b (A full column rank expected);
// returns consistency and the solution.
std::pair<bool, std::vector<CQ>> exact_solve(std::vector<std::vector<CQ>> A, std::vector<CQ> b) {
  const int rows = int(A.size());
  const int cols = rows ? int(A[0].size()) : 0;
  std::vector<int> pivot_row(cols, -1);
  int cur = 0;
  for (int c = 0; c < cols && cur < rows; ++c) {
    int piv = -1;
    for (int r = cur; r < rows; ++r)
      if (!A[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[cur], A[piv]);
    std::swap(b[cur], b[piv]);
    for (int r = 0; r < rows; ++r) {
      if (r == cur || A[r][c].is_zero()) continue;
      CQ f = A[r][c] / A[cur][c];
      for (int cc = 0; cc < cols; ++cc) A[r][cc] = A[r][cc] - f * A[cur][cc];
      b[r] = b[r] - f * b[cur];
    }
    pivot_row[c] = cur;
    ++cur;
  }
  for (int r = cur; r < rows; ++r)
    if (!b[r].is_zero()) return {false, {}};
  std::vector<CQ> x(cols, CQ(0));
  for (int c = 0; c < cols; ++c)
    if (pivot_row[c] >= 0) x[c] = b[pivot_row[c]] / A[pivot_row[c]][c];
  return {true, x};
}

}  // namespace

Sp2rReport check_sp2r_span() {
  const Osc& o = osc();
  GeneratorFamily fam = build_osc8();
  std::vector<D> basis;
  for (Pair k : {Pair{1, 2}, Pair{1, 3}, Pair{2, 3}, Pair{1, 5}, Pair{2, 5}, Pair{3, 5},
                 Pair{0, 1}, Pair{0, 2}, Pair{0, 3}, Pair{0, 5}})
    basis.push_back(fam.L.at(k));
  auto opX = [&](int a, int b) {
    return (compose(o.Aop[a], o.Aop[b]) + compose(o.Bop[a], o.Bop[b])).scaled(kHalf);
  };
  auto opXd = [&](int a, int b) {
    return (compose(o.Ad[a], o.Ad[b]) + compose(o.Bd[a], o.Bd[b])).scaled(kHalf);
  };
  auto opY = [&](int a, int b) {
    D t = compose(o.Aop[a], o.Ad[b]) + compose(o.Ad[b], o.Aop[a]) +
          compose(o.Bop[a], o.Bd[b]) + compose(o.Bd[b], o.Bop[a]);
    return t.scaled(CQ(Rat(1, 4)));
  };
  std::vector<D> targets = {opX(0, 0),  opX(0, 1),  opX(1, 1), opXd(0, 0), opXd(0, 1),
                            opXd(1, 1), opY(0, 0),  opY(0, 1), opY(1, 0),  opY(1, 1)};

  std::map<Feat, int> feat_index;
  std::vector<std::map<Feat, CQ>> bvec, tvec;
  for (auto& op : basis) bvec.push_back(dvec(op));
  for (auto& op : targets) tvec.push_back(dvec(op));
  for (auto& v : bvec)
    for (auto& [f, c] : v) feat_index.emplace(f, int(feat_index.size()));
  for (auto& v : tvec)
    for (auto& [f, c] : v) feat_index.emplace(f, int(feat_index.size()));

  const int nf = int(feat_index.size()), nb = int(bvec.size());
  std::vector<std::vector<CQ>> A(nf, std::vector<CQ>(nb, CQ(0)));
  for (int j = 0; j < nb; ++j)
    for (auto& [f, c] : bvec[j]) A[feat_index.at(f)][j] = c;

  Sp2rReport rep;
  rep.consistent = true;
  std::vector<std::vector<CQ>> coeff;
  for (auto& tv : tvec) {
    std::vector<CQ> b(nf, CQ(0));
    for (auto& [f, c] : tv) b[feat_index.at(f)] = c;
    auto [ok, x] = exact_solve(A, b);
    if (!ok) rep.consistent = false;
    coeff.push_back(ok ? x : std::vector<CQ>(nb, CQ(0)));
  }
  rep.rank = exact::exact_rank(coeff);
  D ytrace = (opY(0, 0) + opY(1, 1)) - o.L50;
  rep.y_trace_is_l50 = ytrace.is_zero();
  return rep;
}

double check_intertwining(
    const std::vector<std::pair<hyd::Point3, std::array<cd, 4>>>& samples, double h) {
  GeneratorFamily fam = build_twistor3();
  std::map<Pair, DC> famc;
  for (auto& [k, v] : fam.L) famc.emplace(k, diffop_cd(v));
  Config11<double> cfg{h};
  double worst = 0.0;
  for (auto& [x, z] : samples) {
    auto E = [&z](const std::array<double, 3>& y) {
      double r = std::sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2]);
      cd theta = r * z[0] - (y[0] * z[1] + y[1] * z[2] + y[2] * z[3]);
      return std::exp(cd(0, 1) * theta);
    };
    PC S = PC::var(0).scaled(cd(0, 1) * cd(x.r())) + PC::var(1).scaled(cd(0, -1) * cd(x.x1)) +
           PC::var(2).scaled(cd(0, -1) * cd(x.x2)) + PC::var(3).scaled(cd(0, -1) * cd(x.x3));
    ExpFn<cd> Ez{PC::constant(1.0), S};
    std::array<cd, 4> zpt{z[0], z[1], z[2], z[3]};
    std::array<double, 3> xpt{x.x1, x.x2, x.x3};
    for (auto& [slot, op] : famc) {
      cd lhs = cfg.apply(slot, E, xpt);
      cd rhs = exact::apply(op, Ez).eval(zpt);
      double res = std::abs(lhs + rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
      worst = std::max(worst, res);
    }
  }
  return worst;
}

double config11_closure_residual(std::uint64_t seed, int npoints, long double h_inner,
                                 long double h_outer) {
  using S = long double;
  using C = std::complex<S>;
  using F = typename Config11<S>::F;
  num::Rng rng(seed);
  Config11<S> inner{h_inner}, outer{h_outer};
  const auto& pairs = canonical_pairs();
  double worst = 0.0;
  for (int p = 0; p < npoints; ++p) {
    const S a = S(rng.uniform(0.2, 0.4));
    const S b0 = S(rng.uniform(-0.3, 0.3)), b1 = S(rng.uniform(-0.3, 0.3)),
            b2 = S(rng.uniform(-0.3, 0.3));
    const S c01 = S(rng.uniform(-0.15, 0.15)), c12 = S(rng.uniform(-0.15, 0.15));
    F f = [=](const std::array<S, 3>& y) {
      S q = -a * (y[0] * y[0] + y[1] * y[1] + y[2] * y[2]) + b0 * y[0] + b1 * y[1] + b2 * y[2] +
            c01 * y[0] * y[1] + c12 * y[1] * y[2];
      return C(std::exp(q), 0);
    };
    std::array<S, 3> x;
    do {
      for (int i = 0; i < 3; ++i) x[i] = S(rng.uniform(-1.2, 1.2));
    } while (x[0] * x[0] + x[1] * x[1] + x[2] * x[2] < S(0.36));
    std::map<Pair, C> single;
    for (auto& slot : pairs) single[slot] = inner.apply(slot, f, x);
    auto single_signed = [&](int A, int B) -> C {
      if (A == B) return C(0);
      auto it = single.find({A, B});
      if (it != single.end()) return it->second;
      return -single.at({B, A});
    };
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        auto [A, B] = pairs[i];
        auto [Cc, E] = pairs[j];
        F g_cd = [&](const std::array<S, 3>& y) { return inner.apply(pairs[j], f, y); };
        F g_ab = [&](const std::array<S, 3>& y) { return inner.apply(pairs[i], f, y); };
        C lhs = outer.apply(pairs[i], g_cd, x) - outer.apply(pairs[j], g_ab, x);
        C rhs(0);
        auto acc = [&](int coef, int Pp, int Qq) {
          if (coef) rhs += S(coef) * single_signed(Pp, Qq);
        };
        if (A == E) acc(metric_eta(A), B, Cc);
        if (B == Cc) acc(metric_eta(B), A, E);
        if (A == Cc) acc(-metric_eta(A), B, E);
        if (B == E) acc(-metric_eta(B), A, Cc);
        C resid = lhs - C(0, 1) * rhs;
        double rel = double(std::abs(resid) /
                            std::max({S(1), std::abs(lhs), std::abs(rhs)}));
        worst = std::max(worst, rel);
      }
    }
  }
  return worst;
}

double perelomov_ray_residual(const std::array<cd, 3>& u, int kmax) {
  const Osc& o = osc();
  auto lam = annihilation_matrix(u);
  // T = sum_ab Lambda_ab a+_a b+_b, as one operator (the 1/2 undoes scaling).
  DC T;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      T = T + compose(diffop_cd(o.sad[a]), diffop_cd(o.sbd[b])).scaled(lam[a][b] * cd(0.5));
  PC S0 = poly_cd(o.S0);
  ExpFn<cd> term{PC::constant(1.0), S0};
  PC state = term.Q;
  double fact = 1.0;
  for (int j = 1; j <= kmax; ++j) {
    term = exact::apply(T, term);
    fact *= j;
    state = state + term.Q.scaled(cd(1.0 / fact));
  }
  // coherent exponential relative to the vacuum
  cd u2 = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
  cd den = 1.0 - u2;
  cd k0 = (1.0 + u2) / den;
  cd k[3] = {2.0 * u[0] / den, 2.0 * u[1] / den, 2.0 * u[2] / den};
  auto n = n_polys();
  PC Su = poly_cd(n[0]).scaled(-k0) + poly_cd(n[1]).scaled(k[0]) + poly_cd(n[2]).scaled(k[1]) +
          poly_cd(n[3]).scaled(k[2]);
  PC diff = Su - S0;
  auto prune = [](const PC& p, int dmax) {
    PC r;
    for (auto& [m, c] : p.t) {
      int d = 0;
      for (int i = 0; i < exact::MAXV; ++i) d += m[i];
      if (d <= dmax) r.add(m, c);
    }
    return r;
  };
  PC e2 = PC::constant(1.0), dj = PC::constant(1.0);
  fact = 1.0;
  for (int j = 1; j <= kmax; ++j) {
    dj = prune(dj * diff, 2 * kmax);
    fact *= j;
    e2 = e2 + dj.scaled(cd(1.0 / fact));
  }
  cd c1 = 0.0, c2 = 0.0;
  auto vac = mono_zero();
  if (auto it = state.t.find(vac); it != state.t.end()) c1 = it->second;
  if (auto it = e2.t.find(vac); it != e2.t.end()) c2 = it->second;
  if (c1 == cd(0.0) || c2 == cd(0.0)) return 1e300;
  double err = 0.0;
  auto scan = [&](const PC& p1, const PC& p2, cd n1, cd n2) {
    for (auto& [m, c] : p1.t) {
      int d = 0;
      for (int i = 0; i < exact::MAXV; ++i) d += m[i];
      if (d > 4) continue;
      cd other = 0.0;
      if (auto it = p2.t.find(m); it != p2.t.end()) other = it->second;
      err = std::max(err, std::abs(c / n1 - other / n2));
    }
  };
  scan(state, e2, c1, c2);
  scan(e2, state, c2, c1);
  return err;
}

}  // namespace hacs::gen
