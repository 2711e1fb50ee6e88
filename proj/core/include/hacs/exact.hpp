#pragma once

// Exact symbolic layer: Gaussian-rational scalars, multivariate polynomials in
// canonical form, differential operators in normal form (coefficients left of
// derivatives), and their action on polynomial-times-exponential functions.
// Everything is templated on the coefficient field so the same algebra runs
// exactly (CQ) or in floating point (std::complex<double>).

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hacs::exact {

using Rat = boost::multiprecision::cpp_rational;

struct CQ {
  Rat re{0}, im{0};

  CQ() = default;
  CQ(int n) : re(n) {}
  CQ(long n) : re(n) {}
  CQ(Rat r) : re(std::move(r)) {}
  CQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static CQ i() { return CQ(Rat(0), Rat(1)); }
  static CQ half() { return CQ(Rat(1, 2)); }

  bool is_zero() const { return re == 0 && im == 0; }
  CQ conj() const { return CQ(re, -im); }

  friend CQ operator+(const CQ& a, const CQ& b) { return CQ(a.re + b.re, a.im + b.im); }
  friend CQ operator-(const CQ& a, const CQ& b) { return CQ(a.re - b.re, a.im - b.im); }
  friend CQ operator-(const CQ& a) { return CQ(-a.re, -a.im); }
  friend CQ operator*(const CQ& a, const CQ& b) {
    return CQ(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend CQ operator/(const CQ& a, const CQ& b) {
    Rat n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("CQ division by zero");
    return CQ((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
  }
  friend bool operator==(const CQ& a, const CQ& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const CQ& a, const CQ& b) { return !(a == b); }
};

inline std::complex<double> to_cd(const CQ& c) {
  return {c.re.convert_to<double>(), c.im.convert_to<double>()};
}
inline std::complex<double> to_cd(const std::complex<double>& c) { return c; }

template <class K> struct ScalarOps;
template <> struct ScalarOps<CQ> {
  static CQ from_int(long n) { return CQ(n); }
  static bool is_zero(const CQ& c) { return c.is_zero(); }
};
template <> struct ScalarOps<std::complex<double>> {
  static std::complex<double> from_int(long n) { return {double(n), 0.0}; }
  static bool is_zero(const std::complex<double>& c) { return c.real() == 0.0 && c.imag() == 0.0; }
};

inline constexpr int MAXV = 4;
using Mono = std::array<std::uint8_t, MAXV>;

inline Mono mono_zero() { return Mono{0, 0, 0, 0}; }
inline Mono mono_var(int i) {
  Mono m{0, 0, 0, 0};
  m[i] = 1;
  return m;
}

template <class K>
struct Poly {
  std::map<Mono, K> t;  // canonical: no zero coefficients stored

  Poly() = default;

  static Poly zero() { return Poly(); }
  static Poly constant(K c) {
    Poly p;
    p.add(mono_zero(), std::move(c));
    return p;
  }
  static Poly var(int i) {
    Poly p;
    p.add(mono_var(i), ScalarOps<K>::from_int(1));
    return p;
  }

  bool is_zero() const { return t.empty(); }

  void add(const Mono& m, K c) {
    if (ScalarOps<K>::is_zero(c)) return;
    auto it = t.find(m);
    if (it == t.end()) {
      t.emplace(m, std::move(c));
    } else {
      it->second = it->second + c;
      if (ScalarOps<K>::is_zero(it->second)) t.erase(it);
    }
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (auto& [m, c] : b.t) r.add(m, c);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    for (auto& [m, c] : b.t) r.add(m, -c);
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ma, ca] : a.t)
      for (auto& [mb, cb] : b.t) {
        Mono m;
        for (int i = 0; i < MAXV; ++i) m[i] = std::uint8_t(ma[i] + mb[i]);
        r.add(m, ca * cb);
      }
    return r;
  }
  Poly scaled(const K& c) const {
    Poly r;
    if (ScalarOps<K>::is_zero(c)) return r;
    for (auto& [m, cc] : t) r.add(m, cc * c);
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.t == b.t; }

  Poly deriv(int i) const {
    Poly r;
    for (auto& [m, c] : t) {
      if (m[i] == 0) continue;
      Mono d = m;
      d[i] = std::uint8_t(d[i] - 1);
      r.add(d, c * ScalarOps<K>::from_int(m[i]));
    }
    return r;
  }

  std::complex<double> eval(const std::array<std::complex<double>, MAXV>& x) const {
    std::complex<double> s{0.0, 0.0};
    for (auto& [m, c] : t) {
      std::complex<double> term = to_cd(c);
      for (int i = 0; i < MAXV; ++i)
        for (int k = 0; k < m[i]; ++k) term *= x[i];
      s += term;
    }
    return s;
  }

  double max_abs_coeff() const {
    double mx = 0.0;
    for (auto& [m, c] : t) mx = std::max(mx, std::abs(to_cd(c)));
    return mx;
  }
};

// Differential operators in normal form: sum of coeff(x) * d^alpha with all
// coefficients standing to the left of the derivatives.
template <class K>
struct DiffOp {
  std::map<Mono, Poly<K>> t;  // derivative multi-index -> polynomial coefficient

  DiffOp() = default;

  static DiffOp zero() { return DiffOp(); }
  static DiffOp identity() { return term(mono_zero(), Poly<K>::constant(ScalarOps<K>::from_int(1))); }
  static DiffOp term(const Mono& alpha, Poly<K> coeff) {
    DiffOp d;
    d.add(alpha, std::move(coeff));
    return d;
  }
  static DiffOp d(int i) { return term(mono_var(i), Poly<K>::constant(ScalarOps<K>::from_int(1))); }
  static DiffOp mul_by(Poly<K> p) { return term(mono_zero(), std::move(p)); }

  bool is_zero() const { return t.empty(); }

  void add(const Mono& alpha, const Poly<K>& coeff) {
    if (coeff.is_zero()) return;
    auto it = t.find(alpha);
    if (it == t.end()) {
      t.emplace(alpha, coeff);
    } else {
      it->second = it->second + coeff;
      if (it->second.is_zero()) t.erase(it);
    }
  }

  friend DiffOp operator+(const DiffOp& a, const DiffOp& b) {
    DiffOp r = a;
    for (auto& [m, p] : b.t) r.add(m, p);
    return r;
  }
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b) {
    DiffOp r = a;
    for (auto& [m, p] : b.t) r.add(m, p.scaled(ScalarOps<K>::from_int(-1)));
    return r;
  }
  DiffOp scaled(const K& c) const {
    DiffOp r;
    for (auto& [m, p] : t) r.add(m, p.scaled(c));
    return r;
  }
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.t == b.t; }

  double max_abs_coeff() const {
    double mx = 0.0;
    for (auto& [m, p] : t) mx = std::max(mx, p.max_abs_coeff());
    return mx;
  }
};

namespace detail {
inline long binom_small(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
  return r;
}
}  // namespace detail

// Generalized Leibniz rule: P d^a (Q d^b f) = sum_{g<=a} binom(a,g) P (d^g Q) d^{a-g+b} f.
template <class K>
DiffOp<K> compose(const DiffOp<K>& a, const DiffOp<K>& b) {
  DiffOp<K> r;
  for (auto& [alpha, P] : a.t) {
    for (auto& [beta, Q] : b.t) {
      std::array<int, MAXV> g{0, 0, 0, 0};
      while (true) {
        long bc = 1;
        for (int i = 0; i < MAXV; ++i) bc *= detail::binom_small(alpha[i], g[i]);
        Poly<K> dq = Q;
        bool dead = false;
        for (int i = 0; i < MAXV && !dead; ++i)
          for (int k = 0; k < g[i]; ++k) {
            dq = dq.deriv(i);
            if (dq.is_zero()) {
              dead = true;
              break;
            }
          }
        if (!dead) {
          Mono gamma;
          for (int i = 0; i < MAXV; ++i)
            gamma[i] = std::uint8_t(alpha[i] - g[i] + beta[i]);
          r.add(gamma, (P * dq).scaled(ScalarOps<K>::from_int(bc)));
        }
        int i = 0;
        for (; i < MAXV; ++i) {
          if (g[i] < alpha[i]) {
            ++g[i];
            break;
          }
          g[i] = 0;
        }
        if (i == MAXV) break;
      }
    }
  }
  return r;
}

template <class K>
DiffOp<K> commutator(const DiffOp<K>& a, const DiffOp<K>& b) {
  return compose(a, b) - compose(b, a);
}

// f = Q e^S with polynomial Q, S sharing the variable universe. Closed under
// the action of any DiffOp (S is never changed).
template <class K>
struct ExpFn {
  Poly<K> Q, S;

  bool is_zero() const { return Q.is_zero(); }
  friend bool operator==(const ExpFn& a, const ExpFn& b) { return a.Q == b.Q && a.S == b.S; }

  std::complex<double> eval(const std::array<std::complex<double>, MAXV>& x) const {
    return Q.eval(x) * std::exp(S.eval(x));
  }
};

template <class K>
ExpFn<K> apply(const DiffOp<K>& a, const ExpFn<K>& f) {
  ExpFn<K> r;
  r.S = f.S;
  for (auto& [alpha, P] : a.t) {
    Poly<K> q = f.Q;
    for (int i = 0; i < MAXV; ++i)
      for (int k = 0; k < alpha[i]; ++k) q = q.deriv(i) + q * f.S.deriv(i);
    r.Q = r.Q + P * q;
  }
  return r;
}

// Deterministic plain-text rendering for debug output and golden files.
inline std::string cq_str(const CQ& c) {
  std::ostringstream os;
  os << "(" << c.re << (c.im >= 0 ? "+" : "-")
     << boost::multiprecision::abs(c.im) << "i)";
  return os.str();
}
inline std::string cq_str(const std::complex<double>& c) {
  std::ostringstream os;
  os << "(" << c.real() << (c.imag() >= 0 ? "+" : "-") << std::abs(c.imag()) << "i)";
  return os.str();
}

template <class K>
std::string poly_str(const Poly<K>& p, const std::array<std::string, MAXV>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : p.t) {
    if (!first) os << " + ";
    first = false;
    os << cq_str(c);
    for (int i = 0; i < MAXV; ++i) {
      for (int k = 0; k < m[i]; ++k) os << "*" << names[i];
    }
  }
  return os.str();
}

template <class K>
std::string diffop_str(const DiffOp<K>& d, const std::array<std::string, MAXV>& names) {
  if (d.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [alpha, p] : d.t) {
    if (!first) os << "  +  ";
    first = false;
    os << "[" << poly_str(p, names) << "]";
    for (int i = 0; i < MAXV; ++i)
      for (int k = 0; k < alpha[i]; ++k) os << " d_" << names[i];
  }
  return os.str();
}

// Exact row reduction over a field K (needs operator/). Returns the rank;
// optionally reduces an augmented part alongside for consistency/solve checks.
template <class K>
int exact_rank(std::vector<std::vector<K>> m) {
  int rows = int(m.size());
  if (rows == 0) return 0;
  int cols = int(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!ScalarOps<K>::is_zero(m[r][c])) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || ScalarOps<K>::is_zero(m[r][c])) continue;
      K f = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] = m[r][cc] - f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace hacs::exact
