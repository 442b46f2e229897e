#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// A value is stored as a rational-coefficient vector over the power basis
// 1, z, ..., z^{phi(n)-1} of Q(zeta_n), reduced modulo the n-th cyclotomic
// polynomial.  Binary operations embed both operands into Q(zeta_lcm).
// Conductors stay small in practice because roots of unity are created from
// reduced fractions e/m.

#include <algorithm>
#include <cassert>
#include <complex>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "rat.hpp"

namespace tqd {

namespace detail {

// n-th cyclotomic polynomial, monic, as integer coefficient vector
// (index = degree).  Computed by exact division of x^n - 1 by all proper
// divisor cyclotomics; memoized.
inline const std::vector<Int>& cyclotomic_poly(long n) {
  static std::map<long, std::vector<Int>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1
  std::vector<Int> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<Int>& phi_d = cyclotomic_poly(d);
    // exact polynomial division num /= phi_d
    std::vector<Int> q(num.size() - phi_d.size() + 1, 0);
    std::vector<Int> r = num;
    for (long i = (long)q.size() - 1; i >= 0; --i) {
      Int c = r[i + phi_d.size() - 1];  // leading coeff of phi_d is 1
      q[i] = c;
      if (c != 0)
        for (size_t j = 0; j < phi_d.size(); ++j) r[i + j] -= c * phi_d[j];
    }
    num = q;
  }
  return cache.emplace(n, std::move(num)).first->second;
}

inline long euler_phi(long n) { return (long)cyclotomic_poly(n).size() - 1; }

// reduction rows: x^j mod Phi_n for j in [phi(n), 2*phi(n)-2]
inline const std::vector<std::vector<Rat>>& reduction_rows(long n) {
  static std::map<long, std::vector<std::vector<Rat>>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const auto& phi = cyclotomic_poly(n);
  long d = (long)phi.size() - 1;
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> cur(d, 0);  // x^d reduced: -(phi minus leading term)
  for (long j = 0; j < d; ++j) cur[j] = Rat(-phi[j]);
  rows.push_back(cur);
  for (long j = d + 1; j <= 2 * d - 2; ++j) {
    std::vector<Rat> nxt(d, 0);
    // nxt = x*cur mod Phi
    Rat top = cur[d - 1];
    for (long i = d - 1; i >= 1; --i) nxt[i] = cur[i - 1];
    nxt[0] = 0;
    if (top != 0)
      for (long i = 0; i < d; ++i) nxt[i] += top * rows[0][i];
    rows.push_back(nxt);
    cur = nxt;
  }
  return cache.emplace(n, std::move(rows)).first->second;
}

}  // namespace detail

class Cyc {
 public:
  Cyc() : n_(1), c_(1, Rat(0)) {}
  explicit Cyc(const Rat& r) : n_(1), c_(1, r) {}
  explicit Cyc(long v) : n_(1), c_(1, Rat(v)) {}

  // zeta_m^e, from the reduced fraction e/m (a point of Q/Z)
  static Cyc root_of_unity(long long e, long long m) {
    assert(m > 0);
    e = mod_floor(e, m);
    long long g = std::gcd(e, m);
    if (e == 0) return Cyc(Rat(1));
    e /= g;
    m /= g;
    Cyc out;
    out.n_ = m;
    long d = detail::euler_phi(m);
    out.c_.assign(d, Rat(0));
    if (e < d) {
      out.c_[e] = 1;
    } else {
      // reduce x^e; e < m and d <= e <= m-1 <= 2d-2 fails for some n, so
      // reduce iteratively instead.
      std::vector<Rat> acc(d, Rat(0));
      acc[0] = 1;
      for (long long i = 0; i < e; ++i) acc = mul_by_x(acc, m);
      out.c_ = acc;
    }
    out.normalize();
    return out;
  }

  static Cyc i() { return root_of_unity(1, 4); }

  long conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  Rat rational_part() const { return c_[0]; }  // only meaningful if is_rational()
  bool is_one() const { return is_rational() && c_[0] == 1; }

  friend Cyc operator+(const Cyc& a, const Cyc& b) {
    long n = std::lcm(a.n_, b.n_);
    Cyc x = a.lift(n), y = b.lift(n);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    x.normalize();
    return x;
  }
  friend Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }
  Cyc operator-() const {
    Cyc x = *this;
    for (auto& v : x.c_) v = -v;
    return x;
  }
  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    long n = std::lcm(a.n_, b.n_);
    Cyc x = a.lift(n), y = b.lift(n);
    long d = (long)x.c_.size();
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (long i = 0; i < d; ++i) {
      if (x.c_[i] == 0) continue;
      for (long j = 0; j < d; ++j) {
        if (y.c_[j] == 0) continue;
        prod[i + j] += x.c_[i] * y.c_[j];
      }
    }
    const auto& rows = detail::reduction_rows(n);
    Cyc out;
    out.n_ = n;
    out.c_.assign(d, Rat(0));
    for (long i = 0; i < d; ++i) out.c_[i] = prod[i];
    for (long j = d; j <= 2 * d - 2; ++j) {
      if (prod[j] == 0) continue;
      const auto& row = rows[j - d];
      for (long i = 0; i < d; ++i) out.c_[i] += prod[j] * row[i];
    }
    out.normalize();
    return out;
  }
  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

  friend bool operator==(const Cyc& a, const Cyc& b) { return (a - b).is_zero(); }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  // multiplicative inverse via Gaussian elimination on the multiplication
  // matrix of *this in the power basis
  Cyc inverse() const {
    if (is_zero()) throw std::domain_error("Cyc: inverse of zero");
    if (is_rational()) return Cyc(Rat(1) / c_[0]);
    long d = (long)c_.size();
    // columns: this * x^j for j < d; solve M y = e0
    std::vector<std::vector<Rat>> M(d, std::vector<Rat>(d, Rat(0)));
    Cyc xj = *this;
    for (long j = 0; j < d; ++j) {
      for (long i = 0; i < (long)xj.c_.size() && i < d; ++i) M[i][j] = xj.c_[i];
      if (j + 1 < d) xj = Cyc::monomial_shift(xj);
    }
    std::vector<Rat> rhs(d, Rat(0));
    rhs[0] = 1;
    // Gaussian elimination
    std::vector<long> colOfRow(d, -1);
    long r = 0;
    for (long col = 0; col < d && r < d; ++col) {
      long piv = -1;
      for (long i = r; i < d; ++i)
        if (M[i][col] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(M[piv], M[r]);
      std::swap(rhs[piv], rhs[r]);
      Rat p = M[r][col];
      for (long j = col; j < d; ++j) M[r][j] /= p;
      rhs[r] /= p;
      for (long i = 0; i < d; ++i) {
        if (i == r || M[i][col] == 0) continue;
        Rat f = M[i][col];
        for (long j = col; j < d; ++j) M[i][j] -= f * M[r][j];
        rhs[i] -= f * rhs[r];
      }
      colOfRow[r] = col;
      ++r;
    }
    std::vector<Rat> y(d, Rat(0));
    for (long i = 0; i < r; ++i) y[colOfRow[i]] = rhs[i];
    for (long i = r; i < d; ++i)
      if (rhs[i] != 0) throw std::domain_error("Cyc: singular multiplication matrix");
    Cyc out;
    out.n_ = n_;
    out.c_ = y;
    out.normalize();
    assert((*this * out).is_one());
    return out;
  }
  friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

  Cyc pow(long long k) const {
    if (k < 0) return inverse().pow(-k);
    Cyc acc(Rat(1)), base = *this;
    while (k) {
      if (k & 1) acc *= base;
      base *= base;
      k >>= 1;
    }
    return acc;
  }

  // complex conjugate (Galois automorphism zeta -> zeta^{-1})
  Cyc conj() const { return galois(-1); }

  // Galois automorphism zeta_n -> zeta_n^t, gcd(t, n) = 1
  Cyc galois(long long t) const {
    t = mod_floor(t, n_);
    if (n_ == 1) return *this;
    assert(std::gcd((long long)n_, t) == 1);
    Cyc out(Rat(0));
    for (size_t j = 0; j < c_.size(); ++j) {
      if (c_[j] == 0) continue;
      Cyc term = root_of_unity((long long)j * t, n_);
      for (auto& v : term.c_) v *= c_[j];
      out += term;
    }
    return out;
  }

  std::complex<double> to_complex() const {
    std::complex<double> z = std::polar(1.0, 2.0 * M_PI / (double)n_);
    std::complex<double> acc(0.0, 0.0);
    for (size_t j = c_.size(); j-- > 0;) acc = acc * z + std::complex<double>(c_[j].get_d(), 0.0);
    return acc;
  }

  // If the value is q * zeta_m^e for rational q, return (q, e, m).
  std::optional<std::tuple<Rat, long long, long long>> as_monomial() const {
    // brute force over exponents of the conductor: value / zeta^e rational?
    for (long long e = 0; e < n_; ++e) {
      Cyc t = *this * root_of_unity(-e, n_);
      if (t.is_rational()) {
        Rat q = t.c_[0];
        long long ee = e;
        if (q < 0 && n_ % 2 == 0) {  // fold the sign into the exponent
          q = -q;
          ee = (ee + n_ / 2) % n_;
        }
        return std::make_tuple(q, ee, (long long)n_);
      }
    }
    return std::nullopt;
  }

  std::string str() const {
    std::ostringstream os;
    os << "Cyc(n=" << n_ << ";";
    for (size_t j = 0; j < c_.size(); ++j) {
      if (c_[j] == 0) continue;
      os << " +" << c_[j].get_str() << "*z^" << j;
    }
    os << ")";
    return os.str();
  }

  // stable serialization (lifted to a caller-chosen conductor) for hashing
  std::string key(long lift_to) const {
    Cyc x = lift(std::lcm((long)n_, lift_to));
    std::ostringstream os;
    os << x.n_;
    for (const auto& v : x.c_) os << "," << v.get_str();
    return os.str();
  }

  // embed into Q(zeta_n) for n_ | n by the substitution x -> x^{n/n_}
  Cyc lift(long n) const {
    assert(n % n_ == 0);
    if (n == n_) return *this;
    long k = n / n_;
    long d = detail::euler_phi(n);
    std::vector<Rat> acc(d, Rat(0)), cur(d, Rat(0));
    cur[0] = 1;  // x^{j*k} mod Phi_n, maintained incrementally
    for (size_t j = 0; j < c_.size(); ++j) {
      if (c_[j] != 0)
        for (long i = 0; i < d; ++i) acc[i] += c_[j] * cur[i];
      if (j + 1 < c_.size())
        for (long t = 0; t < k; ++t) cur = mul_by_x(cur, n);
    }
    Cyc out;
    out.n_ = n;
    out.c_ = acc;
    return out;
  }

 private:
  long n_;
  std::vector<Rat> c_;

  // multiply coefficient vector by x modulo Phi_n
  static std::vector<Rat> mul_by_x(const std::vector<Rat>& v, long n) {
    long d = (long)v.size();
    const auto& rows = detail::reduction_rows(n);
    std::vector<Rat> out(d, Rat(0));
    Rat top = v[d - 1];
    for (long i = d - 1; i >= 1; --i) out[i] = v[i - 1];
    if (top != 0)
      for (long i = 0; i < d; ++i) out[i] += top * rows[0][i];
    return out;
  }
  static Cyc monomial_shift(const Cyc& a) {
    Cyc out = a;
    out.c_ = mul_by_x(a.c_, a.n_);
    return out;
  }
  // drop to conductor 1 when the value is rational and n_ > 1 would hide it;
  // also canonicalizes nothing else (equality always lifts to lcm).
  void normalize() {
    if (n_ == 1) return;
    // cheap shrink: if all non-constant coefficients vanish, drop to Q
    bool rational = true;
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) {
        rational = false;
        break;
      }
    if (rational) {
      Rat r = c_[0];
      n_ = 1;
      c_.assign(1, r);
    }
  }
};

inline Cyc operator*(const Rat& r, const Cyc& c) { return Cyc(r) * c; }

// Snap a complex double to an exact cyclotomic of conductor dividing `cond`:
// candidates are p/q * zeta_cond^j with q | qmax and |p/q| <= pmax.
// Throws if no candidate (or more than one) lies within tol.
inline Cyc snap(std::complex<double> z, long cond = 16, double tol = 1e-6, long pmax = 4,
                long qmax = 8) {
  struct Cand {
    double re, im;
    long long p, q, j;
  };
  std::vector<Cand> cands;
  for (long j = 0; j < cond; ++j) {
    std::complex<double> w = std::polar(1.0, 2.0 * M_PI * (double)j / (double)cond);
    for (long q = 1; q <= qmax; q *= 2) {
      for (long p = (j == 0 && q == 1) ? 0 : 1; p <= pmax * q; ++p) {
        if (std::gcd(p, q) != 1 && !(p == 0)) continue;
        cands.push_back({w.real() * p / q, w.imag() * p / q, p, q, j});
      }
    }
  }
  const Cand* best = nullptr;
  double bestd = tol;
  for (const auto& c : cands) {
    double d = std::hypot(z.real() - c.re, z.imag() - c.im);
    if (d < bestd) {
      bestd = d;
      best = &c;
    }
  }
  if (!best) throw std::domain_error("snap: no cyclotomic candidate within tolerance");
  // ambiguity check: another candidate with a *different value* within tol
  Cyc val = Rat((long)best->p, (long)best->q) * Cyc::root_of_unity(best->j, cond);
  for (const auto& c : cands) {
    double d = std::hypot(z.real() - c.re, z.imag() - c.im);
    if (d < tol) {
      Cyc v2 = Rat((long)c.p, (long)c.q) * Cyc::root_of_unity(c.j, cond);
      if (v2 != val) throw std::domain_error("snap: ambiguous cyclotomic candidates");
    }
  }
  return val;
}

}  // namespace tqd
