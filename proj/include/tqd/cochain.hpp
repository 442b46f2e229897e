#pragma once

// Normalized cochains on a finite group with values in roots of unity,
// stored as integer exponents modulo `mod` (the value at a tuple is
// zeta_mod^e).  Degree 2 and 3 are what the library needs.

#include <cassert>
#include <numeric>
#include <vector>

#include "cyclotomic.hpp"
#include "group.hpp"
#include "rat.hpp"

namespace tqd {

struct Cochain2 {
  const GroupTable* G = nullptr;
  long long mod = 1;
  std::vector<long long> e;  // n^2 exponents

  static Cochain2 trivial(const GroupTable& G, long long mod = 1) {
    Cochain2 b;
    b.G = &G;
    b.mod = mod;
    b.e.assign((size_t)G.n * G.n, 0);
    return b;
  }
  long long operator()(int x, int y) const { return e[(size_t)x * G->n + y]; }
  long long& at(int x, int y) { return e[(size_t)x * G->n + y]; }
  Cyc value(int x, int y) const { return Cyc::root_of_unity((*this)(x, y), mod); }
  bool is_normalized() const {
    for (int x = 0; x < G->n; ++x)
      if ((*this)(x, 0) % mod != 0 || (*this)(0, x) % mod != 0) return false;
    return true;
  }
};

struct Cochain3 {
  const GroupTable* G = nullptr;
  long long mod = 1;
  std::vector<long long> e;  // n^3 exponents

  static Cochain3 trivial(const GroupTable& G, long long mod = 1) {
    Cochain3 w;
    w.G = &G;
    w.mod = mod;
    w.e.assign((size_t)G.n * G.n * G.n, 0);
    return w;
  }
  long long operator()(int x, int y, int z) const {
    return e[((size_t)x * G->n + y) * G->n + z];
  }
  long long& at(int x, int y, int z) { return e[((size_t)x * G->n + y) * G->n + z]; }
  Cyc value(int x, int y, int z) const { return Cyc::root_of_unity((*this)(x, y, z), mod); }

  bool is_normalized() const {
    int n = G->n;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if ((*this)(0, x, y) % mod != 0 || (*this)(x, 0, y) % mod != 0 ||
            (*this)(x, y, 0) % mod != 0)
          return false;
    return true;
  }
  // cocycle condition: w(h,k,l) w(g,hk,l) w(g,h,k) = w(gh,k,l) w(g,h,kl)
  bool is_cocycle() const {
    int n = G->n;
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            long long lhs = (*this)(h, k, l) + (*this)(g, G->op(h, k), l) + (*this)(g, h, k);
            long long rhs = (*this)(G->op(g, h), k, l) + (*this)(g, h, G->op(k, l));
            if (mod_floor(lhs - rhs, mod) != 0) return false;
          }
    return true;
  }

  // raise modulus to a multiple
  Cochain3 lift(long long newmod) const {
    assert(newmod % mod == 0);
    Cochain3 w = *this;
    long long f = newmod / mod;
    for (auto& x : w.e) x = mod_floor(x * f, newmod);
    w.mod = newmod;
    return w;
  }
  Cochain3 power(long long k) const {
    Cochain3 w = *this;
    for (auto& x : w.e) x = mod_floor(x * k, mod);
    return w;
  }
  Cochain3 inverse() const { return power(-1); }
  friend Cochain3 operator*(const Cochain3& a, const Cochain3& b) {
    assert(a.G == b.G);
    long long m = std::lcm(a.mod, b.mod);
    Cochain3 x = a.lift(m), y = b.lift(m);
    for (size_t i = 0; i < x.e.size(); ++i) x.e[i] = mod_floor(x.e[i] + y.e[i], m);
    return x;
  }
  friend bool operator==(const Cochain3& a, const Cochain3& b) {
    if (a.G != b.G) return false;
    long long m = std::lcm(a.mod, b.mod);
    Cochain3 x = a.lift(m), y = b.lift(m);
    return x.e == y.e;
  }
};

inline Cochain2 lift2(const Cochain2& b, long long newmod) {
  assert(newmod % b.mod == 0);
  Cochain2 c = b;
  long long f = newmod / b.mod;
  for (auto& x : c.e) x = mod_floor(x * f, newmod);
  c.mod = newmod;
  return c;
}

// (delta b)(g,h,k) = b(h,k) b(gh,k)^{-1} b(g,hk) b(g,h)^{-1}
inline Cochain3 coboundary(const Cochain2& b) {
  const GroupTable& G = *b.G;
  Cochain3 w = Cochain3::trivial(G, b.mod);
  for (int g = 0; g < G.n; ++g)
    for (int h = 0; h < G.n; ++h)
      for (int k = 0; k < G.n; ++k)
        w.at(g, h, k) =
            mod_floor(b(h, k) - b(G.op(g, h), k) + b(g, G.op(h, k)) - b(g, h), b.mod);
  return w;
}

// pullback along a homomorphism f: H -> G (covers inflation and restriction)
inline Cochain3 pullback(const Cochain3& w, const GroupHom& f, const GroupTable& H) {
  assert(f.dst == w.G || f.dst == nullptr);
  Cochain3 v = Cochain3::trivial(H, w.mod);
  for (int x = 0; x < H.n; ++x)
    for (int y = 0; y < H.n; ++y)
      for (int z = 0; z < H.n; ++z) v.at(x, y, z) = w(f.map[x], f.map[y], f.map[z]);
  return v;
}

// restriction to a subgroup given by its element list (index i of the
// subgroup table = elems[i]); caller supplies the subgroup's own table
inline GroupHom subgroup_inclusion(const GroupTable& S, const GroupTable& G,
                                   const std::vector<int>& elems) {
  GroupHom f;
  f.src = &S;
  f.dst = &G;
  f.map = elems;
  assert(f.is_homomorphism());
  return f;
}

// the subgroup table induced on an element subset closed under multiplication
inline std::pair<GroupTable, std::vector<int>> subgroup_table(const GroupTable& G,
                                                              std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  assert(elems[0] == 0);
  std::vector<int> idx(G.n, -1);
  for (size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = (int)i;
  GroupTable S;
  S.n = (int)elems.size();
  S.mul.resize((size_t)S.n * S.n);
  for (int a = 0; a < S.n; ++a)
    for (int b = 0; b < S.n; ++b) {
      int p = G.op(elems[a], elems[b]);
      assert(idx[p] >= 0);
      S.mul[a * S.n + b] = idx[p];
    }
  S.finish(G.name + "-sub" + std::to_string(S.n));
  return {S, elems};
}

// The 3-cocycle of a central-extension datum on E = Qbar x A (trivial action):
//   omega((x1,a1),(x2,a2),(x3,a3)) = eps(x2,x3)(a1) = zeta_m^{eps(x2,x3)*a1}.
// E is encoded with element id = x*m + a (x in Qbar, a in Z/m).
inline Cochain3 extension_cocycle(const GroupTable& E, const Cocycle2Zm& eps) {
  const GroupTable& Q = *eps.Q;
  int m = eps.m;
  assert(E.n == Q.n * m);
  auto xof = [&](int g) { return g / m; };
  auto aof = [&](int g) { return g % m; };
  Cochain3 w = Cochain3::trivial(E, m);
  for (int g1 = 0; g1 < E.n; ++g1)
    for (int g2 = 0; g2 < E.n; ++g2)
      for (int g3 = 0; g3 < E.n; ++g3)
        w.at(g1, g2, g3) = mod_floor((long long)eps(xof(g2), xof(g3)) * aof(g1), m);
  assert(w.is_cocycle() && w.is_normalized());
  return w;
}

}  // namespace tqd
