#pragma once

// Finite groups as explicit multiplication tables, with the constructions
// needed for order-8 groups and their relatives: cyclic groups, direct
// products, central extensions of an abelian kernel by a 2-cocycle valued in
// the dual of the kernel, quotients, subgroup enumeration, conjugacy data,
// automorphism groups (by generator-image backtracking) and isomorphisms.

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tqd {

struct GroupTable {
  int n = 1;
  std::vector<int> mul;  // n*n, row-major: mul[a*n+b] = a*b
  std::vector<int> inv;
  std::string name;

  int op(int a, int b) const { return mul[a * n + b]; }
  // x g x^{-1}
  int conj_by(int x, int g) const { return op(op(x, g), inv[x]); }
  int order(int g) const {
    int o = 1, c = g;
    while (c != 0) {
      c = op(c, g);
      ++o;
    }
    return o;
  }
  bool is_abelian() const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (op(a, b) != op(b, a)) return false;
    return true;
  }
  int exponent() const {
    int e = 1;
    for (int g = 0; g < n; ++g) e = std::lcm(e, order(g));
    return e;
  }

  void finish(const std::string& nm) {
    name = nm;
    inv.assign(n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (op(a, b) == 0) inv[a] = b;
    validate();
  }
  void validate() const {
    for (int a = 0; a < n; ++a) {
      assert(op(0, a) == a && op(a, 0) == a);
      assert(inv[a] >= 0 && op(a, inv[a]) == 0 && op(inv[a], a) == 0);
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          assert(op(op(a, b), c) == op(a, op(b, c)));
  }

  std::vector<int> center() const {
    std::vector<int> z;
    for (int g = 0; g < n; ++g) {
      bool central = true;
      for (int h = 0; h < n && central; ++h)
        if (op(g, h) != op(h, g)) central = false;
      if (central) z.push_back(g);
    }
    return z;
  }
  std::vector<int> centralizer(int g) const {
    std::vector<int> z;
    for (int h = 0; h < n; ++h)
      if (op(g, h) == op(h, g)) z.push_back(h);
    return z;
  }
  std::vector<std::vector<int>> conjugacy_classes() const {
    std::vector<std::vector<int>> cls;
    std::vector<char> seen(n, 0);
    for (int g = 0; g < n; ++g) {
      if (seen[g]) continue;
      std::set<int> c;
      for (int x = 0; x < n; ++x) c.insert(conj_by(x, g));
      std::vector<int> cc(c.begin(), c.end());
      for (int e : cc) seen[e] = 1;
      cls.push_back(cc);
    }
    return cls;
  }
  std::vector<int> generated_subgroup(std::vector<int> gens) const {
    std::set<int> s{0};
    for (int g : gens) s.insert(g);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(s.begin(), s.end());
      for (int a : cur)
        for (int b : cur)
          if (s.insert(op(a, b)).second) grew = true;
    }
    return {s.begin(), s.end()};
  }
  // distinct cyclic subgroups, each as its sorted element set with a chosen
  // generator (smallest generator index)
  std::vector<std::pair<int, std::vector<int>>> cyclic_subgroups() const {
    std::set<std::vector<int>> seen;
    std::vector<std::pair<int, std::vector<int>>> out;
    for (int g = 0; g < n; ++g) {
      auto s = generated_subgroup({g});
      if (seen.insert(s).second) out.push_back({g, s});
    }
    return out;
  }
  // all subgroups (order <= 16 groups only; brute force over generated sets)
  std::vector<std::vector<int>> all_subgroups() const {
    std::set<std::vector<int>> seen;
    seen.insert({0});
    bool grew = true;
    while (grew) {
      grew = false;
      auto cur = seen;
      for (const auto& s : cur)
        for (int g = 0; g < n; ++g) {
          auto gens = s;
          gens.push_back(g);
          std::vector<int> gv(gens.begin(), gens.end());
          auto t = generated_subgroup(gv);
          if (seen.insert(t).second) grew = true;
        }
    }
    return {seen.begin(), seen.end()};
  }
  // minimal generating sequence (greedy)
  std::vector<int> small_generating_set() const {
    std::vector<int> gens;
    std::vector<int> cur{0};
    while ((int)cur.size() < n) {
      int best = -1;
      size_t bestsz = cur.size();
      for (int g = 0; g < n; ++g) {
        if (std::find(cur.begin(), cur.end(), g) != cur.end()) continue;
        auto gv = gens;
        gv.push_back(g);
        auto s = generated_subgroup(gv);
        if (s.size() > bestsz) {
          bestsz = s.size();
          best = g;
        }
      }
      assert(best >= 0);
      gens.push_back(best);
      cur = generated_subgroup(gens);
    }
    return gens;
  }
};

// group homomorphism as an explicit element map
struct GroupHom {
  const GroupTable* src = nullptr;
  const GroupTable* dst = nullptr;
  std::vector<int> map;

  int operator()(int g) const { return map[g]; }
  bool is_homomorphism() const {
    for (int a = 0; a < src->n; ++a)
      for (int b = 0; b < src->n; ++b)
        if (map[src->op(a, b)] != dst->op(map[a], map[b])) return false;
    return true;
  }
  bool is_bijective() const {
    std::vector<char> hit(dst->n, 0);
    for (int a = 0; a < src->n; ++a) hit[map[a]] = 1;
    for (char h : hit)
      if (!h) return false;
    return src->n == dst->n;
  }
};

inline GroupTable trivial_group() {
  GroupTable G;
  G.n = 1;
  G.mul = {0};
  G.finish("1");
  return G;
}

inline GroupTable cyclic_group(int m) {
  GroupTable G;
  G.n = m;
  G.mul.resize(m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) G.mul[a * m + b] = (a + b) % m;
  G.finish("Z" + std::to_string(m));
  return G;
}

inline GroupTable direct_product(const GroupTable& A, const GroupTable& B) {
  GroupTable G;
  G.n = A.n * B.n;
  G.mul.resize(G.n * G.n);
  auto id = [&](int a, int b) { return a * B.n + b; };
  for (int a1 = 0; a1 < A.n; ++a1)
    for (int b1 = 0; b1 < B.n; ++b1)
      for (int a2 = 0; a2 < A.n; ++a2)
        for (int b2 = 0; b2 < B.n; ++b2)
          G.mul[id(a1, b1) * G.n + id(a2, b2)] = id(A.op(a1, a2), B.op(b1, b2));
  G.finish(A.name + "x" + B.name);
  return G;
}

inline GroupTable elementary_abelian(int rank) {
  GroupTable G = cyclic_group(2);
  for (int i = 1; i < rank; ++i) G = direct_product(G, cyclic_group(2));
  G.name = "Z2^" + std::to_string(rank);
  return G;
}

// A 2-cocycle on Q valued in Z/m, normalized (eps(1,.) = eps(.,1) = 0).
struct Cocycle2Zm {
  const GroupTable* Q = nullptr;
  int m = 1;
  std::vector<int> e;  // Q.n * Q.n exponents mod m
  int operator()(int x, int y) const { return e[x * Q->n + y]; }
  bool is_cocycle() const {
    for (int x = 0; x < Q->n; ++x)
      if ((*this)(x, 0) != 0 || (*this)(0, x) != 0) return false;
    for (int x = 0; x < Q->n; ++x)
      for (int y = 0; y < Q->n; ++y)
        for (int z = 0; z < Q->n; ++z) {
          int lhs = ((*this)(x, y) + (*this)(Q->op(x, y), z)) % m;
          int rhs = ((*this)(y, z) + (*this)(x, Q->op(y, z))) % m;
          if (lhs != rhs) return false;
        }
    return true;
  }
};

// Central extension of Z/m by Q along eps: elements (a, x) with
// (a,x)(b,y) = (a + b + eps(x,y), xy).  Element id = a*Q.n + x.
struct CentralExtension {
  GroupTable G;
  int m;
  const GroupTable* Q;
  int id(int a, int x) const { return a * Q->n + x; }
  int apart(int g) const { return g / Q->n; }
  int xpart(int g) const { return g % Q->n; }
};

inline CentralExtension central_extension(const GroupTable& Q, const Cocycle2Zm& eps,
                                          const std::string& name) {
  assert(eps.Q == &Q && eps.is_cocycle());
  CentralExtension E;
  E.m = eps.m;
  E.Q = &Q;
  E.G.n = eps.m * Q.n;
  E.G.mul.resize(E.G.n * E.G.n);
  for (int a = 0; a < eps.m; ++a)
    for (int x = 0; x < Q.n; ++x)
      for (int b = 0; b < eps.m; ++b)
        for (int y = 0; y < Q.n; ++y)
          E.G.mul[E.id(a, x) * E.G.n + E.id(b, y)] =
              E.id((a + b + eps(x, y)) % eps.m, Q.op(x, y));
  E.G.finish(name);
  return E;
}

// quotient G/N for a normal subgroup N; returns the quotient table and the
// projection hom (coset representatives: smallest element index)
inline std::pair<GroupTable, GroupHom> quotient(const GroupTable& G, const std::vector<int>& N,
                                                const std::string& name) {
  std::vector<int> cosetOf(G.n, -1);
  std::vector<int> reps;
  for (int g = 0; g < G.n; ++g) {
    if (cosetOf[g] >= 0) continue;
    int c = (int)reps.size();
    reps.push_back(g);
    for (int x : N) {
      int gx = G.op(g, x);
      assert(cosetOf[gx] == -1 || cosetOf[gx] == c);
      cosetOf[gx] = c;
    }
  }
  // identity coset must be index of coset containing 0; re-sort so that the
  // identity coset is element 0
  int id0 = cosetOf[0];
  std::vector<int> perm(reps.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[0], perm[id0]);
  std::vector<int> inew(reps.size());
  for (size_t i = 0; i < perm.size(); ++i) inew[perm[i]] = (int)i;
  GroupTable Q;
  Q.n = (int)reps.size();
  Q.mul.resize(Q.n * Q.n);
  for (int a = 0; a < Q.n; ++a)
    for (int b = 0; b < Q.n; ++b)
      Q.mul[a * Q.n + b] = inew[cosetOf[G.op(reps[perm[a]], reps[perm[b]])]];
  Q.finish(name);
  GroupHom pr;
  pr.src = &G;
  pr.dst = nullptr;  // caller rebinds after the table is stored
  pr.map.resize(G.n);
  for (int g = 0; g < G.n; ++g) pr.map[g] = inew[cosetOf[g]];
  return {Q, pr};
}

// all isomorphisms G -> H (or just the first if first_only)
inline std::vector<GroupHom> isomorphisms(const GroupTable& G, const GroupTable& H,
                                          bool first_only = false) {
  std::vector<GroupHom> out;
  if (G.n != H.n) return out;
  std::vector<int> gens = G.small_generating_set();
  // precompute words: every element of G as a product of generators
  // (breadth-first over multiplication by generators)
  std::vector<std::pair<int, int>> parent(G.n, {-1, -1});  // (prev element, gen idx)
  std::vector<int> bfs{0};
  std::vector<char> vis(G.n, 0);
  vis[0] = 1;
  for (size_t q = 0; q < bfs.size(); ++q) {
    int g = bfs[q];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int h = G.op(g, gens[gi]);
      if (!vis[h]) {
        vis[h] = 1;
        parent[h] = {g, (int)gi};
        bfs.push_back(h);
      }
    }
  }
  std::vector<int> img(gens.size(), -1);
  std::vector<int> ordG(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) ordG[i] = G.order(gens[i]);
  std::vector<int> map(G.n, -1);
  auto build = [&]() -> bool {
    // rebuild map from generator images along BFS words
    std::fill(map.begin(), map.end(), -1);
    map[0] = 0;
    for (size_t q = 1; q < bfs.size(); ++q) {
      int g = bfs[q];
      auto [p, gi] = parent[g];
      map[g] = H.op(map[p], img[gi]);
    }
    // homomorphism + bijectivity check
    std::vector<char> hit(H.n, 0);
    for (int a = 0; a < G.n; ++a) {
      if (hit[map[a]]) return false;
      hit[map[a]] = 1;
    }
    for (int a = 0; a < G.n; ++a)
      for (int b = 0; b < G.n; ++b)
        if (map[G.op(a, b)] != H.op(map[a], map[b])) return false;
    return true;
  };
  // backtrack over generator images (prefiltered by element order)
  std::vector<std::vector<int>> cand(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    for (int h = 0; h < H.n; ++h)
      if (H.order(h) == ordG[i]) cand[i].push_back(h);
  bool stop = false;
  auto rec = [&](auto&& self, size_t d) -> void {
    if (stop) return;
    if (d == gens.size()) {
      if (build()) {
        GroupHom f;
        f.src = &G;
        f.dst = &H;
        f.map = map;
        out.push_back(f);
        if (first_only) stop = true;
      }
      return;
    }
    for (int h : cand[d]) {
      img[d] = h;
      self(self, d + 1);
      if (stop) return;
    }
  };
  rec(rec, 0);
  return out;
}

inline bool isomorphic(const GroupTable& G, const GroupTable& H) {
  return !isomorphisms(G, H, true).empty();
}

inline std::vector<GroupHom> automorphisms(const GroupTable& G) { return isomorphisms(G, G); }

// ---------------------------------------------------------------------------
// The order-8 groups of interest.  D8 and Q8 are built as central extensions
// of Z2 by V = Z2 x Z2 along the bilinear cocycles
//   eps_D(h2,h1) = t                                  (others trivial)
//   eps_Q(h1,h1) = eps_Q(h2,h1) = eps_Q(h2,h2) = t    (eps_Q(h1,h2) = 1)
// so that the V-part of element id is canonical in both.
// ---------------------------------------------------------------------------

// V = Z2 x Z2 with elements 0=1, 1=h1, 2=h2, 3=h1h2 (bit vectors)
inline GroupTable klein_four() {
  GroupTable G;
  G.n = 4;
  G.mul.resize(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) G.mul[a * 4 + b] = a ^ b;
  G.finish("V4");
  return G;
}

// bilinear extension of a symbol table s(h_i, h_j) in {0,1}
inline Cocycle2Zm bilinear_cocycle_on_v4(const GroupTable& V, int s11, int s12, int s21, int s22) {
  Cocycle2Zm eps;
  eps.Q = &V;
  eps.m = 2;
  eps.e.assign(16, 0);
  auto bit = [](int v, int i) { return (v >> i) & 1; };
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      int v = s11 * bit(x, 0) * bit(y, 0) + s12 * bit(x, 0) * bit(y, 1) +
              s21 * bit(x, 1) * bit(y, 0) + s22 * bit(x, 1) * bit(y, 1);
      eps.e[x * 4 + y] = v & 1;
    }
  assert(eps.is_cocycle());
  return eps;
}

struct Order8Context {
  GroupTable V;        // Z2 x Z2
  Cocycle2Zm epsD, epsQ;
  GroupTable D8, Q8, E8;
  // central extension bookkeeping: element id of D8/Q8 is a*4 + x with
  // a in Z2 (central part) and x in V
  int id(int a, int x) const { return a * 4 + x; }
  int apart(int g) const { return g / 4; }
  int xpart(int g) const { return g % 4; }
};

inline const Order8Context& order8() {
  static Order8Context* C = [] {
    auto* c = new Order8Context();
    c->V = klein_four();
    c->epsD = bilinear_cocycle_on_v4(c->V, 0, 0, 1, 0);
    c->epsQ = bilinear_cocycle_on_v4(c->V, 1, 0, 1, 1);
    c->D8 = central_extension(c->V, c->epsD, "D8").G;
    c->Q8 = central_extension(c->V, c->epsQ, "Q8").G;
    c->E8 = elementary_abelian(3);
    c->E8.name = "Z2^3";
    return c;
  }();
  return *C;
}

// extraspecial 2-group of width l: central product of l copies of D8 (plus
// type) or l-1 copies of D8 and one Q8 (minus type)
inline GroupTable extraspecial(int width, char sign) {
  const auto& C = order8();
  GroupTable G = (sign == '+') ? C.D8 : C.Q8;
  for (int i = 1; i < width; ++i) {
    GroupTable P = direct_product(G, C.D8);
    // identify the two central involutions: quotient by <(z_G, z_D8)>
    int zG = -1, zD = 4;  // central involution of D8/Q8 in our encoding: a=1,x=0 -> id 4
    auto zc = G.center();
    for (int z : zc)
      if (z != 0 && G.order(z) == 2) zG = z;
    assert(zG > 0);
    int bad = zG * C.D8.n + zD;  // (zG, zD8) in the product encoding
    auto [Qt, pr] = quotient(P, {0, bad}, "tmp");
    G = Qt;
  }
  G.name = std::string("ES(") + std::to_string(width) + "," + sign + ")";
  return G;
}

// parse a group description: 1, Z<n>, Z2^k, D8, Q8, ES(w,+|-), products A x B
inline GroupTable parse_group(const std::string& spec) {
  auto strip = [](std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
    return s;
  };
  std::string s = strip(spec);
  // split on top-level 'x' (all our names are x-free except products)
  size_t pos = s.find('x');
  if (pos != std::string::npos && s.substr(0, 2) != "ES") {
    GroupTable A = parse_group(s.substr(0, pos));
    GroupTable B = parse_group(s.substr(pos + 1));
    auto G = direct_product(A, B);
    return G;
  }
  if (s == "1") return trivial_group();
  if (s == "D8") return order8().D8;
  if (s == "Q8") return order8().Q8;
  if (s == "E8" || s == "Z2^3") return elementary_abelian(3);
  if (s.rfind("Z2^", 0) == 0) return elementary_abelian(std::stoi(s.substr(3)));
  if (s.rfind("ES(", 0) == 0) {
    size_t comma = s.find(',');
    int w = std::stoi(s.substr(3, comma - 3));
    char sign = s[comma + 1];
    return extraspecial(w, sign);
  }
  if (s[0] == 'Z') return cyclic_group(std::stoi(s.substr(1)));
  throw std::invalid_argument("parse_group: unknown spec '" + spec + "'");
}

}  // namespace tqd
