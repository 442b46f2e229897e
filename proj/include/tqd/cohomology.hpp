#pragma once

// Third cohomology with coefficients in the circle group, computed through
// root-of-unity exponent lattices.
//
// Cocycles are held at value modulus M = 2^mk.  A class is trivial in
// H^3(G, C*) iff the coboundary equation can be solved at a finer modulus
// Mp = 2^wk (divisibility headroom absorbs coboundaries whose cochain values
// need finer roots of unity than the cocycle itself).  The subgroup of
// trivial classes T <= (Z/M)^{n^3} is precomputed, and H^3 is presented as
// ker(delta_3)/T with invariant factors from an integer Smith normal form.

#include <map>
#include <memory>
#include <set>

#include "cochain.hpp"
#include "zmod.hpp"

namespace tqd {

namespace detail {

// normalized tuple index maps: tuples avoid the identity in every slot
struct NormIdx {
  int n;        // group order
  int d;        // n - 1
  size_t c2, c3, c4;
  NormIdx(int n_) : n(n_), d(n_ - 1) {
    c2 = (size_t)d * d;
    c3 = c2 * d;
    c4 = c3 * d;
  }
  size_t i2(int x, int y) const { return (size_t)(x - 1) * d + (y - 1); }
  size_t i3(int x, int y, int z) const { return ((size_t)(x - 1) * d + (y - 1)) * d + (z - 1); }
  size_t i4(int x, int y, int z, int w) const {
    return (((size_t)(x - 1) * d + (y - 1)) * d + (z - 1)) * d + (w - 1);
  }
};

}  // namespace detail

// Lat2k wrapper that can express solutions over the original generators
class LatSolver {
 public:
  LatSolver(int nrows, int k, const std::vector<std::vector<long long>>& gens)
      : lat_(nrows, k, gens, true), gens_(gens), k_(k), mod_(1ULL << k) {}
  // solve sum_j x_j gen_j = v; returns x
  std::optional<std::vector<U64>> solve_over_generators(const std::vector<long long>& v) const {
    auto coef = lat_.solve(v);
    if (!coef) return std::nullopt;
    const auto& comps = lat_.companions();
    std::vector<U64> x(gens_.size(), 0);
    for (size_t c = 0; c < coef->size(); ++c) {
      if ((*coef)[c] == 0) continue;
      for (size_t j = 0; j < gens_.size(); ++j)
        x[j] = (x[j] + (*coef)[c] * comps[c][j]) & (mod_ - 1);
    }
    return x;
  }

 private:
  Lat2k lat_;
  std::vector<std::vector<long long>> gens_;
  int k_;
  U64 mod_;
};

class H3Context {
 public:
  explicit H3Context(const GroupTable& G, int mk = 4, int wk = 12)
      : G_(&G), mk_(mk), wk_(wk), M_(1LL << mk), Mp_(1LL << wk), ni_(G.n) {
    if (G.n > 12) throw std::invalid_argument("H3Context: group too large for full H^3");
    // the exponent lattice lives over Z/2^k, which only resolves 2-power
    // torsion; every group this engine enumerates H^3 for is a 2-group
    if ((G.n & (G.n - 1)) != 0)
      throw std::invalid_argument("H3Context: group order must be a power of 2");
    build();
  }

  const GroupTable& group() const { return *G_; }
  long long value_modulus() const { return M_; }
  const std::vector<long long>& invariant_factors() const { return factors_; }

  // exponent vector of a cocycle in the normalized coordinate space, lifted
  // to modulus M
  std::vector<long long> coords(const Cochain3& w) const {
    assert(w.G->mul == G_->mul);
    assert(M_ % w.mod == 0);
    long long f = M_ / w.mod;
    std::vector<long long> v(ni_.c3, 0);
    for (int x = 1; x < G_->n; ++x)
      for (int y = 1; y < G_->n; ++y)
        for (int z = 1; z < G_->n; ++z) v[ni_.i3(x, y, z)] = mod_floor(w(x, y, z) * f, M_);
    return v;
  }
  Cochain3 from_coords(const std::vector<long long>& v) const {
    Cochain3 w = Cochain3::trivial(*G_, M_);
    for (int x = 1; x < G_->n; ++x)
      for (int y = 1; y < G_->n; ++y)
        for (int z = 1; z < G_->n; ++z) w.at(x, y, z) = mod_floor(v[ni_.i3(x, y, z)], M_);
    return w;
  }

  // component vector of the class of w in the invariant-factor decomposition
  std::vector<long long> decompose(const Cochain3& w) const {
    auto coef = klat_->solve(to_ll(coords(w)));
    if (!coef) throw std::domain_error("decompose: input is not a 3-cocycle at modulus M");
    std::vector<long long> y(nfac_, 0);
    for (size_t i = 0; i < nfac_; ++i) {
      Int acc = 0;
      for (size_t j = 0; j < coef->size(); ++j) acc += Usnf_[snf_row_[i]][j] * Int((long)(*coef)[j]);
      Int m = acc % (long)factors_[i];
      if (m < 0) m += (long)factors_[i];
      y[i] = m.get_si();
    }
    return y;
  }
  bool is_trivial_class(const Cochain3& w) const {
    for (long long c : decompose(w))
      if (c) return false;
    return true;
  }
  long long class_order(const Cochain3& w) const {
    auto y = decompose(w);
    long long o = 1;
    for (size_t i = 0; i < y.size(); ++i) {
      long long d = factors_[i];
      long long g = std::gcd(d, y[i]);
      o = std::lcm(o, d / g);
    }
    return o;
  }

  // representative cocycle of a class given by invariant-factor components
  Cochain3 representative(const std::vector<long long>& comp) const {
    assert(comp.size() == nfac_);
    std::vector<long long> v(ni_.c3, 0);
    for (size_t i = 0; i < nfac_; ++i) {
      if (comp[i] == 0) continue;
      for (size_t j = 0; j < ni_.c3; ++j)
        v[j] = mod_floor(v[j] + comp[i] * basis_vec_[i][j], M_);
    }
    Cochain3 w = from_coords(v);
    assert(w.is_cocycle());
    return w;
  }

  // coboundary witness: b with delta(b) == w as root-of-unity functions
  // (b lives at modulus Mp); nullopt if the class is nontrivial
  std::optional<Cochain2> coboundary_witness(const Cochain3& w) const {
    assert(w.G->mul == G_->mul);
    long long f = Mp_ / w.mod;
    assert(Mp_ % w.mod == 0);
    std::vector<long long> target(ni_.c3, 0);
    for (int x = 1; x < G_->n; ++x)
      for (int y = 1; y < G_->n; ++y)
        for (int z = 1; z < G_->n; ++z) target[ni_.i3(x, y, z)] = mod_floor(w(x, y, z) * f, Mp_);
    auto comb = wlat_->solve_over_generators(target);
    if (!comb) return std::nullopt;
    Cochain2 b = Cochain2::trivial(*G_, Mp_);
    for (int x = 1; x < G_->n; ++x)
      for (int y = 1; y < G_->n; ++y) b.at(x, y) = (long long)(*comb)[ni_.i2(x, y)];
    // verify
    Cochain3 chk = coboundary(b);
    assert(chk == w.lift(Mp_));
    return b;
  }

 private:
  const GroupTable* G_;
  int mk_, wk_;
  long long M_, Mp_;
  detail::NormIdx ni_;
  std::unique_ptr<Lat2k> klat_;  // Howell basis of cocycle lattice mod M (343-dim)
  std::unique_ptr<LatSolver> wlat_;  // witness solver for delta_2 mod Mp
  size_t nfac_ = 0;
  std::vector<long long> factors_;                 // invariant factors > 1
  std::vector<size_t> snf_row_;                    // rows of U giving each factor
  std::vector<std::vector<Int>> Usnf_;             // SNF row transform
  std::vector<std::vector<long long>> basis_vec_;  // basis class cocycle coords

  static std::vector<long long> to_ll(const std::vector<long long>& v) { return v; }

  void build();

 public:
  // delta_2 matrix columns (normalized): image of the (x,y) basis cochain
  std::vector<std::vector<long long>> delta2_columns(long long mod) const {
    const GroupTable& G = *G_;
    std::vector<std::vector<long long>> cols(ni_.c2, std::vector<long long>(ni_.c3, 0));
    for (int bx = 1; bx < G.n; ++bx)
      for (int by = 1; by < G.n; ++by) {
        Cochain2 b = Cochain2::trivial(G, mod);
        b.at(bx, by) = 1;
        Cochain3 w = coboundary(b);
        auto& col = cols[ni_.i2(bx, by)];
        for (int x = 1; x < G.n; ++x)
          for (int y = 1; y < G.n; ++y)
            for (int z = 1; z < G.n; ++z) col[ni_.i3(x, y, z)] = w(x, y, z);
      }
    return cols;
  }
};

inline void H3Context::build() {
  const GroupTable& G = *G_;
  // --- delta_3 row span, then kernel mod M ---
  std::vector<std::vector<long long>> rows;  // rows of delta_3 as 343-vectors
  {
    // (delta w)(g,h,k,l) = w(h,k,l) - w(gh,k,l) + w(g,hk,l) - w(g,h,kl) + w(g,h,k)
    for (int g = 1; g < G.n; ++g)
      for (int h = 1; h < G.n; ++h)
        for (int k = 1; k < G.n; ++k)
          for (int l = 1; l < G.n; ++l) {
            std::vector<long long> row(ni_.c3, 0);
            auto add = [&](int x, int y, int z, int s) {
              if (x == 0 || y == 0 || z == 0) return;  // normalized: value 0
              row[ni_.i3(x, y, z)] += s;
            };
            add(h, k, l, 1);
            add(G.op(g, h), k, l, -1);
            add(g, G.op(h, k), l, 1);
            add(g, h, G.op(k, l), -1);
            add(g, h, k, 1);
            rows.push_back(std::move(row));
          }
  }
  Lat2k rowspan((int)ni_.c3, mk_, rows, false);
  // kernel of the reduced row matrix
  std::vector<std::vector<long long>> rcols(ni_.c3);
  {
    const auto& rws = rowspan.cols();  // Howell basis of the row span
    for (size_t j = 0; j < ni_.c3; ++j) {
      rcols[j].assign(rws.size(), 0);
      for (size_t i = 0; i < rws.size(); ++i) rcols[j][i] = (long long)rws[i][j];
    }
  }
  Lat2k kerlat((int)rowspan.cols().size(), mk_, rcols, true);
  std::vector<std::vector<long long>> kgens;
  for (const auto& kv : kerlat.kernel()) {
    std::vector<long long> v(ni_.c3, 0);
    bool nz = false;
    for (size_t j = 0; j < ni_.c3; ++j) {
      v[j] = (long long)(kv[j] & (rowspan.mod() - 1));
      if (v[j]) nz = true;
    }
    if (nz) kgens.push_back(std::move(v));
  }
  klat_ = std::make_unique<Lat2k>((int)ni_.c3, mk_, kgens, false);

  // --- trivial-class subgroup T mod M ---
  auto d2M = delta2_columns(M_);
  auto d2Mp = delta2_columns(Mp_);
  wlat_ = std::make_unique<LatSolver>((int)ni_.c3, wk_, d2Mp);
  long long R = Mp_ / M_;
  std::vector<std::vector<long long>> tgens = d2M;  // image of delta_2 mod M
  {
    // kernel of delta_2 mod R, with companions over the 49 generators
    int rk = wk_ - mk_;
    Lat2k kerR((int)ni_.c3, rk, d2Mp /* entries reduced mod 2^rk inside */, true);
    for (const auto& y : kerR.kernel()) {
      // t = (delta_2 * y) / R  over the integers, then mod M
      std::vector<long long> t(ni_.c3, 0);
      std::vector<Int> acc(ni_.c3, 0);
      for (size_t j = 0; j < y.size() && j < d2Mp.size(); ++j) {
        if (y[j] == 0) continue;
        for (size_t i = 0; i < ni_.c3; ++i) acc[i] += Int((long)y[j]) * (long)d2Mp[j][i];
      }
      bool ok = true;
      for (size_t i = 0; i < ni_.c3; ++i) {
        Int q = acc[i] / (long)R, r = acc[i] % (long)R;
        if (r != 0) {  // y was only a kernel element mod R; residual divisible
          ok = false;
          break;
        }
        Int m = q % (long)M_;
        if (m < 0) m += (long)M_;
        t[i] = m.get_si();
      }
      assert(ok);
      tgens.push_back(std::move(t));
    }
  }

  // --- presentation of K/T and Smith normal form ---
  // K basis and annihilator relations
  const auto& kb = klat_->cols();
  size_t s = kb.size();
  std::vector<std::vector<Int>> P;  // presentation columns, each length s
  auto pushcol = [&](const std::vector<Int>& c) { P.push_back(c); };
  // M * e_i
  for (size_t i = 0; i < s; ++i) {
    std::vector<Int> c(s, 0);
    c[i] = (long)M_;
    pushcol(c);
  }
  // annihilator relations 2^{mk - v_i} e_i - (coords of 2^{mk-v_i} k_i)
  for (size_t i = 0; i < s; ++i) {
    int v = klat_->pivot_val()[i];
    if (v == 0) continue;
    long long f = M_ >> v;  // wait: 2^{mk - v}
    f = 1LL << (mk_ - v);
    std::vector<long long> scaled(ni_.c3);
    for (size_t j = 0; j < ni_.c3; ++j) scaled[j] = (long long)((kb[i][j] * (U64)f) & (U64)(M_ - 1));
    auto coef = klat_->solve(scaled);
    assert(coef);
    std::vector<Int> c(s, 0);
    c[i] = (long)f;
    for (size_t j = 0; j < s; ++j) c[j] -= Int((long)(*coef)[j]);
    pushcol(c);
  }
  // T generators in K coordinates
  for (const auto& t : tgens) {
    auto coef = klat_->solve(t);
    assert(coef && "trivial-class generator must be a cocycle");
    std::vector<Int> c(s, 0);
    for (size_t j = 0; j < s; ++j) c[j] = Int((long)(*coef)[j]);
    pushcol(c);
  }
  // columns into an s x t matrix
  std::vector<std::vector<Int>> Pm(s, std::vector<Int>(P.size(), 0));
  for (size_t cidx = 0; cidx < P.size(); ++cidx)
    for (size_t i = 0; i < s; ++i) Pm[i][cidx] = P[cidx][i];
  SnfResult sr = snf(Pm);
  Usnf_ = sr.U;
  for (size_t i = 0; i < sr.diag.size(); ++i) {
    if (sr.diag[i] <= 1) continue;
    factors_.push_back(sr.diag[i].get_si());
    snf_row_.push_back(i);
  }
  nfac_ = factors_.size();
  // basis class i: K coordinates x with (U x) = e_{snf_row_[i]}, i.e.
  // x = Uinv * e_row; then the cocycle is sum x_j * k_j
  for (size_t i = 0; i < nfac_; ++i) {
    std::vector<long long> v(ni_.c3, 0);
    for (size_t j = 0; j < s; ++j) {
      Int xj = sr.Uinv[j][snf_row_[i]];
      Int m = xj % (long)M_;
      if (m < 0) m += (long)M_;
      long long x = m.get_si();
      if (x == 0) continue;
      for (size_t c3i = 0; c3i < ni_.c3; ++c3i)
        v[c3i] = mod_floor(v[c3i] + x * (long long)kb[j][c3i], M_);
    }
    basis_vec_.push_back(std::move(v));
  }
}

// ---------------------------------------------------------------------------
// shared contexts and support computation
// ---------------------------------------------------------------------------

inline const H3Context& h3_context(const GroupTable& G) {
  // keyed by multiplication table (GroupTable copies abound)
  static std::map<std::vector<int>, std::unique_ptr<H3Context>> cache;
  auto it = cache.find(G.mul);
  if (it != cache.end()) return *it->second;
  static std::vector<std::unique_ptr<GroupTable>> keep;  // stable addresses
  keep.push_back(std::make_unique<GroupTable>(G));
  auto ctx = std::make_unique<H3Context>(*keep.back());
  return *cache.emplace(G.mul, std::move(ctx)).first->second;
}

// order of the restriction of w to the cyclic subgroup generated by g
inline long long restriction_order(const Cochain3& w, int g) {
  const GroupTable& G = *w.G;
  int d = G.order(g);
  if (d == 1) return 1;
  GroupTable C = cyclic_group(d);
  GroupHom f;
  f.src = &C;
  f.dst = &G;
  f.map.resize(d);
  int cur = 0;
  for (int i = 0; i < d; ++i) {
    f.map[i] = cur;
    cur = G.op(cur, g);
  }
  Cochain3 res = pullback(w, f, C);
  return h3_context(C).class_order(res);
}

// support: the set of cyclic subgroups with nontrivial restriction, each
// represented by the sorted element set of the subgroup
inline std::set<std::vector<int>> support(const Cochain3& w) {
  const GroupTable& G = *w.G;
  std::set<std::vector<int>> out;
  for (auto& [g, elems] : G.cyclic_subgroups()) {
    if (elems.size() == 1) continue;
    if (restriction_order(w, g) > 1) out.insert(elems);
  }
  return out;
}

// FS exponent of (G, w): lcm over cyclic subgroups C of |C| * ord([w|_C])
inline long long fs_exponent_cocycle(const Cochain3& w) {
  const GroupTable& G = *w.G;
  long long f = 1;
  for (auto& [g, elems] : G.cyclic_subgroups())
    f = std::lcm(f, (long long)elems.size() * restriction_order(w, g));
  return f;
}

}  // namespace tqd
