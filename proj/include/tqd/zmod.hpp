#pragma once

// Linear algebra over Z/2^k and over Z.
//
// Lat2k: a submodule of (Z/2^k)^n given by generating columns, reduced to a
// Howell-style column echelon form.  Supports membership, solving for
// coefficients, and kernel computation (via companion columns).
//
// snf: Smith normal form of a small integer matrix with transform tracking,
// used to present finite abelian groups.

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rat.hpp"

namespace tqd {

using U64 = unsigned long long;

// ---------------------------------------------------------------------------
// Howell column echelon over Z/2^k.
// Columns are reduced so that each has a pivot row; pivot value is 2^v; all
// entries of other columns at a pivot row are reduced modulo the pivot.
// Appending 2^{k-v} * column (which kills the pivot) keeps the span closed
// under the Howell property, so membership tests by top-down reduction are
// exact.
// ---------------------------------------------------------------------------
class Lat2k {
 public:
  // gens: generating columns (each of length nrows), entries arbitrary i64
  Lat2k(int nrows, int k, const std::vector<std::vector<long long>>& gens,
        bool track_companion = false)
      : n_(nrows), k_(k), mod_(1ULL << k) {
    std::vector<std::vector<U64>> cols;
    std::vector<std::vector<U64>> comp;
    for (size_t c = 0; c < gens.size(); ++c) {
      std::vector<U64> col(n_);
      for (int i = 0; i < n_; ++i) col[i] = (U64)mod_floor(gens[c][i], (long long)mod_) & (mod_ - 1);
      cols.push_back(std::move(col));
      if (track_companion) {
        std::vector<U64> e(gens.size(), 0);
        e[c] = 1;
        comp.push_back(std::move(e));
      }
    }
    reduce_all(cols, comp, track_companion);
  }

  int nrows() const { return n_; }
  U64 mod() const { return mod_; }
  int k() const { return k_; }
  // echelon columns and their pivot rows / valuations
  const std::vector<std::vector<U64>>& cols() const { return cols_; }
  const std::vector<int>& pivot_row() const { return prow_; }
  const std::vector<int>& pivot_val() const { return pval_; }
  // kernel generators of the original generating matrix (companion parts of
  // columns that reduced to zero); only if track_companion was set
  const std::vector<std::vector<U64>>& kernel() const { return kernel_; }
  // companions of the echelon columns (aligned with cols()); only if tracked
  const std::vector<std::vector<U64>>& companions() const { return comps_; }

  // Reduce v against the echelon; returns residual (zero iff v in span).
  std::vector<U64> reduce(std::vector<long long> v) const {
    std::vector<U64> r(n_);
    for (int i = 0; i < n_; ++i) r[i] = (U64)mod_floor(v[i], (long long)mod_) & (mod_ - 1);
    for (size_t c = 0; c < cols_.size(); ++c) {
      U64 x = r[prow_[c]];
      if (x == 0) continue;
      int vx = val2(x);
      if (vx < pval_[c]) continue;  // cannot reduce; will remain as residual
      U64 q = (x >> pval_[c]) & (mod_ - 1);
      sub_mul(r, cols_[c], q);
    }
    return r;
  }
  bool contains(const std::vector<long long>& v) const {
    auto r = reduce(v);
    for (U64 x : r)
      if (x) return false;
    return true;
  }
  // Solve: coefficients c (over echelon columns) with sum c_j*col_j = v.
  std::optional<std::vector<U64>> solve(const std::vector<long long>& v) const {
    std::vector<U64> r(n_);
    for (int i = 0; i < n_; ++i) r[i] = (U64)mod_floor(v[i], (long long)mod_) & (mod_ - 1);
    std::vector<U64> coef(cols_.size(), 0);
    for (size_t c = 0; c < cols_.size(); ++c) {
      U64 x = r[prow_[c]];
      if (x == 0) continue;
      int vx = val2(x);
      if (vx < pval_[c]) return std::nullopt;
      U64 q = (x >> pval_[c]) & (mod_ - 1);
      coef[c] = q;
      sub_mul(r, cols_[c], q);
    }
    for (U64 x : r)
      if (x) return std::nullopt;
    return coef;
  }

 private:
  int n_;
  int k_;
  U64 mod_;
  std::vector<std::vector<U64>> cols_;
  std::vector<std::vector<U64>> comps_;
  std::vector<int> prow_, pval_;
  std::vector<std::vector<U64>> kernel_;

  void sub_mul(std::vector<U64>& r, const std::vector<U64>& col, U64 q) const {
    if (q == 0) return;
    for (int i = 0; i < n_; ++i) r[i] = (r[i] - q * col[i]) & (mod_ - 1);
  }

  void reduce_all(std::vector<std::vector<U64>>& cols, std::vector<std::vector<U64>>& comp,
                  bool track) {
    size_t m = comp.empty() ? 0 : comp[0].size();
    used_.assign(cols.size(), 0);
    // worklist of column indices into cols/comp
    for (int row = 0; row < n_; ++row) {
      // find pivot among columns whose current leading row is `row`
      int best = -1, bestv = k_;
      for (size_t c = 0; c < cols.size(); ++c) {
        if (used_[c]) continue;
        if (leading_row(cols[c]) != row) continue;
        int v = val2(cols[c][row] & (mod_ - 1));
        if (v < bestv) {
          bestv = v;
          best = (int)c;
        }
      }
      if (best < 0) continue;
      // normalize pivot column: multiply by inverse of odd part
      U64 piv = cols[best][row];
      U64 inv = inv_odd_mod2k(piv >> bestv, mod_);
      scale(cols[best], inv);
      if (track) scale_any(comp[best], inv);
      // eliminate this row from all other unused columns with valuation >= bestv
      for (size_t c = 0; c < cols.size(); ++c) {
        if ((int)c == best || used_[c]) continue;
        U64 x = cols[c][row];
        if (x == 0) continue;
        int vx = val2(x);
        if (vx < bestv) continue;  // impossible: bestv minimal among leading==row...
        U64 q = (x >> bestv) & (mod_ - 1);
        for (int i = 0; i < n_; ++i) cols[c][i] = (cols[c][i] - q * cols[best][i]) & (mod_ - 1);
        if (track)
          for (size_t i = 0; i < m; ++i) comp[c][i] = (comp[c][i] - q * comp[best][i]) & (mod_ - 1);
      }
      used_.resize(cols.size(), 0);
      used_[best] = 1;
      order_.push_back(best);
      // Howell closure: append 2^{k-v} * pivot column (leading entry dies)
      if (bestv > 0) {
        U64 f = 1ULL << (k_ - bestv);
        std::vector<U64> extra(n_);
        for (int i = 0; i < n_; ++i) extra[i] = (cols[best][i] * f) & (mod_ - 1);
        cols.push_back(std::move(extra));
        if (track) {
          std::vector<U64> ce(m);
          for (size_t i = 0; i < m; ++i) ce[i] = (comp[best][i] * f) & (mod_ - 1);
          comp.push_back(std::move(ce));
        }
        used_.resize(cols.size(), 0);
      }
      // re-scan columns whose leading row may still equal `row` after
      // elimination (vx < bestv cannot occur since bestv was minimal), so
      // nothing to redo; continue to next row.
    }
    // collect echelon columns in pivot order and kernel columns
    used_.resize(cols.size(), 0);
    for (int idx : order_) {
      cols_.push_back(cols[idx]);
      if (track) comps_.push_back(comp[idx]);
      int r = leading_row(cols[idx]);
      prow_.push_back(r);
      pval_.push_back(val2(cols[idx][r]));
    }
    if (track) {
      for (size_t c = 0; c < cols.size(); ++c) {
        if (used_[c]) continue;
        bool zero = true;
        for (U64 x : cols[c])
          if (x) {
            zero = false;
            break;
          }
        if (zero) {
          // companion may exceed original generator count (Howell extras);
          // truncation is safe because extras are recorded in terms of the
          // original generators already.
          kernel_.push_back(comp[c]);
        }
      }
      // drop zero kernel vectors
      std::vector<std::vector<U64>> ker;
      for (auto& v : kernel_) {
        bool z = true;
        for (U64 x : v)
          if (x) {
            z = false;
            break;
          }
        if (!z) ker.push_back(v);
      }
      kernel_ = ker;
    }
  }

  int leading_row(const std::vector<U64>& col) const {
    for (int i = 0; i < n_; ++i)
      if (col[i]) return i;
    return n_;  // zero column
  }

  void scale(std::vector<U64>& col, U64 f) {
    for (int i = 0; i < n_; ++i) col[i] = (col[i] * f) & (mod_ - 1);
  }
  void scale_any(std::vector<U64>& col, U64 f) {
    for (auto& x : col) x = (x * f) & (mod_ - 1);
  }

  std::vector<char> used_;
  std::vector<int> order_;
};

// ---------------------------------------------------------------------------
// Smith normal form over Z with transforms: U * A * V = D.
// Returns diagonal entries (non-negative) and U, Uinv, V as dense matrices.
// Intended for small matrices (a few hundred rows/cols).
// ---------------------------------------------------------------------------
struct SnfResult {
  std::vector<Int> diag;                 // length min(m, n)
  std::vector<std::vector<Int>> U;       // m x m
  std::vector<std::vector<Int>> Uinv;    // m x m
  std::vector<std::vector<Int>> V;       // n x n
};

inline SnfResult snf(std::vector<std::vector<Int>> A) {
  int m = (int)A.size();
  int n = m ? (int)A[0].size() : 0;
  SnfResult res;
  auto ident = [](int s) {
    std::vector<std::vector<Int>> I(s, std::vector<Int>(s, 0));
    for (int i = 0; i < s; ++i) I[i][i] = 1;
    return I;
  };
  res.U = ident(m);
  res.Uinv = ident(m);
  res.V = ident(n);
  auto row_add = [&](int dst, int src, const Int& f) {  // row dst += f*row src
    for (int j = 0; j < n; ++j) A[dst][j] += f * A[src][j];
    for (int j = 0; j < m; ++j) res.U[dst][j] += f * res.U[src][j];
    for (int i = 0; i < m; ++i) res.Uinv[i][src] -= f * res.Uinv[i][dst];
  };
  auto row_swap = [&](int a, int b) {
    std::swap(A[a], A[b]);
    std::swap(res.U[a], res.U[b]);
    for (int i = 0; i < m; ++i) std::swap(res.Uinv[i][a], res.Uinv[i][b]);
  };
  auto row_neg = [&](int a) {
    for (int j = 0; j < n; ++j) A[a][j] = -A[a][j];
    for (int j = 0; j < m; ++j) res.U[a][j] = -res.U[a][j];
    for (int i = 0; i < m; ++i) res.Uinv[i][a] = -res.Uinv[i][a];
  };
  auto col_add = [&](int dst, int src, const Int& f) {  // col dst += f*col src
    for (int i = 0; i < m; ++i) A[i][dst] += f * A[i][src];
    for (int i = 0; i < n; ++i) res.V[i][dst] += f * res.V[i][src];
  };
  auto col_swap = [&](int a, int b) {
    for (int i = 0; i < m; ++i) std::swap(A[i][a], A[i][b]);
    for (int i = 0; i < n; ++i) std::swap(res.V[i][a], res.V[i][b]);
  };

  int t = std::min(m, n);
  auto diagonalize = [&]() {
    for (int s = 0; s < t; ++s) {
      // find a nonzero pivot with minimal absolute value in A[s.., s..]
      int pi = -1, pj = -1;
      Int best = 0;
      for (int i = s; i < m; ++i)
        for (int j = s; j < n; ++j) {
          if (A[i][j] == 0) continue;
          Int a = abs(A[i][j]);
          if (pi < 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) break;
      row_swap(s, pi);
      col_swap(s, pj);
      bool again = true;
      while (again) {
        again = false;
        for (int i = s + 1; i < m; ++i) {
          if (A[i][s] == 0) continue;
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), A[i][s].get_mpz_t(), A[s][s].get_mpz_t());
          row_add(i, s, -q);
          if (A[i][s] != 0) {  // remainder smaller than pivot: swap up, redo
            row_swap(s, i);
            again = true;
          }
        }
        for (int j = s + 1; j < n; ++j) {
          if (A[s][j] == 0) continue;
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), A[s][j].get_mpz_t(), A[s][s].get_mpz_t());
          col_add(j, s, -q);
          if (A[s][j] != 0) {
            col_swap(s, j);
            again = true;
          }
        }
      }
      if (A[s][s] < 0) row_neg(s);
    }
  };
  diagonalize();
  // enforce divisibility d_s | d_{s+1} by merging columns and re-diagonalizing
  for (;;) {
    int vs = -1, vr = -1;
    for (int s = 0; s + 1 < t && vs < 0; ++s)
      for (int r = s + 1; r < t; ++r) {
        if (A[s][s] != 0 && A[r][r] % A[s][s] != 0) {
          vs = s;
          vr = r;
          break;
        }
        if (A[s][s] == 0 && A[r][r] != 0) {  // zero must come last
          vs = s;
          vr = r;
          break;
        }
      }
    if (vs < 0) break;
    col_add(vs, vr, 1);
    diagonalize();
  }
  for (int s = 0; s < t; ++s) res.diag.push_back(A[s][s]);
  return res;
}

}  // namespace tqd
