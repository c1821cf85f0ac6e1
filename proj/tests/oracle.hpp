#pragma once

// Reference computations for the tests, written without the library's
// layouts, sparse elimination or Hom cache.

#include "mfcat/catalog.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace oracle {

using mfcat::GaussRat;
using mfcat::GradedMF;
using mfcat::Monomial;
using mfcat::Poly;
using mfcat::PolyMatrix;
using mfcat::Rational;

/// Rank by Gauss-Jordan elimination, scanning columns right to left and
/// taking the last nonzero row as pivot.
inline int dense_rank(std::vector<std::vector<GaussRat>> a) {
  int rows = static_cast<int>(a.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(a[0].size());
  int rank = 0;
  for (int c = cols - 1; c >= 0 && rank < rows; --c) {
    int piv = -1;
    for (int r = rows - 1; r >= rank; --r)
      if (!a[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    GaussRat inv = a[rank][c].inverse();
    for (auto& x : a[rank]) x *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      GaussRat m = a[r][c];
      for (int j = 0; j < cols; ++j)
        if (!a[rank][j].is_zero()) a[r][j] -= m * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Monomials x^i y^j z^k of degree d, by scanning exponents.
inline std::vector<Monomial> monomials(const GradedMF& g, const Rational& d) {
  std::vector<Monomial> out;
  const auto& w = g.w();
  for (int i = 0; i <= w.h; ++i)
    for (int j = 0; j <= w.h; ++j)
      for (int k = 0; k <= w.h; ++k)
        if (mfcat::make_rational(2 * (w.a * i + w.b * j + w.c * k), w.h) == d) out.emplace_back(i, j, k);
  return out;
}

// One unknown: coefficient of monomial m in entry (i, j) of block blk.
struct Unknown {
  int blk, i, j;
  Monomial m;
};

// Row-major coordinates of a pair of matrices in the (block, row, col, monomial) basis.
class Coords {
public:
  std::vector<GaussRat> vec(const PolyMatrix& a, const PolyMatrix& b) {
    std::vector<std::pair<int, GaussRat>> entries;
    const PolyMatrix* ms[2] = {&a, &b};
    for (int blk = 0; blk < 2; ++blk)
      for (int i = 0; i < ms[blk]->rows(); ++i)
        for (int j = 0; j < ms[blk]->cols(); ++j)
          for (const auto& [m, c] : (*ms[blk])(i, j).terms()) {
            auto key = std::make_tuple(blk, i, j, m.e);
            auto it = index_.try_emplace(key, static_cast<int>(index_.size())).first;
            entries.emplace_back(it->second, c);
          }
    std::vector<GaussRat> v(index_.size());
    for (auto& [k, c] : entries) v[k] += c;
    return v;
  }
  std::size_t size() const { return index_.size(); }

private:
  std::map<std::tuple<int, int, int, std::array<int, 3>>, int> index_;
};

inline std::vector<std::vector<GaussRat>> pad(std::vector<std::vector<GaussRat>> rows, std::size_t n) {
  for (auto& r : rows) r.resize(n);
  return rows;
}

/// dim Hom(src, dst) = nullity of the cocycle map minus the rank of the boundaries.
inline int brute_hom_dim(const GradedMF& src, const GradedMF& dst) {
  int r = src.size(), rp = dst.size();
  if (r == 0 || rp == 0) return 0;
  const auto& S = src.S;
  const auto& T = dst.S;
  std::vector<Unknown> cochain, homotopy;
  for (int blk = 0; blk < 2; ++blk)
    for (int i = 0; i < rp; ++i)
      for (int j = 0; j < r; ++j) {
        Rational dm = blk == 0 ? T[i] - S[j] : T[rp + i] - S[r + j];
        Rational dh = blk == 0 ? T[rp + i] - S[j] - 1 : T[i] - S[r + j] - 1;
        for (const auto& m : monomials(src, dm)) cochain.push_back({blk, i, j, m});
        for (const auto& m : monomials(src, dh)) homotopy.push_back({blk, i, j, m});
      }
  auto unit = [&](const Unknown& u) {
    PolyMatrix a(rp, r), b(rp, r);
    (u.blk == 0 ? a : b)(u.i, u.j) = Poly(u.m);
    return std::make_pair(a, b);
  };
  // Cocycle condition: phi' f1 - f0 phi = 0 and psi' f0 - f1 psi = 0.
  Coords eq;
  std::vector<std::vector<GaussRat>> rows;
  for (const auto& u : cochain) {
    auto [f0, f1] = unit(u);
    rows.push_back(eq.vec(dst.phi() * f1 - f0 * src.phi(), dst.psi() * f0 - f1 * src.psi()));
  }
  int nullity = static_cast<int>(cochain.size()) - dense_rank(pad(rows, eq.size()));
  // Boundaries: (phi' h0 + h1 psi, psi' h1 + h0 phi).
  Coords mor;
  std::vector<std::vector<GaussRat>> bnd;
  for (const auto& u : homotopy) {
    auto [h0, h1] = unit(u);
    bnd.push_back(mor.vec(dst.phi() * h0 + h1 * src.psi(), dst.psi() * h1 + h0 * src.phi()));
  }
  return nullity - dense_rank(pad(bnd, mor.size()));
}

/// dim Hom(M^k_0, M^{k'}) at phase gap c/h by knitting Hom(x, -) over Z x Delta:
/// h(y) = max(0, sum of h over the arrows into y minus h(tau y)), starting from h(x) = 1.
inline std::map<int, int> knitting_multiset(const mfcat::ADEType& t, int k, int kp) {
  auto dyn = mfcat::dynkin_diagram(t);
  int l = t.l, h = t.h();
  // values[c][v]: positions c = 0..h measured from x, nonzero only on the parity class of v.
  auto dist = dyn.distances();
  std::vector<std::vector<int>> val(h + 1, std::vector<int>(l + 1, 0));
  val[0][k] = 1;
  for (int c = 1; c <= h; ++c)
    for (int v = 1; v <= l; ++v) {
      if ((dist[k][v] + c) % 2 != 0) continue;
      int s = 0;
      for (int u : dyn.neighbors(v)) s += val[c - 1][u];
      if (c >= 2) s -= val[c - 2][v];
      val[c][v] = std::max(0, s);
    }
  std::map<int, int> out;
  for (int c = 0; c <= h; ++c)
    if (val[c][kp] > 0) out[c] = val[c][kp];
  return out;
}

}  // namespace oracle

namespace oracle {

/// Pairs (k', k) where a grid C breaks the coproduct recursion
/// sum over neighbours k_i of C(k', k_i) = (C(k', k) - 1) + (C(k', k) + 1),
/// the top term dropped when k is the Serre partner of k'.
template <class Grid>
std::vector<std::pair<int, int>> recursion_failures(const mfcat::ADEType& t, Grid&& C) {
  auto dyn = mfcat::dynkin_diagram(t);
  int h = t.h();
  std::vector<std::pair<int, int>> bad;
  for (int kp = 1; kp <= t.l; ++kp)
    for (int k = 1; k <= t.l; ++k) {
      std::map<int, int> lhs, rhs;
      for (int ki : dyn.neighbors(k))
        for (const auto& [c, m] : C(kp, ki)) lhs[c] += m;
      bool serre = k == mfcat::shift_partner(t, kp);
      for (const auto& [c, m] : C(kp, k)) {
        if (c != 0) rhs[c - 1] += m;
        if (!(serre && c == h - 2)) rhs[c + 1] += m;
      }
      if (lhs != rhs) bad.emplace_back(kp, k);
    }
  return bad;
}

}  // namespace oracle
