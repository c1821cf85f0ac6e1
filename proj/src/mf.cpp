#include "mfcat/mf.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace mfcat {

PolyMatrix MatrixFactorization::Q() const {
  int r = size();
  PolyMatrix q(2 * r, 2 * r);
  q.set_block(0, r, phi);
  q.set_block(r, 0, psi);
  return q;
}

Rational GradedMF::phase() const {
  if (S.empty()) return Rational(0);
  Rational t = 0;
  for (const auto& s : S) t += s;
  return t / static_cast<long>(S.size());
}

Morphism Morphism::zero(int dst_size, int src_size) {
  return {PolyMatrix(dst_size, src_size), PolyMatrix(dst_size, src_size)};
}

Morphism Morphism::identity(int size) { return {PolyMatrix::identity(size), PolyMatrix::identity(size)}; }

Morphism compose_strict(const Morphism& f, const Morphism& g) { return {g.phi0 * f.phi0, g.phi1 * f.phi1}; }

Morphism boundary(const GradedMF& src, const GradedMF& dst, const Homotopy& h) {
  return {dst.phi() * h.h0 + h.h1 * src.psi(), dst.psi() * h.h1 + h.h0 * src.phi()};
}

namespace {

std::string where(const char* block, int i, int j) {
  std::ostringstream os;
  os << block << "(" << i << "," << j << ")";
  return os.str();
}

Report check_product(const PolyMatrix& a, const PolyMatrix& b, const Poly& f, const char* name) {
  PolyMatrix p = a * b;
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) {
      Poly expect = i == j ? f : Poly();
      if (p(i, j) != expect)
        return Report::fail(where(name, i, j) + " = " + p(i, j).str() + ", expected " + expect.str());
    }
  return Report::pass();
}

Report check_degrees(const PolyMatrix& m, const WeightSystem& w, const std::function<Rational(int, int)>& expected,
                     const char* name) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Poly& p = m(i, j);
      if (p.is_zero()) continue;
      auto d = weighted_degree(p, w);
      Rational e = expected(i, j);
      if (!d) return Report::fail(where(name, i, j) + " is not weighted-homogeneous");
      if (*d != e)
        return Report::fail(where(name, i, j) + " has degree " + d->get_str() + ", expected " + e.get_str());
    }
  return Report::pass();
}

}  // namespace

Report verify_mf(const MatrixFactorization& m) {
  int r = m.phi.rows();
  if (m.phi.cols() != r || m.psi.rows() != r || m.psi.cols() != r)
    return Report::fail("phi and psi must be square of equal size");
  if (Report rep = check_product(m.phi, m.psi, m.f, "phi*psi"); !rep) return rep;
  return check_product(m.psi, m.phi, m.f, "psi*phi");
}

Report verify_grading(const GradedMF& g) {
  int r = g.size();
  if (static_cast<int>(g.S.size()) != 2 * r) return Report::fail("grading has wrong length");
  auto& S = g.S;
  if (Report rep = check_degrees(g.phi(), g.w(), [&](int i, int j) -> Rational { return 1 + S[i] - S[r + j]; }, "phi"); !rep)
    return rep;
  return check_degrees(g.psi(), g.w(), [&](int i, int j) -> Rational { return 1 + S[r + i] - S[j]; }, "psi");
}

Report verify_morphism(const GradedMF& src, const GradedMF& dst, const Morphism& m) {
  int r = src.size(), rp = dst.size();
  if (m.phi0.rows() != rp || m.phi0.cols() != r || m.phi1.rows() != rp || m.phi1.cols() != r)
    return Report::fail("morphism has wrong shape");
  if (dst.phi() * m.phi1 != m.phi0 * src.phi()) return Report::fail("phi' phi1 != phi0 phi");
  if (dst.psi() * m.phi0 != m.phi1 * src.psi()) return Report::fail("psi' phi0 != phi1 psi");
  const auto& S = src.S;
  const auto& T = dst.S;
  if (Report rep = check_degrees(m.phi0, src.w(), [&](int i, int j) -> Rational { return T[i] - S[j]; }, "phi0"); !rep)
    return rep;
  return check_degrees(m.phi1, src.w(), [&](int i, int j) -> Rational { return T[rp + i] - S[r + j]; }, "phi1");
}

GradedMF tau(const GradedMF& g, long n) {
  GradedMF out = g;
  Rational d = make_rational(2 * n, g.w().h);
  for (auto& s : out.S) s += d;
  return out;
}

GradedMF shift_T(const GradedMF& g) {
  int r = g.size();
  GradedMF out = g;
  out.mf.phi = -g.psi();
  out.mf.psi = -g.phi();
  for (int i = 0; i < r; ++i) {
    out.S[i] = g.S[r + i] + 1;
    out.S[r + i] = g.S[i] + 1;
  }
  return out;
}

GradedMF shift_T_inv(const GradedMF& g) {
  int r = g.size();
  GradedMF out = g;
  out.mf.phi = -g.psi();
  out.mf.psi = -g.phi();
  for (int i = 0; i < r; ++i) {
    out.S[i] = g.S[r + i] - 1;
    out.S[r + i] = g.S[i] - 1;
  }
  return out;
}

GradedMF serre(const GradedMF& g) { return shift_T(tau(g, -1)); }
GradedMF serre_inv(const GradedMF& g) { return tau(shift_T_inv(g), 1); }

GradedMF cone(const GradedMF& src, const GradedMF& dst, const Morphism& m) {
  if (src.f() != dst.f() || !(src.w() == dst.w())) throw std::invalid_argument("cone: mismatched (f, W)");
  if (Report rep = verify_morphism(src, dst, m); !rep) throw std::invalid_argument("cone: " + rep.message);
  int r = src.size(), rp = dst.size();
  GradedMF out;
  out.mf.f = src.f();
  out.mf.w = src.w();
  out.mf.phi = PolyMatrix(r + rp, r + rp);
  out.mf.phi.set_block(0, 0, -src.psi());
  out.mf.phi.set_block(r, 0, m.phi0);
  out.mf.phi.set_block(r, r, dst.phi());
  out.mf.psi = PolyMatrix(r + rp, r + rp);
  out.mf.psi.set_block(0, 0, -src.phi());
  out.mf.psi.set_block(r, 0, m.phi1);
  out.mf.psi.set_block(r, r, dst.psi());
  for (int i = 0; i < r; ++i) out.S.push_back(src.S[r + i] + 1);
  for (int i = 0; i < rp; ++i) out.S.push_back(dst.S[i]);
  for (int i = 0; i < r; ++i) out.S.push_back(src.S[i] + 1);
  for (int i = 0; i < rp; ++i) out.S.push_back(dst.S[rp + i]);
  return out;
}

GradedMF direct_sum(const GradedMF& a, const GradedMF& b) {
  if (a.f() != b.f() || !(a.w() == b.w())) throw std::invalid_argument("direct_sum: mismatched (f, W)");
  int r = a.size(), rp = b.size();
  GradedMF out;
  out.mf.f = a.f();
  out.mf.w = a.w();
  out.mf.phi = PolyMatrix::diag(a.phi(), b.phi());
  out.mf.psi = PolyMatrix::diag(a.psi(), b.psi());
  out.S.insert(out.S.end(), a.S.begin(), a.S.begin() + r);
  out.S.insert(out.S.end(), b.S.begin(), b.S.begin() + rp);
  out.S.insert(out.S.end(), a.S.begin() + r, a.S.end());
  out.S.insert(out.S.end(), b.S.begin() + rp, b.S.end());
  return out;
}

namespace {

// Elementary operations on the pair (X, Y) with X Y = Y X = f, where X maps
// the "column" module to the "row" module. Row op on X is mirrored by a column
// op on Y and vice versa so both products are kept. The maps `to`/`from`
// accumulate the base changes on the row module (A) and column module (B):
// X' = A X B, Y' = B^{-1} Y A^{-1}.
struct PairWork {
  PolyMatrix X, Y;
  PolyMatrix A, Ainv, B, Binv;

  // row_t(X) += c * row_s(X)
  void add_row(int t, int s, const Poly& c) {
    for (int j = 0; j < X.cols(); ++j)
      if (!X(s, j).is_zero()) X(t, j) += c * X(s, j);
    for (int j = 0; j < A.cols(); ++j)
      if (!A(s, j).is_zero()) A(t, j) += c * A(s, j);
    // A^{-1} gains col_s -= c * col_t; Y = ... A^{-1} likewise.
    for (int i = 0; i < Y.rows(); ++i)
      if (!Y(i, t).is_zero()) Y(i, s) -= Y(i, t) * c;
    for (int i = 0; i < Ainv.rows(); ++i)
      if (!Ainv(i, t).is_zero()) Ainv(i, s) -= Ainv(i, t) * c;
  }
  // col_t(X) += c * col_s(X)
  void add_col(int t, int s, const Poly& c) {
    for (int i = 0; i < X.rows(); ++i)
      if (!X(i, s).is_zero()) X(i, t) += X(i, s) * c;
    for (int i = 0; i < B.rows(); ++i)
      if (!B(i, s).is_zero()) B(i, t) += B(i, s) * c;
    // B^{-1} gains row_s -= c * row_t.
    for (int j = 0; j < Y.cols(); ++j)
      if (!Y(t, j).is_zero()) Y(s, j) -= c * Y(t, j);
    for (int j = 0; j < Binv.cols(); ++j)
      if (!Binv(t, j).is_zero()) Binv(s, j) -= c * Binv(t, j);
  }
};

PolyMatrix drop_row(const PolyMatrix& m, int row) {
  PolyMatrix r(m.rows() - 1, m.cols());
  for (int i = 0, ri = 0; i < m.rows(); ++i) {
    if (i == row) continue;
    for (int j = 0; j < m.cols(); ++j) r(ri, j) = m(i, j);
    ++ri;
  }
  return r;
}

PolyMatrix drop_col(const PolyMatrix& m, int col) {
  PolyMatrix r(m.rows(), m.cols() - 1);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0, rj = 0; j < m.cols(); ++j) {
      if (j == col) continue;
      r(i, rj++) = m(i, j);
    }
  return r;
}

bool find_unit(const PolyMatrix& m, int& ui, int& uj) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j).is_constant()) {
        ui = i;
        uj = j;
        return true;
      }
  return false;
}

}  // namespace

bool is_reduced(const MatrixFactorization& m) {
  int i, j;
  return !find_unit(m.phi, i, j) && !find_unit(m.psi, i, j);
}

Reduction reduce_with_maps(const GradedMF& g) {
  int r = g.size();
  // Work on phi (X = phi: P1 -> P0, rows P0, cols P1); psi handled by symmetry.
  PolyMatrix phi = g.phi(), psi = g.psi();
  // Base changes: new P0 basis via A0 (P0 -> P0'), new P1 via A1.
  PolyMatrix to0 = PolyMatrix::identity(r), from0 = PolyMatrix::identity(r);
  PolyMatrix to1 = PolyMatrix::identity(r), from1 = PolyMatrix::identity(r);
  std::vector<Rational> s0(g.S.begin(), g.S.begin() + r), s1(g.S.begin() + r, g.S.end());
  for (;;) {
    int ui, uj;
    bool in_phi = find_unit(phi, ui, uj);
    if (!in_phi && !find_unit(psi, ui, uj)) break;
    PairWork w;
    if (in_phi) {
      // X = phi (rows P0, cols P1): A acts on P0, B^{-1} on P1.
      w = {phi, psi, to0, from0, from1, to1};
    } else {
      w = {psi, phi, to1, from1, from0, to0};
    }
    GaussRat uinv = w.X(ui, uj).constant_term().inverse();
    for (int j = 0; j < w.X.cols(); ++j) {
      if (j == uj || w.X(ui, j).is_zero()) continue;
      w.add_col(j, uj, -(w.X(ui, j) * uinv));
    }
    for (int i = 0; i < w.X.rows(); ++i) {
      if (i == ui || w.X(i, uj).is_zero()) continue;
      w.add_row(i, ui, -(w.X(i, uj) * uinv));
    }
    // X is now u (+) X'', so Y is (f/u) (+) Y''. Delete the trivial summand.
    w.X = drop_col(drop_row(w.X, ui), uj);
    w.Y = drop_col(drop_row(w.Y, uj), ui);
    w.A = drop_row(w.A, ui);
    w.Ainv = drop_col(w.Ainv, ui);
    w.B = drop_col(w.B, uj);
    w.Binv = drop_row(w.Binv, uj);
    if (in_phi) {
      phi = w.X; psi = w.Y; to0 = w.A; from0 = w.Ainv; from1 = w.B; to1 = w.Binv;
      s0.erase(s0.begin() + ui);
      s1.erase(s1.begin() + uj);
    } else {
      psi = w.X; phi = w.Y; to1 = w.A; from1 = w.Ainv; from0 = w.B; to0 = w.Binv;
      s1.erase(s1.begin() + ui);
      s0.erase(s0.begin() + uj);
    }
  }
  Reduction out;
  out.result.mf = {g.f(), g.w(), phi, psi};
  out.result.S = s0;
  out.result.S.insert(out.result.S.end(), s1.begin(), s1.end());
  out.to_result = {to0, to1};
  out.from_result = {from0, from1};
  return out;
}

GradedMF reduce(const GradedMF& g) { return reduce_with_maps(g).result; }

PhaseSplit phase_split(const std::vector<Rational>& S) {
  PhaseSplit out;
  if (S.empty()) return out;
  Rational t = 0;
  for (const auto& s : S) t += s;
  out.phase = t / static_cast<long>(S.size());
  for (const auto& s : S) out.traceless.push_back(s - out.phase);
  return out;
}

std::optional<std::vector<Rational>> solve_grading(const MatrixFactorization& m) {
  int r = m.size();
  int n = 2 * r;
  if (n == 0) return std::vector<Rational>{};
  // Edges I -> J with S_I - S_J = deg(Q_IJ) - 1.
  std::vector<std::vector<std::pair<int, Rational>>> adj(n);
  PolyMatrix q = m.Q();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Poly& p = q(i, j);
      if (p.is_zero()) continue;
      auto d = weighted_degree(p, m.w);
      if (!d) return std::nullopt;
      Rational diff = *d - 1;
      adj[i].emplace_back(j, -diff);  // S_J = S_I - diff
      adj[j].emplace_back(i, diff);
    }
  std::vector<std::optional<Rational>> S(n);
  S[0] = Rational(0);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (const auto& [j, d] : adj[i]) {
      Rational v = *S[i] + d;
      if (!S[j]) {
        S[j] = v;
        stack.push_back(j);
      } else if (*S[j] != v) {
        return std::nullopt;
      }
    }
  }
  std::vector<Rational> out;
  for (const auto& s : S) {
    if (!s) return std::nullopt;
    out.push_back(*s);
  }
  return phase_split(out).traceless;
}

std::vector<Rational> s_multiset(const GradedMF& g) {
  std::vector<Rational> s = g.S;
  std::sort(s.begin(), s.end());
  return s;
}

GradedMF zero_object(const Poly& f, const WeightSystem& w) { return {{f, w, PolyMatrix(0, 0), PolyMatrix(0, 0)}, {}}; }

}  // namespace mfcat
