#include "mfcat/homcat.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace mfcat {

namespace {

using Vec = std::vector<GaussRat>;
using UPoly = std::vector<GaussRat>;  // coefficients, lowest degree first

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

UPoly upoly_sub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a = q*b + r
void upoly_divmod(UPoly a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, GaussRat());
  GaussRat lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    GaussRat c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  r = a;
  trim(q);
}

// Returns (s, t) with s*a + t*b = 1; a and b must be coprime.
std::pair<UPoly, UPoly> ext_gcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b, s0{GaussRat(1)}, s1{}, t0{}, t1{GaussRat(1)};
  while (!r1.empty()) {
    UPoly q, r;
    upoly_divmod(r0, r1, q, r);
    UPoly s2 = upoly_sub(s0, upoly_mul(q, s1));
    UPoly t2 = upoly_sub(t0, upoly_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw std::logic_error("ext_gcd: polynomials are not coprime");
  GaussRat inv = r0[0].inverse();
  for (auto& x : s0) x *= inv;
  for (auto& x : t0) x *= inv;
  return {s0, t0};
}

GaussRat upoly_eval(const UPoly& p, const GaussRat& x) {
  GaussRat acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Vec axpy(Vec x, const GaussRat& a, const Vec& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!y[i].is_zero()) x[i] += a * y[i];
  return x;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Minimal polynomial of x in the unital subalgebra with identity one.
UPoly min_poly(const FiniteAlgebra& A, const Vec& one, const Vec& x) {
  Echelon ech(A.dim, true);
  std::vector<Vec> powers{one};
  while (true) {
    const Vec& p = powers.back();
    SparseVec sp = sparse_from_dense(p);
    SparseVec combo;
    if (ech.rank() > 0 && ech.solve(sp, combo)) {
      UPoly m(powers.size(), GaussRat());
      m.back() = GaussRat(1);
      for (const auto& [idx, c] : combo) m[idx] = -c;
      return m;
    }
    if (!ech.insert(sp)) throw std::logic_error("min_poly: inconsistent echelon");
    powers.push_back(A.product(x, p));
  }
}

Vec upoly_apply(const FiniteAlgebra& A, const Vec& one, const UPoly& p, const Vec& x) {
  Vec acc(A.dim);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = axpy(A.product(x, acc), *it, one);
  return acc;
}

// Best rational approximation with bounded denominator.
Rational rationalize(double v, long max_den) {
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double x = v;
  for (int it = 0; it < 40; ++it) {
    double a = std::floor(x);
    long ai = static_cast<long>(a);
    long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = x - a;
    if (std::fabs(frac) < 1e-12) break;
    x = 1.0 / frac;
  }
  return make_rational(p1, q1);
}

// Roots of p that lie in Q(i), found numerically and confirmed exactly.
std::vector<GaussRat> gaussian_roots(const UPoly& p) {
  std::vector<GaussRat> out;
  int n = static_cast<int>(p.size()) - 1;
  if (n < 1) return out;
  std::vector<std::complex<double>> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = {p[i].re().get_d(), p[i].im().get_d()};
  for (auto& x : c) x /= c.back();
  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * z + c[i];
    return acc;
  };
  // Durand-Kerner.
  std::vector<std::complex<double>> z(n);
  for (int i = 0; i < n; ++i) z[i] = std::pow(std::complex<double>(0.4, 0.9), i);
  for (int it = 0; it < 2000; ++it) {
    double delta = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      if (std::abs(den) < 1e-300) den = 1e-12;
      std::complex<double> step = eval(z[i]) / den;
      z[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-14) break;
  }
  for (const auto& root : z) {
    GaussRat g(rationalize(root.real(), 10000), rationalize(root.imag(), 10000));
    if (!upoly_eval(p, g).is_zero()) continue;
    bool seen = false;
    for (const auto& o : out) seen = seen || o == g;
    if (!seen) out.push_back(g);
  }
  return out;
}

// Idempotent of the generalised eigenspace of x for lambda, or nullopt when
// that eigenspace is everything or nothing.
std::optional<Vec> fitting_idempotent(const FiniteAlgebra& A, const Vec& one, const Vec& x, const UPoly& m,
                                      const GaussRat& lambda) {
  UPoly lin{-lambda, GaussRat(1)};
  UPoly q = m, pw{GaussRat(1)};
  while (true) {
    UPoly quo, rem;
    upoly_divmod(q, lin, quo, rem);
    if (!rem.empty()) break;
    q = quo;
    pw = upoly_mul(pw, lin);
  }
  if (pw.size() == 1 || q.size() == 1) return std::nullopt;
  auto [s, t] = ext_gcd(pw, q);
  UPoly u = upoly_mul(t, q);  // 1 mod (t - lambda)^k, 0 mod q
  UPoly quo, rem;
  upoly_divmod(u, m, quo, rem);
  return upoly_apply(A, one, rem, x);
}

// Unital corner algebra e A e with its basis expressed in A.
struct Corner {
  FiniteAlgebra alg;
  std::vector<Vec> basis;
};

Corner corner_algebra(const FiniteAlgebra& A, const Vec& e) {
  Corner c;
  Echelon ech(A.dim, true);
  for (int i = 0; i < A.dim; ++i) {
    Vec ei(A.dim);
    ei[i] = GaussRat(1);
    Vec v = A.product(A.product(e, ei), e);
    if (ech.insert(sparse_from_dense(v))) c.basis.push_back(v);
  }
  // Echelon insertion indices skip dependent vectors; re-run on the kept basis.
  Echelon kept(A.dim, true);
  for (const auto& v : c.basis) kept.insert(sparse_from_dense(v));
  int n = static_cast<int>(c.basis.size());
  auto coords = [&](const Vec& v) {
    SparseVec combo;
    if (!kept.solve(sparse_from_dense(v), combo)) throw std::logic_error("corner: product leaves the corner");
    return sparse_to_dense(combo, n);
  };
  c.alg.dim = n;
  c.alg.mult.assign(n, std::vector<Vec>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) c.alg.mult[a][b] = coords(A.product(c.basis[a], c.basis[b]));
  c.alg.one = coords(e);
  return c;
}

}  // namespace

Vec FiniteAlgebra::product(const Vec& x, const Vec& y) const {
  Vec out(dim);
  for (int a = 0; a < dim; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < dim; ++b) {
      if (y[b].is_zero()) continue;
      GaussRat c = x[a] * y[b];
      const Vec& m = mult[a][b];
      for (int k = 0; k < dim; ++k)
        if (!m[k].is_zero()) out[k] += c * m[k];
    }
  }
  return out;
}

std::vector<Vec> FiniteAlgebra::left_matrix(const Vec& x) const {
  std::vector<Vec> L(dim, Vec(dim));
  for (int j = 0; j < dim; ++j) {
    Vec ej(dim);
    ej[j] = GaussRat(1);
    Vec col = product(x, ej);
    for (int i = 0; i < dim; ++i) L[i][j] = col[i];
  }
  return L;
}

bool FiniteAlgebra::is_associative() const {
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c) {
        Vec ea(dim), ec(dim);
        ea[a] = GaussRat(1);
        ec[c] = GaussRat(1);
        if (product(mult[a][b], ec) != product(ea, mult[b][c])) return false;
      }
  return true;
}

std::vector<Vec> FiniteAlgebra::radical() const {
  std::vector<GaussRat> tr(dim);
  for (int c = 0; c < dim; ++c)
    for (int j = 0; j < dim; ++j) tr[c] += mult[c][j][j];
  SparseMatrix G(dim, dim);
  for (int a = 0; a < dim; ++a) {
    Vec row(dim);
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c) row[b] += mult[a][b][c] * tr[c];
    G.data[a] = sparse_from_dense(row);
  }
  std::vector<Vec> out;
  for (const auto& k : kernel(G)) out.push_back(sparse_to_dense(k, dim));
  return out;
}

bool FiniteAlgebra::is_local() const {
  if (dim == 0) return false;
  return dim - static_cast<int>(radical().size()) == 1;
}

bool FiniteAlgebra::is_idempotent(const Vec& e) const { return product(e, e) == e; }

Vec primitive_idempotent(const FiniteAlgebra& A, std::mt19937_64& rng) {
  if (A.dim == 0) throw std::invalid_argument("primitive_idempotent: zero algebra");
  Vec e = A.one;
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int round = 0; round <= A.dim; ++round) {
    Corner c = corner_algebra(A, e);
    if (c.alg.dim <= 1 || c.alg.is_local()) return e;
    std::vector<Vec> candidates = c.basis;
    for (std::size_t i = 0; i < c.basis.size(); ++i)
      for (std::size_t j = i + 1; j < c.basis.size(); ++j) {
        candidates.push_back(axpy(c.basis[i], GaussRat(1), c.basis[j]));
        candidates.push_back(axpy(c.basis[i], GaussRat(-1), c.basis[j]));
      }
    for (int r = 0; r < 64; ++r) {
      Vec v(A.dim);
      for (const auto& b : c.basis) v = axpy(v, GaussRat(coef(rng)), b);
      candidates.push_back(v);
    }
    std::optional<Vec> split;
    for (const Vec& x : candidates) {
      if (is_zero_vec(x)) continue;
      UPoly m = min_poly(A, e, x);
      for (const GaussRat& lambda : gaussian_roots(m)) {
        split = fitting_idempotent(A, e, x, m, lambda);
        if (split) break;
      }
      if (split) break;
    }
    if (!split) throw std::runtime_error("primitive_idempotent: no element splits over Q(i)");
    e = *split;
  }
  throw std::logic_error("primitive_idempotent: corner dimension did not decrease");
}

EndAlgebra end_algebra(const GradedMF& g) {
  EndAlgebra out;
  auto space = std::make_shared<HomSpace>(g, g);
  out.space = space;
  int n = space->dim();
  out.algebra.dim = n;
  out.algebra.mult.assign(n, std::vector<Vec>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out.algebra.mult[a][b] = space->coordinates(compose_strict(space->basis()[b], space->basis()[a]));
  out.algebra.one = n > 0 ? space->coordinates(Morphism::identity(g.size())) : Vec{};
  return out;
}

namespace {

using ConstMatrix = std::vector<Vec>;

ConstMatrix constant_part(const PolyMatrix& m) {
  ConstMatrix c(m.rows(), Vec(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) c[i][j] = m(i, j).constant_term();
  return c;
}

PolyMatrix to_poly(const ConstMatrix& c, int rows, int cols) {
  PolyMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (!c[i][j].is_zero()) m(i, j) = Poly(c[i][j]);
  return m;
}

ConstMatrix invert(ConstMatrix a) {
  int n = static_cast<int>(a.size());
  ConstMatrix inv(n, Vec(n));
  for (int i = 0; i < n; ++i) inv[i][i] = GaussRat(1);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("invert: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    GaussRat s = a[col][col].inverse();
    for (int j = 0; j < n; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      GaussRat f = a[i][col];
      for (int j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

struct ImageBlock {
  std::vector<int> cols;
  PolyMatrix U;  // r x s, columns of the idempotent
  PolyMatrix V;  // s x r, with V U = 1 and U V = idempotent
};

// Image of a strict idempotent block e (r x r) over the graded local ring.
ImageBlock image_block(const PolyMatrix& e) {
  int r = e.rows();
  ConstMatrix E = constant_part(e);
  ImageBlock out;
  {
    Echelon ech(r);
    for (int j = 0; j < r; ++j) {
      Vec col(r);
      for (int i = 0; i < r; ++i) col[i] = E[i][j];
      if (ech.insert(sparse_from_dense(col))) out.cols.push_back(j);
    }
  }
  int s = static_cast<int>(out.cols.size());
  out.U = PolyMatrix(r, s);
  for (int i = 0; i < r; ++i)
    for (int a = 0; a < s; ++a) out.U(i, a) = e(i, out.cols[a]);
  // Rows R with C[R, :] invertible, C = E[:, cols].
  std::vector<int> rows;
  {
    Echelon ech(s);
    for (int i = 0; i < r && static_cast<int>(rows.size()) < s; ++i) {
      Vec row(s);
      for (int a = 0; a < s; ++a) row[a] = E[i][out.cols[a]];
      if (ech.insert(sparse_from_dense(row))) rows.push_back(i);
    }
  }
  ConstMatrix C(s, Vec(s));
  for (int x = 0; x < s; ++x)
    for (int a = 0; a < s; ++a) C[x][a] = E[rows[x]][out.cols[a]];
  ConstMatrix Cinv = s > 0 ? invert(C) : ConstMatrix{};
  ConstMatrix L(s, Vec(r));
  for (int a = 0; a < s; ++a)
    for (int x = 0; x < s; ++x) L[a][rows[x]] = Cinv[a][x];
  PolyMatrix Lp = to_poly(L, s, r);
  PolyMatrix M = Lp * out.U;  // identity plus a nilpotent part
  PolyMatrix N = PolyMatrix::identity(s) - M;
  PolyMatrix Minv = PolyMatrix::identity(s), term = PolyMatrix::identity(s);
  for (int it = 0; it <= 2 * r + 1; ++it) {
    term = term * N;
    if (term.is_zero()) break;
    Minv = Minv + term;
  }
  if (!(Minv * M == PolyMatrix::identity(s))) throw std::logic_error("image_block: Neumann series did not terminate");
  out.V = Minv * Lp * e;
  return out;
}

}  // namespace

Splitting split_idempotent(const GradedMF& g, const EndAlgebra& end, const std::vector<GaussRat>& e) {
  if (!is_reduced(g.mf)) throw std::invalid_argument("split_idempotent: object must be reduced");
  if (!(end.space->src() == g)) throw std::invalid_argument("split_idempotent: End algebra of another object");
  if (static_cast<int>(e.size()) != end.dim() || !end.algebra.is_idempotent(e))
    throw std::invalid_argument("split_idempotent: class is not idempotent");
  int r = g.size();
  // Strict lift, then Newton iteration e -> 3e^2 - 2e^3 modulo the nilpotent homotopy ideal.
  Morphism f = end.space->from_coordinates(e);
  bool strict = false;
  for (int it = 0; it < 64 && !strict; ++it) {
    Morphism sq = compose_strict(f, f);
    if (sq == f) {
      strict = true;
      break;
    }
    Morphism cu = compose_strict(sq, f);
    f = GaussRat(3) * sq + GaussRat(-2) * cu;
  }
  if (!strict) throw std::logic_error("split_idempotent: lift did not become idempotent");
  ImageBlock b0 = image_block(f.phi0), b1 = image_block(f.phi1);
  if (b0.cols.size() != b1.cols.size()) throw std::logic_error("split_idempotent: image blocks differ in rank");
  int s = static_cast<int>(b0.cols.size());
  Splitting out;
  out.summand.mf = {g.f(), g.w(), b0.V * g.phi() * b1.U, b1.V * g.psi() * b0.U};
  out.summand.S.resize(2 * s);
  for (int a = 0; a < s; ++a) {
    out.summand.S[a] = g.S[b0.cols[a]];
    out.summand.S[s + a] = g.S[r + b1.cols[a]];
  }
  out.inclusion = {b0.U, b1.U};
  out.projection = {b0.V, b1.V};
  if (!(compose_strict(out.inclusion, out.projection) == Morphism::identity(s)))
    throw std::logic_error("split_idempotent: projection o inclusion is not the identity");
  return out;
}

bool is_indecomposable(const GradedMF& g) {
  if (g.size() == 0) return false;
  int d = hom_dim(g, g);
  if (d == 0) return false;
  if (d == 1) return true;
  return end_algebra(g).algebra.is_local();
}

namespace {

PolyMatrix derivative(const PolyMatrix& m, int v) {
  PolyMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).derivative(v);
  return out;
}

PolyMatrix scale(const Poly& p, const PolyMatrix& m) {
  PolyMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = p * m(i, j);
  return out;
}

}  // namespace

Homotopy jacobi_homotopy(const GradedMF& dst, const Morphism& phi, int v) {
  return {derivative(dst.psi(), v) * phi.phi0, derivative(dst.phi(), v) * phi.phi1};
}

Report jacobi_annihilation_check(const GradedMF& src, const GradedMF& dst, const Morphism& phi, int v) {
  if (Report rep = verify_morphism(src, dst, phi); !rep) return Report::fail("input: " + rep.message);
  Poly df = src.f().derivative(v);
  GradedMF target = tau(dst, src.w().h - src.w().weight(v));
  Morphism prod{scale(df, phi.phi0), scale(df, phi.phi1)};
  if (Report rep = verify_morphism(src, target, prod); !rep) return Report::fail("product: " + rep.message);
  Homotopy H = jacobi_homotopy(dst, phi, v);
  if (Report rep = verify_homotopy(src, target, H); !rep) return Report::fail("homotopy: " + rep.message);
  if (!(boundary(src, target, H) == prod)) return Report::fail("Q'H + HQ differs from the product");
  return Report::pass();
}

}  // namespace mfcat
