#include "mfcat/homcat.hpp"

#include <algorithm>

namespace mfcat {

namespace {

std::string obj_name(int k, long n) { return "M^" + std::to_string(k) + "_" + std::to_string(n); }

std::vector<Rational> block_multiset(const GradedMF& g, int blk) {
  int r = g.size();
  std::vector<Rational> v(g.S.begin() + blk * r, g.S.begin() + (blk + 1) * r);
  std::sort(v.begin(), v.end());
  return v;
}

// Vertex k, shift n and c = h * (phase difference) of the pair (M^k_0, M^{k'}_n).
int phase_gap(const CatalogObject& x, const CatalogObject& y) {
  Rational d = (y.phase() - x.phase()) * x.type.h();
  return static_cast<int>(d.get_num().get_si());
}

}  // namespace

void CheckReport::merge(const CheckReport& o) {
  checked += o.checked;
  failures.insert(failures.end(), o.failures.begin(), o.failures.end());
}

int serre_partner(const ADEType& t, int k) { return shift_partner(t, k); }

CheckReport ar_triangle_check(const ADEType& t, int b, int k, long n) {
  CheckReport rep;
  std::string tag = t.str() + " " + obj_name(k, n) + ": ";
  CatalogObject obj = build_object(t, b, k, n);
  const GradedMF& M = obj.gmf;
  GradedMF X = serre_inv(M);
  HomSpace hs(X, M);
  ++rep.checked;
  if (hs.dim() != 1) {
    rep.fail(tag + "dim Hom(S^-1 X, X) = " + std::to_string(hs.dim()));
    return rep;
  }
  GradedMF C = cone(X, M, hs.basis()[0]);
  ++rep.checked;
  if (Report r = verify_mf(C.mf); !r) rep.fail(tag + "cone: " + r.message);
  if (Report r = verify_grading(C); !r) rep.fail(tag + "cone: " + r.message);
  GradedMF Cr = reduce(C);

  auto nbrs = dynkin_diagram(t).neighbors(k);
  Rational target = obj.phase() + make_rational(1, t.h());
  std::vector<GradedMF> ys;
  std::vector<Rational> p0, p1;
  for (int ki : nbrs) {
    long ni = 0;
    if (!n_for_phase(t, b, ki, target, ni)) {
      rep.fail(tag + "neighbour " + std::to_string(ki) + " has no object at phase " + target.get_str());
      continue;
    }
    ys.push_back(build_object(t, b, ki, ni).gmf);
    auto a = block_multiset(ys.back(), 0), c = block_multiset(ys.back(), 1);
    p0.insert(p0.end(), a.begin(), a.end());
    p1.insert(p1.end(), c.begin(), c.end());
  }
  std::sort(p0.begin(), p0.end());
  std::sort(p1.begin(), p1.end());
  ++rep.checked;
  if (block_multiset(Cr, 0) != p0 || block_multiset(Cr, 1) != p1)
    rep.fail(tag + "reduced cone grading differs from the neighbour sum");
  ++rep.checked;
  int end_dim = hom_dim(Cr, Cr);
  if (end_dim != static_cast<int>(nbrs.size()))
    rep.fail(tag + "dim End(cone) = " + std::to_string(end_dim) + ", neighbours " + std::to_string(nbrs.size()));
  for (std::size_t i = 0; i < ys.size(); ++i) {
    ++rep.checked;
    int d = hom_dim(Cr, ys[i]);
    if (d != 1) rep.fail(tag + "dim Hom(cone, neighbour " + std::to_string(nbrs[i]) + ") = " + std::to_string(d));
  }
  return rep;
}

CheckReport serre_duality_check(const ADEType& t, int b, const PhaseWindow& w) {
  CheckReport rep;
  auto objs = enumerate(t, b, w);
  for (const auto& x : objs) {
    GradedMF sx = serre(x.gmf);
    ++rep.checked;
    if (int d = hom_dim(x.gmf, sx); d != 1)
      rep.fail(t.str() + " dim Hom(X, S X) = " + std::to_string(d) + " for " + obj_name(x.k, x.n));
    for (const auto& y : objs) {
      ++rep.checked;
      int a = hom_dim(x.gmf, y.gmf), c = hom_dim(y.gmf, sx);
      if (a != c)
        rep.fail(t.str() + " Hom(" + obj_name(x.k, x.n) + ", " + obj_name(y.k, y.n) + ") = " + std::to_string(a) +
                 " but Hom(Y, S X) = " + std::to_string(c));
    }
  }
  int h = t.h();
  for (int k = 1; k <= t.l; ++k)
    for (int kp = 1; kp <= t.l; ++kp) {
      Multiset reflected;
      for (const auto& [c, m] : hom_multiset(t, b, k, kp)) reflected[h - 2 - c] = m;
      ++rep.checked;
      if (hom_multiset(t, b, kp, serre_partner(t, k)) != reflected)
        rep.fail(t.str() + " C(k', k^S) != h-2-C(k, k') at (" + std::to_string(k) + "," + std::to_string(kp) + ")");
    }
  return rep;
}

CheckReport irreducible_check(const ADEType& t, int b, const PhaseWindow& w) {
  CheckReport rep;
  auto objs = enumerate(t, b, w);
  for (const auto& x : objs)
    for (const auto& y : objs) {
      int c = phase_gap(x, y);
      if (c < 0) continue;
      int d = dynkin_distance(t, x.k, y.k);
      int dim = hom_dim(x.gmf, y.gmf);
      std::string tag = t.str() + " " + obj_name(x.k, x.n) + " -> " + obj_name(y.k, y.n) + ": ";
      ++rep.checked;
      if (c < d && dim != 0) rep.fail(tag + "nonzero Hom below the distance");
      if (c == d && dim != 1) rep.fail(tag + "dim Hom at the distance is " + std::to_string(dim));
      if (c == 1 && x.k == y.k && dim != 0) rep.fail(tag + "loop at c=1");
      if (c != 1 || d != 1) continue;
      // No factorisation through an intermediate indecomposable other than X or Y.
      for (int kz = 1; kz <= t.l; ++kz)
        for (const Rational& pz : {x.phase(), y.phase()}) {
          long nz = 0;
          if (!n_for_phase(t, b, kz, pz, nz)) continue;
          if ((kz == x.k && nz == x.n) || (kz == y.k && nz == y.n)) continue;
          GradedMF z = build_object(t, b, kz, nz).gmf;
          ++rep.checked;
          if (hom_dim(x.gmf, z) != 0 && hom_dim(z, y.gmf) != 0)
            rep.fail(tag + "factors through " + obj_name(kz, nz));
        }
    }
  return rep;
}

CheckReport coproduct_recursion_check(const ADEType& t, int b) {
  CheckReport rep;
  int h = t.h();
  auto dyn = dynkin_diagram(t);
  for (int kp = 1; kp <= t.l; ++kp)
    for (int k = 1; k <= t.l; ++k) {
      Multiset lhs;
      for (int ki : dyn.neighbors(k))
        for (const auto& [c, m] : hom_multiset(t, b, kp, ki)) lhs[c] += m;
      Multiset rhs;
      bool serre = k == serre_partner(t, kp);
      for (const auto& [c, m] : hom_multiset(t, b, kp, k)) {
        if (c != 0) rhs[c - 1] += m;
        if (!(serre && c == h - 2)) rhs[c + 1] += m;
      }
      ++rep.checked;
      if (lhs != rhs)
        rep.fail(t.str() + " recursion fails at k'=" + std::to_string(kp) + ", k=" + std::to_string(k) + ": " +
                 multiset_str(lhs) + " vs " + multiset_str(rhs));
    }
  return rep;
}

CheckReport multiset_shape_check(const ADEType& t, int b) {
  CheckReport rep;
  int h = t.h();
  for (int k = 1; k <= t.l; ++k)
    for (int kp = 1; kp <= t.l; ++kp) {
      Multiset m = hom_multiset(t, b, k, kp);
      std::string tag = t.str() + " C(" + std::to_string(k) + "," + std::to_string(kp) + "): ";
      ++rep.checked;
      if (m != hom_multiset(t, b, kp, k)) rep.fail(tag + "not symmetric");
      if (m.empty()) {
        rep.fail(tag + "empty");
        continue;
      }
      int lo = m.begin()->first, hi = m.rbegin()->first;
      int dmin = dynkin_distance(t, k, kp), dmax = h - 2 - dynkin_distance(t, serre_partner(t, k), kp);
      if (lo < 0 || hi > h - 2) rep.fail(tag + "outside [0, h-2]");
      if (lo != dmin || m.begin()->second != 1) rep.fail(tag + "minimum is not a simple d(k,k')");
      if (hi != dmax || m.rbegin()->second != 1) rep.fail(tag + "maximum is not a simple h-2-d(k^S,k')");
    }
  return rep;
}

}  // namespace mfcat
