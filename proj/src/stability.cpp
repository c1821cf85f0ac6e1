#include "mfcat/stability.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mfcat {

namespace {

// pi lies in [kPiLo, kPiLo + 1e-20].
const Rational& pi_lo() {
  static const Rational v("314159265358979323846/100000000000000000000");
  return v;
}
const Rational& pi_hi() {
  static const Rational v("314159265358979323847/100000000000000000000");
  return v;
}

Interval cos_enclosure(const Rational& q) {
  // Reduce to 0 <= q <= 1: cos is even and 2-periodic in q.
  Rational r = q - 2 * Rational(floor_int(Rational(q / 2)));  // [0, 2)
  if (r > 1) r = 2 - r;
  Rational a = r * pi_lo(), b = r * pi_hi();
  constexpr int kTerms = 16;
  Rational lo = 0, hi = 0, fact = 1, pa = 1, pb = 1;
  for (int n = 0; n < kTerms; ++n) {
    if (n > 0) {
      fact *= Rational((2 * n - 1) * (2 * n));
      pa *= a * a;
      pb *= b * b;
    }
    if (n % 2 == 0) {
      lo += pa / fact;
      hi += pb / fact;
    } else {
      lo -= pb / fact;
      hi -= pa / fact;
    }
  }
  fact *= Rational((2 * kTerms - 1) * (2 * kTerms));
  Rational rem = pb * b * b / fact;
  lo -= rem;
  hi += rem;
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

}  // namespace

Interval cos_pi(const Rational& q) {
  static std::mutex mu;
  static std::map<Rational, Interval> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, cos_enclosure(q)).first;
  return it->second;
}

CentralCharge central_charge(const GradedMF& g) {
  CentralCharge z;
  z.phase = g.phase();
  z.mass_bounds = {0, 0};
  z.phase_pure = true;
  if (g.S.empty()) return z;
  for (const auto& s : g.S) {
    z.offsets.push_back(s - z.phase);
    z.value += std::polar(1.0, M_PI * s.get_d());
  }
  std::vector<Rational> pos = z.offsets, neg;
  for (const auto& o : z.offsets) neg.push_back(-o);
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end());
  z.phase_pure = pos == neg;
  for (const auto& o : z.offsets) {
    z.mass += std::cos(M_PI * o.get_d());
    Interval c = cos_pi(o);
    z.mass_bounds.lo += c.lo;
    z.mass_bounds.hi += c.hi;
  }
  return z;
}

std::optional<CatalogId> identify(const ADEType& t, int b, const GradedMF& g) {
  if (g.size() == 0) return std::nullopt;
  Rational p = g.phase();
  std::optional<CatalogId> found;
  for (int k = 1; k <= t.l; ++k) {
    long n = 0;
    if (!n_for_phase(t, b, k, p, n)) continue;
    GradedMF m = build_object(t, b, k, n).gmf;
    if (m.size() != g.size()) continue;
    if (hom_dim(g, m) == 0 || hom_dim(m, g) == 0) continue;
    if (found) return std::nullopt;
    found = CatalogId{k, n};
  }
  return found;
}

GradedMF scramble(const GradedMF& g, std::mt19937_64& rng, int steps) {
  GradedMF out = g;
  int r = g.size();
  if (r < 2) return out;
  std::uniform_int_distribution<int> slot(0, r - 1), coef(-2, 2), side(0, 1);
  for (int s = 0; s < steps; ++s) {
    int i = slot(rng), j = slot(rng);
    if (i == j) continue;
    int blk = side(rng);
    auto monos = monomial_basis(g.w(), g.S[blk * r + i] - g.S[blk * r + j]);
    if (monos.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    int re = coef(rng), im = coef(rng);
    if (re == 0 && im == 0) continue;
    Poly m(monos[pick(rng)], GaussRat(Rational(re), Rational(im)));
    // E = I + m e_ij on block blk; the other map is multiplied by E^-1 = I - m e_ij.
    PolyMatrix e = PolyMatrix::identity(r), einv = PolyMatrix::identity(r);
    e(i, j) = m;
    einv(i, j) = -m;
    if (blk == 0) {
      out.mf.phi = e * out.mf.phi;
      out.mf.psi = out.mf.psi * einv;
    } else {
      out.mf.psi = e * out.mf.psi;
      out.mf.phi = out.mf.phi * einv;
    }
  }
  return out;
}

std::vector<GradedMF> decompose(const GradedMF& g, std::mt19937_64& rng) {
  std::vector<GradedMF> out;
  GradedMF cur = reduce(g);
  for (int guard = 0; cur.size() > 0; ++guard) {
    if (guard > 2 * g.size() + 1) throw std::logic_error("decompose: splitting does not terminate");
    EndAlgebra end = end_algebra(cur);
    if (end.dim() == 0) throw std::logic_error("decompose: nonzero reduced object with zero End");
    if (end.dim() == 1 || end.algebra.is_local()) {
      out.push_back(cur);
      break;
    }
    auto e = primitive_idempotent(end.algebra, rng);
    std::vector<GaussRat> rest = end.algebra.one;
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= e[i];
    out.push_back(split_idempotent(cur, end, e).summand);
    cur = split_idempotent(cur, end, rest).summand;
  }
  return out;
}

namespace {

Morphism block_inclusion(int first, int second) {
  int n = first + second;
  PolyMatrix m(n, first);
  for (int i = 0; i < first; ++i) m(i, i) = Poly(1L);
  return {m, m};
}

Morphism block_projection(int first, int second) {
  int n = first + second;
  PolyMatrix m(second, n);
  for (int i = 0; i < second; ++i) m(i, first + i) = Poly(1L);
  return {m, m};
}

}  // namespace

HNFiltration hn_filtration(const GradedMF& g, std::mt19937_64& rng) {
  HNFiltration hn;
  hn.object = g;
  std::map<Rational, std::vector<GradedMF>, std::greater<>> by_phase;
  for (auto& s : decompose(g, rng)) by_phase[s.phase()].push_back(std::move(s));
  GradedMF prev = zero_object(g.f(), g.w());
  for (auto& [phase, parts] : by_phase) {
    HNPiece piece;
    piece.phase = phase;
    piece.factor = zero_object(g.f(), g.w());
    for (const auto& s : parts) piece.factor = direct_sum(piece.factor, s);
    piece.summands = std::move(parts);
    GradedMF cur = direct_sum(prev, piece.factor);
    hn.triangles.push_back({prev, cur, block_inclusion(prev.size(), piece.factor.size()),
                            block_projection(prev.size(), piece.factor.size())});
    prev = cur;
    hn.pieces.push_back(std::move(piece));
  }
  return hn;
}

std::vector<CatalogObject> heart_objects(const ADEType& t, int b) {
  return enumerate(t, b, {Rational(0), Rational(1)});
}

CheckReport check_stability_axioms(const ADEType& t, int b, const PhaseWindow& w, const StabilityOptions& opt) {
  CheckReport rep;
  auto objs = enumerate(t, b, w);
  // (1) Z = m exp(i pi phi) with m > 0.
  for (const auto& o : objs) {
    CentralCharge z = central_charge(o.gmf);
    ++rep.checked;
    std::string tag = t.str() + " M^" + std::to_string(o.k) + "_" + std::to_string(o.n) + ": ";
    if (z.phase != o.phase()) rep.fail(tag + "phase mismatch");
    if (!z.phase_pure) rep.fail(tag + "offsets are not symmetric");
    if (!z.mass_positive()) rep.fail(tag + "mass not certified positive");
    std::complex<double> expect = std::polar(z.mass, M_PI * z.phase.get_d());
    if (std::abs(z.value - expect) >= 1e-9) rep.fail(tag + "Z differs from m exp(i pi phi)");
  }
  // (2) P(phi + 1) = T P(phi): T maps each slice bijectively onto the next.
  std::map<Rational, std::vector<CatalogId>> slices;
  for (const auto& o : objs) slices[o.phase()].push_back({o.k, o.n});
  for (const auto& [phase, ids] : slices) {
    Rational up = phase + 1;
    if (!w.contains(up)) continue;
    std::vector<CatalogId> image;
    for (const auto& id : ids) {
      ++rep.checked;
      auto m = identify(t, b, shift_T(build_object(t, b, id.k, id.n).gmf));
      if (!m) {
        rep.fail(t.str() + " T(M^" + std::to_string(id.k) + ") is not a catalog object");
        continue;
      }
      image.push_back(*m);
    }
    std::sort(image.begin(), image.end());
    auto target = slices.count(up) ? slices[up] : std::vector<CatalogId>{};
    std::sort(target.begin(), target.end());
    if (image != target) rep.fail(t.str() + " T P(" + phase.get_str() + ") != P(" + up.get_str() + ")");
  }
  // (3) No morphisms from higher to lower phase.
  for (const auto& x : objs)
    for (const auto& y : objs) {
      if (!(x.phase() > y.phase())) continue;
      ++rep.checked;
      if (hom_dim(x.gmf, y.gmf) != 0)
        rep.fail(t.str() + " Hom(M^" + std::to_string(x.k) + "_" + std::to_string(x.n) + ", M^" +
                 std::to_string(y.k) + "_" + std::to_string(y.n) + ") != 0 against the phase order");
    }
  // (4) HN filtrations of random direct sums.
  if (objs.empty()) return rep;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> count(1, opt.max_summands);
  std::uniform_int_distribution<std::size_t> pick(0, objs.size() - 1);
  for (int trial = 0; trial < opt.random_sums; ++trial) {
    ++rep.checked;
    int m = count(rng);
    GradedMF sum = zero_object(objs[0].gmf.f(), objs[0].gmf.w());
    std::map<Rational, std::vector<CatalogId>, std::greater<>> expected;
    for (int i = 0; i < m; ++i) {
      const auto& o = objs[pick(rng)];
      sum = direct_sum(sum, o.gmf);
      expected[o.phase()].push_back({o.k, o.n});
    }
    std::string tag = t.str() + " HN trial " + std::to_string(trial) + ": ";
    HNFiltration hn = hn_filtration(scramble(sum, rng), rng);
    if (hn.pieces.size() != expected.size()) {
      rep.fail(tag + "wrong number of pieces");
      continue;
    }
    auto it = expected.begin();
    for (std::size_t j = 0; j < hn.pieces.size(); ++j, ++it) {
      const auto& piece = hn.pieces[j];
      if (j > 0 && !(hn.pieces[j - 1].phase > piece.phase)) rep.fail(tag + "phases not strictly decreasing");
      if (piece.phase != it->first) rep.fail(tag + "unexpected phase " + piece.phase.get_str());
      std::vector<CatalogId> got;
      for (const auto& s : piece.summands) {
        auto id = identify(t, b, s);
        if (!id) {
          rep.fail(tag + "summand is not a catalog object");
          continue;
        }
        got.push_back(*id);
      }
      auto want = it->second;
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      if (got != want) rep.fail(tag + "factor multiset differs at phase " + piece.phase.get_str());
      const auto& tri = hn.triangles[j];
      if (!verify_morphism(tri.prev, tri.cur, tri.incl) || !verify_morphism(tri.cur, piece.factor, tri.proj))
        rep.fail(tag + "triangle witnesses are not morphisms");
    }
  }
  return rep;
}

CheckReport projectivity_check(const ADEType& t, int b) {
  CheckReport rep;
  auto heart = heart_objects(t, b);
  for (int k = 1; k <= t.l; ++k) {
    GradedMF p = build_object(t, b, k, 0).gmf;
    for (const auto& nobj : heart) {
      ++rep.checked;
      int direct = hom_dim(p, shift_T(nobj.gmf));
      int dual = hom_dim(tau(nobj.gmf, 1), p);
      if (direct != 0 || dual != 0)
        rep.fail(t.str() + " Hom(M^" + std::to_string(k) + "_0, T M^" + std::to_string(nobj.k) + "_" +
                 std::to_string(nobj.n) + ") = " + std::to_string(direct) + " (dual " + std::to_string(dual) + ")");
    }
  }
  return rep;
}

ExceptionalCollection exceptional_collection(const ADEType& t, int b, const DynkinQuiver& q) {
  int l = t.l;
  int h = t.h();
  std::vector<std::optional<Rational>> phase(l + 1);
  phase[1] = object_phase(t, b, 1, 0);
  // Propagate along the tree: an arrow u -> v raises the phase by 1/h.
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [u, v] : q.arrows) {
      if (phase[u] && !phase[v]) {
        phase[v] = *phase[u] + make_rational(1, h);
        changed = true;
      } else if (phase[v] && !phase[u]) {
        phase[u] = *phase[v] - make_rational(1, h);
        changed = true;
      }
    }
  }
  ExceptionalCollection ec;
  ec.n.assign(l + 1, 0);
  for (int k = 1; k <= l; ++k) {
    if (!phase[k] || !n_for_phase(t, b, k, *phase[k], ec.n[k]))
      throw std::logic_error("exceptional_collection: phase propagation left the lattice");
    ec.order.push_back(k);
  }
  std::stable_sort(ec.order.begin(), ec.order.end(), [&](int a, int c) { return *phase[a] < *phase[c]; });
  for (int k : ec.order) ec.objects.push_back(build_object(t, b, k, ec.n[k]));
  return ec;
}

CheckReport strong_exceptionality_check(const ADEType& t, int b, const DynkinQuiver& q) {
  CheckReport rep;
  auto ec = exceptional_collection(t, b, q);
  auto paths = path_hom_dims(q);
  int l = t.l;
  int total = 0;
  std::string tag = t.str() + " [" + q.str() + "] ";
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      const auto& ei = ec.objects[i];
      const auto& ej = ec.objects[j];
      std::string pair = tag + "(E" + std::to_string(ei.k) + ", E" + std::to_string(ej.k) + ")";
      int d = hom_dim(ei.gmf, ej.gmf);
      ++rep.checked;
      if (i == j && d != 1) rep.fail(pair + " End is not one-dimensional");
      if (i > j && d != 0) rep.fail(pair + " backward morphism");
      if (i <= j) total += d;
      if (d != paths.hom_dims[ei.k][ej.k]) rep.fail(pair + " Hom differs from the path count");
      GradedMF up = ej.gmf, down = ej.gmf;
      for (int m = 1; m <= 2; ++m) {
        up = shift_T(up);
        down = shift_T_inv(down);
        ++rep.checked;
        if (hom_dim(ei.gmf, up) != 0) rep.fail(pair + " Hom to T^" + std::to_string(m) + " is nonzero");
        if (hom_dim(ei.gmf, down) != 0) rep.fail(pair + " Hom to T^-" + std::to_string(m) + " is nonzero");
      }
    }
  ++rep.checked;
  if (total != paths.dim)
    rep.fail(tag + "total dimension " + std::to_string(total) + " but " + std::to_string(paths.dim) + " paths");
  return rep;
}

}  // namespace mfcat
