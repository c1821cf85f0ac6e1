#include "mfcat/homcat.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace mfcat {

namespace {

using DegreeFn = std::function<Rational(int, int, int)>;

EntryLayout make_layout(int rows, int cols, const WeightSystem& w, const DegreeFn& degree) {
  EntryLayout L;
  L.rows = rows;
  L.cols = cols;
  L.slot_of.assign(static_cast<std::size_t>(2) * rows * cols, -1);
  for (int blk = 0; blk < 2; ++blk)
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        auto monos = monomial_basis(w, degree(blk, i, j));
        if (monos.empty()) continue;
        L.slot_of[(blk * rows + i) * cols + j] = static_cast<int>(L.slots.size());
        L.slots.push_back({blk, i, j, L.size, std::move(monos)});
        L.size += static_cast<int>(L.slots.back().monos.size());
      }
  return L;
}

EntryLayout morphism_layout(const GradedMF& src, const GradedMF& dst) {
  int r = src.size(), rp = dst.size();
  const auto& S = src.S;
  const auto& T = dst.S;
  return make_layout(rp, r, src.w(), [&](int blk, int i, int j) -> Rational {
    return blk == 0 ? T[i] - S[j] : T[rp + i] - S[r + j];
  });
}

// Block 0 is h0: P0 -> P1', block 1 is h1: P1 -> P0'.
EntryLayout homotopy_layout(const GradedMF& src, const GradedMF& dst) {
  int r = src.size(), rp = dst.size();
  const auto& S = src.S;
  const auto& T = dst.S;
  return make_layout(rp, r, src.w(), [&](int blk, int i, int j) -> Rational {
    return blk == 0 ? T[rp + i] - S[j] - 1 : T[i] - S[r + j] - 1;
  });
}

int index_of(const EntryLayout& L, int blk, int i, int j, const Monomial& m) {
  int s = L.find(blk, i, j);
  if (s < 0) return -1;
  const auto& monos = L.slots[s].monos;
  auto it = std::lower_bound(monos.begin(), monos.end(), m);
  if (it == monos.end() || !(*it == m)) return -1;
  return L.slots[s].offset + static_cast<int>(it - monos.begin());
}

// Accumulates c * m * p into entry (blk, i, j) of a vector over layout L.
void add_product(std::map<int, GaussRat>& acc, const EntryLayout& L, int blk, int i, int j, const Poly& p,
                 const Monomial& m, const GaussRat& c) {
  for (const auto& [mono, x] : p.terms()) {
    int idx = index_of(L, blk, i, j, mono * m);
    if (idx < 0) throw std::logic_error("hom: product leaves the degree layout");
    auto [it, inserted] = acc.try_emplace(idx);
    it->second += c * x;
    if (it->second.is_zero()) acc.erase(it);
  }
}

SparseVec to_sparse(const std::map<int, GaussRat>& m) { return {m.begin(), m.end()}; }

// Image of each homotopy unit vector under H -> Q'H + HQ, as vectors over the morphism layout.
std::vector<SparseVec> boundary_images(const GradedMF& src, const GradedMF& dst, const EntryLayout& mor,
                                       const EntryLayout& hot) {
  int r = src.size(), rp = dst.size();
  std::vector<SparseVec> out;
  out.reserve(hot.size);
  const GaussRat one(1);
  for (const auto& slot : hot.slots) {
    int i = slot.i, j = slot.j;
    for (const Monomial& m : slot.monos) {
      std::map<int, GaussRat> acc;
      if (slot.block == 0) {
        // phi0 += phi' h0 ; phi1 += h0 phi
        for (int a = 0; a < rp; ++a) add_product(acc, mor, 0, a, j, dst.phi()(a, i), m, one);
        for (int c = 0; c < r; ++c) add_product(acc, mor, 1, i, c, src.phi()(j, c), m, one);
      } else {
        // phi0 += h1 psi ; phi1 += psi' h1
        for (int c = 0; c < r; ++c) add_product(acc, mor, 0, i, c, src.psi()(j, c), m, one);
        for (int a = 0; a < rp; ++a) add_product(acc, mor, 1, a, j, dst.psi()(a, i), m, one);
      }
      out.push_back(to_sparse(acc));
    }
  }
  return out;
}

// Cocycle equations phi' phi1 - phi0 phi = 0 and psi' phi0 - phi1 psi = 0, one
// column per morphism unknown.
struct CocycleSystem {
  int n_eq = 0;
  std::vector<SparseVec> columns;
};

CocycleSystem cocycle_system(const GradedMF& src, const GradedMF& dst, const EntryLayout& mor) {
  int r = src.size(), rp = dst.size();
  std::map<std::tuple<int, int, int, Monomial>, int> eq_index;
  auto eq = [&](int blk, int a, int c, const Monomial& m) {
    auto [it, inserted] = eq_index.try_emplace({blk, a, c, m}, static_cast<int>(eq_index.size()));
    return it->second;
  };
  CocycleSystem sys;
  sys.columns.reserve(mor.size);
  for (const auto& slot : mor.slots) {
    int i = slot.i, j = slot.j;
    for (const Monomial& m : slot.monos) {
      std::map<int, GaussRat> acc;
      auto add = [&](int blk, int a, int c, const Poly& p, const GaussRat& sign) {
        for (const auto& [mono, x] : p.terms()) {
          auto [it, inserted] = acc.try_emplace(eq(blk, a, c, mono * m));
          it->second += sign * x;
          if (it->second.is_zero()) acc.erase(it);
        }
      };
      if (slot.block == 0) {
        for (int c = 0; c < r; ++c) add(0, i, c, src.phi()(j, c), GaussRat(-1));
        for (int a = 0; a < rp; ++a) add(1, a, j, dst.psi()(a, i), GaussRat(1));
      } else {
        for (int a = 0; a < rp; ++a) add(0, a, j, dst.phi()(a, i), GaussRat(1));
        for (int c = 0; c < r; ++c) add(1, i, c, src.psi()(j, c), GaussRat(-1));
      }
      sys.columns.push_back(to_sparse(acc));
    }
  }
  sys.n_eq = static_cast<int>(eq_index.size());
  return sys;
}

void check_same_ring(const GradedMF& a, const GradedMF& b) {
  if (a.f() != b.f() || !(a.w() == b.w())) throw std::invalid_argument("hom: mismatched (f, W)");
}

int compute_dim(const GradedMF& src, const GradedMF& dst) {
  EntryLayout mor = morphism_layout(src, dst);
  if (mor.size == 0) return 0;
  CocycleSystem sys = cocycle_system(src, dst, mor);
  Echelon eq(sys.n_eq);
  for (const auto& c : sys.columns) eq.insert(c);
  int nullity = mor.size - eq.rank();
  if (nullity == 0) return 0;
  EntryLayout hot = homotopy_layout(src, dst);
  Echelon bd(mor.size);
  for (const auto& v : boundary_images(src, dst, mor, hot)) bd.insert(v);
  return nullity - bd.rank();
}

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

std::size_t hash_rational(const Rational& q) {
  return mix(static_cast<std::size_t>(mpz_get_si(q.get_num_mpz_t())),
             static_cast<std::size_t>(mpz_get_si(q.get_den_mpz_t())));
}

std::size_t hash_matrix(std::size_t h, const PolyMatrix& m) {
  h = mix(h, static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      h = mix(h, m(i, j).size());
      for (const auto& [mono, c] : m(i, j).terms()) {
        for (int v = 0; v < 3; ++v) h = mix(h, static_cast<std::size_t>(mono[v]));
        h = mix(h, hash_rational(c.re()));
        h = mix(h, hash_rational(c.im()));
      }
    }
  return h;
}

// Hom is unchanged by a common shift of both gradings; entries store the pair
// with src.S[0] moved to zero.
struct CacheEntry {
  GradedMF src, dst;
  int dim;
};

GradedMF shifted(const GradedMF& g, const Rational& by) {
  GradedMF out = g;
  for (auto& s : out.S) s -= by;
  return out;
}

std::size_t pair_hash(const GradedMF& src, const GradedMF& dst) {
  std::size_t h = hash_matrix(hash_matrix(0, src.phi()), src.psi());
  h = hash_matrix(hash_matrix(h, dst.phi()), dst.psi());
  for (const auto& s : src.S) h = mix(h, hash_rational(s));
  for (const auto& s : dst.S) h = mix(h, hash_rational(s));
  return h;
}

std::mutex cache_mu;
std::unordered_multimap<std::size_t, CacheEntry>& dim_cache() {
  static std::unordered_multimap<std::size_t, CacheEntry> c;
  return c;
}

}  // namespace

HomSpace::HomSpace(const GradedMF& src, const GradedMF& dst) : src_(src), dst_(dst) {
  check_same_ring(src, dst);
  mor_ = morphism_layout(src, dst);
  hot_ = homotopy_layout(src, dst);
  int r = src.size(), rp = dst.size();
  ech_ = std::make_shared<Echelon>(mor_.size, true);
  if (mor_.size == 0) return;
  auto images = boundary_images(src, dst, mor_, hot_);
  n_boundary_ = static_cast<int>(images.size());
  for (const auto& v : images) ech_->insert(v);

  CocycleSystem sys = cocycle_system(src, dst, mor_);
  SparseMatrix eqs(sys.n_eq, mor_.size);
  for (int u = 0; u < mor_.size; ++u)
    for (const auto& [e, x] : sys.columns[u]) eqs.data[e].emplace_back(u, x);
  for (const SparseVec& k : kernel(eqs)) {
    int idx = ech_->inserted();
    if (!ech_->insert(k)) continue;
    basis_insert_.push_back(idx);
    Morphism m = Morphism::zero(rp, r);
    for (const auto& [u, x] : k) {
      auto it = std::upper_bound(mor_.slots.begin(), mor_.slots.end(), u,
                                 [](int v, const EntryLayout::Slot& s) { return v < s.offset; });
      const auto& slot = *std::prev(it);
      Poly term(slot.monos[u - slot.offset], x);
      (slot.block == 0 ? m.phi0 : m.phi1)(slot.i, slot.j) += term;
    }
    basis_.push_back(std::move(m));
  }
}

SparseVec HomSpace::to_vector(const Morphism& m) const {
  int r = src_.size(), rp = dst_.size();
  if (m.phi0.rows() != rp || m.phi0.cols() != r || m.phi1.rows() != rp || m.phi1.cols() != r)
    throw std::invalid_argument("hom: morphism has wrong shape");
  std::map<int, GaussRat> acc;
  for (int blk = 0; blk < 2; ++blk) {
    const PolyMatrix& a = blk == 0 ? m.phi0 : m.phi1;
    for (int i = 0; i < rp; ++i)
      for (int j = 0; j < r; ++j)
        for (const auto& [mono, x] : a(i, j).terms()) {
          int idx = index_of(mor_, blk, i, j, mono);
          if (idx < 0) throw std::invalid_argument("hom: morphism entry has the wrong degree");
          acc.emplace(idx, x);
        }
  }
  return to_sparse(acc);
}

bool HomSpace::is_cocycle(const Morphism& m) const {
  return dst_.phi() * m.phi1 == m.phi0 * src_.phi() && dst_.psi() * m.phi0 == m.phi1 * src_.psi();
}

void HomSpace::decompose(const Morphism& m, std::vector<GaussRat>* coords, Homotopy* h) const {
  if (!is_cocycle(m)) throw std::invalid_argument("hom: not a cocycle");
  int r = src_.size(), rp = dst_.size();
  if (coords) coords->assign(basis_.size(), GaussRat());
  if (h) *h = {PolyMatrix(rp, r), PolyMatrix(rp, r)};
  if (mor_.size == 0) return;
  SparseVec combo;
  if (!ech_->solve(to_vector(m), combo)) throw std::logic_error("hom: cocycle outside the computed span");
  for (const auto& [idx, x] : combo) {
    if (idx >= n_boundary_) {
      auto it = std::find(basis_insert_.begin(), basis_insert_.end(), idx);
      if (it == basis_insert_.end()) throw std::logic_error("hom: combination uses a dependent vector");
      if (coords) (*coords)[it - basis_insert_.begin()] = x;
      continue;
    }
    if (!h) continue;
    auto it = std::upper_bound(hot_.slots.begin(), hot_.slots.end(), idx,
                               [](int v, const EntryLayout::Slot& s) { return v < s.offset; });
    const auto& slot = *std::prev(it);
    (slot.block == 0 ? h->h0 : h->h1)(slot.i, slot.j) += Poly(slot.monos[idx - slot.offset], x);
  }
}

std::vector<GaussRat> HomSpace::coordinates(const Morphism& m) const {
  std::vector<GaussRat> c;
  decompose(m, &c, nullptr);
  return c;
}

Morphism HomSpace::from_coordinates(const std::vector<GaussRat>& c) const {
  if (c.size() != basis_.size()) throw std::invalid_argument("hom: coordinate vector has wrong length");
  Morphism m = Morphism::zero(dst_.size(), src_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) m = m + c[i] * basis_[i];
  return m;
}

std::optional<Homotopy> HomSpace::null_homotopy(const Morphism& m) const {
  std::vector<GaussRat> c;
  Homotopy h;
  decompose(m, &c, &h);
  for (const auto& x : c)
    if (!x.is_zero()) return std::nullopt;
  return h;
}

int hom_dim(const GradedMF& src, const GradedMF& dst) {
  check_same_ring(src, dst);
  if (src.size() == 0 || dst.size() == 0) return 0;
  // Quick exit when every entry degree is negative.
  Rational lo_src = *std::min_element(src.S.begin(), src.S.end());
  Rational hi_dst = *std::max_element(dst.S.begin(), dst.S.end());
  if (hi_dst < lo_src) return 0;
  if (morphism_layout(src, dst).size == 0) return 0;
  GradedMF a = shifted(src, src.S[0]), b = shifted(dst, src.S[0]);
  std::size_t key = pair_hash(a, b);
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto [lo, hi] = dim_cache().equal_range(key);
    for (auto it = lo; it != hi; ++it)
      if (it->second.src == a && it->second.dst == b) return it->second.dim;
  }
  int d = compute_dim(src, dst);
  std::lock_guard<std::mutex> lock(cache_mu);
  dim_cache().emplace(key, CacheEntry{std::move(a), std::move(b), d});
  return d;
}

std::size_t hom_cache_size() {
  std::lock_guard<std::mutex> lock(cache_mu);
  return dim_cache().size();
}

Report verify_homotopy(const GradedMF& src, const GradedMF& dst, const Homotopy& h) {
  int r = src.size(), rp = dst.size();
  if (h.h0.rows() != rp || h.h0.cols() != r || h.h1.rows() != rp || h.h1.cols() != r)
    return Report::fail("homotopy has wrong shape");
  EntryLayout L = homotopy_layout(src, dst);
  for (int blk = 0; blk < 2; ++blk) {
    const PolyMatrix& a = blk == 0 ? h.h0 : h.h1;
    for (int i = 0; i < rp; ++i)
      for (int j = 0; j < r; ++j)
        for (const auto& [mono, x] : a(i, j).terms())
          if (index_of(L, blk, i, j, mono) < 0)
            return Report::fail(std::string(blk == 0 ? "h0" : "h1") + "(" + std::to_string(i) + "," +
                                std::to_string(j) + ") has the wrong degree");
  }
  return Report::pass();
}

bool HomClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const GaussRat& x) { return x.is_zero(); });
}

HomClass compose(const HomClass& f, const HomClass& g, const std::shared_ptr<const HomSpace>& target) {
  if (!(f.space->dst() == g.space->src())) throw std::invalid_argument("compose: endpoints do not match");
  if (!(target->src() == f.space->src()) || !(target->dst() == g.space->dst()))
    throw std::invalid_argument("compose: target space has the wrong endpoints");
  return {target, target->coordinates(compose_strict(f.witness(), g.witness()))};
}

std::string multiset_str(const Multiset& m) {
  std::string out;
  for (const auto& [c, mult] : m) {
    if (mult == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(c);
    if (mult > 1) out += '^' + std::to_string(mult);
  }
  return out;
}

int multiset_size(const Multiset& m) {
  int n = 0;
  for (const auto& [c, mult] : m) n += mult;
  return n;
}

int hom_dim_at(const ADEType& t, int b, int k, int kp, int c) {
  auto pd = principal_decomposition(t, b);
  int v = c - pd.sigma(kp) + pd.sigma(k);
  if (v % 2 != 0) return 0;
  return hom_dim(build_object(t, b, k, 0).gmf, build_object(t, b, kp, v / 2).gmf);
}

Multiset hom_multiset(const ADEType& t, int b, int k, int kp) {
  int h = t.h();
  Multiset out;
  for (int c = -4; c <= h + 2; ++c) {
    int d = hom_dim_at(t, b, k, kp, c);
    if (d == 0) continue;
    if (c < 0 || c > h - 2)
      throw std::logic_error("hom_multiset: nonzero Hom outside [0, h-2] at c=" + std::to_string(c));
    out[c] = d;
  }
  return out;
}

}  // namespace mfcat
