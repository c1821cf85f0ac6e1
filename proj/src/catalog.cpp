#include "mfcat/catalog.hpp"

#include "ade_tables.hpp"
#include "mfcat/parser.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mfcat {

std::vector<int> DynkinDiagram::neighbors(int k) const {
  std::vector<int> out;
  for (auto [a, b] : edges) {
    if (a == k) out.push_back(b);
    if (b == k) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> DynkinDiagram::distances() const {
  int n = l();
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, -1));
  for (int s = 1; s <= n; ++s) {
    std::deque<int> queue{s};
    d[s][s] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int u : neighbors(v))
        if (d[s][u] < 0) {
          d[s][u] = d[s][v] + 1;
          queue.push_back(u);
        }
    }
  }
  return d;
}

DynkinDiagram dynkin_diagram(const ADEType& t) {
  t.validate();
  DynkinDiagram g{t, {}};
  int l = t.l;
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < l; ++i) g.edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 1; i < l - 2; ++i) g.edges.emplace_back(i, i + 1);
      g.edges.emplace_back(l - 2, l - 1);
      g.edges.emplace_back(l - 2, l);
      break;
    case Family::E:
      // Labels as in the AR-quivers of the matrix tables.
      if (l == 6) g.edges = {{5, 3}, {3, 2}, {2, 4}, {4, 6}, {1, 2}};
      if (l == 7) g.edges = {{7, 6}, {6, 5}, {5, 3}, {3, 2}, {2, 1}, {3, 4}};
      if (l == 8) g.edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 7}, {7, 8}, {5, 6}};
      break;
  }
  return g;
}

namespace {

void check_vertex(const ADEType& t, int k) {
  if (k < 1 || k > t.l) throw std::invalid_argument("invalid vertex " + std::to_string(k) + " for " + t.str());
}

void check_b(const ADEType& t, int b) {
  if (t.family == Family::A && (b < 1 || b > t.l))
    throw std::invalid_argument("b out of range for " + t.str());
}

}  // namespace

int dynkin_distance(const ADEType& t, int k, int kp) {
  check_vertex(t, k);
  check_vertex(t, kp);
  return dynkin_diagram(t).distances()[k][kp];
}

int PrincipalDecomposition::sigma(int k) const {
  if (std::find(pi1.begin(), pi1.end(), k) != pi1.end()) return 1;
  if (std::find(pi2.begin(), pi2.end(), k) != pi2.end()) return 2;
  throw std::invalid_argument("vertex not in diagram");
}

PrincipalDecomposition principal_decomposition(const ADEType& t, int b) {
  t.validate();
  check_b(t, b);
  PrincipalDecomposition p;
  switch (t.family) {
    case Family::A: p.base = b; break;
    case Family::D: p.base = t.l - 2; break;
    case Family::E: p.base = t.l == 6 ? 2 : (t.l == 7 ? 3 : 5); break;
  }
  auto d = dynkin_diagram(t).distances();
  for (int k = 1; k <= t.l; ++k) (d[p.base][k] % 2 ? p.pi1 : p.pi2).push_back(k);
  return p;
}

int shift_partner(const ADEType& t, int k) {
  check_vertex(t, k);
  int l = t.l;
  switch (t.family) {
    case Family::A: return l + 1 - k;
    case Family::D:
      if (l % 2 == 1 && k >= l - 1) return k == l ? l - 1 : l;
      return k;
    case Family::E:
      if (l == 6) {
        static constexpr int partner[7] = {0, 1, 2, 4, 3, 6, 5};
        return partner[k];
      }
      return k;
  }
  return k;
}

GradingData grading_data(const ADEType& t, int b, int k) {
  check_vertex(t, k);
  check_b(t, b);
  int l = t.l, h = t.h();
  GradingData g;
  switch (t.family) {
    case Family::A:
      g.nu = 1;
      g.q = {b - k};
      g.qbar = {h - b - k};
      return g;
    case Family::D:
      if (k == 1) {
        g.q = {l - 3};
      } else if (k <= l - 2) {
        g.q = {l - k - 2, l - k};
      } else {
        g.q = {1};
      }
      break;
    case Family::E: {
      static const std::vector<std::vector<int>> e6 = {{}, {1, 5}, {0, 2, 4}, {1, 3}, {1, 3}, {2}, {2}};
      static const std::vector<std::vector<int>> e7 = {{}, {2, 8}, {1, 3, 7}, {0, 2, 4, 6}, {1, 5}, {1, 3, 5}, {2, 4}, {3}};
      static const std::vector<std::vector<int>> e8 = {{},           {4, 14},    {3, 5, 13},   {2, 4, 6, 12},
                                                       {1, 3, 5, 7, 11}, {0, 2, 4, 6, 8, 10}, {1, 5, 9}, {1, 3, 7, 9},
                                                       {2, 8}};
      g.q = (l == 6 ? e6 : (l == 7 ? e7 : e8))[k];
      break;
    }
  }
  g.nu = static_cast<int>(g.q.size());
  g.qbar = g.q;
  return g;
}

namespace {

PolyMatrix from_strings(const detail::StrMatrix& m) {
  int r = static_cast<int>(m.size());
  PolyMatrix out(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out(i, j) = parse_poly(m[i][j]);
  return out;
}

std::pair<PolyMatrix, PolyMatrix> table_matrices(const ADEType& t, int k) {
  const Poly x = Poly::x(), y = Poly::y(), z = Poly::z();
  const Poly i = Poly(GaussRat::i());
  int l = t.l;
  switch (t.family) {
    case Family::A: {
      PolyMatrix phi{{y, x.pow(l + 1 - k)}, {x.pow(k), -z}};
      PolyMatrix psi{{z, x.pow(l + 1 - k)}, {x.pow(k), -y}};
      return {phi, psi};
    }
    case Family::D: {
      if (k == 1) {
        PolyMatrix m{{z, x.pow(2) + y.pow(l - 2)}, {y, -z}};
        return {m, m};
      }
      if (k <= l - 2 && k % 2 == 0) {
        int a = k / 2, c = l - 1 - k / 2;
        PolyMatrix m{{-z, 0L, x * y, y.pow(a)},
                     {0L, -z, y.pow(c), -x},
                     {x, y.pow(a), z, 0L},
                     {y.pow(c), -x * y, 0L, z}};
        return {m, m};
      }
      if (k <= l - 2) {
        // Odd k: exponents (k+1)/2, l-(k+3)/2, (k-1)/2, l-(k+1)/2.
        int a = (k + 1) / 2, bb = l - (k + 3) / 2, c = (k - 1) / 2, d = l - (k + 1) / 2;
        PolyMatrix m{{-z, y.pow(a), x * y, 0L},
                     {y.pow(bb), z, 0L, -x},
                     {x, 0L, z, y.pow(c)},
                     {0L, -x * y, y.pow(d), -z}};
        return {m, m};
      }
      bool upper = k == l - 1;
      if (l % 2 == 0) {
        Poly w = i * y.pow((l - 2) / 2);
        Poly s = upper ? w : -w;
        PolyMatrix m{{z, y * (x + s)}, {x - s, -z}};
        return {m, m};
      }
      Poly w = i * y.pow((l - 1) / 2);
      PolyMatrix p{{z + w, x * y}, {x, -(z - w)}};
      PolyMatrix q{{z - w, x * y}, {x, -(z + w)}};
      return upper ? std::make_pair(p, q) : std::make_pair(q, p);
    }
    case Family::E: {
      for (const auto& e : detail::e_table(l)) {
        if (e.k != k) continue;
        PolyMatrix phi = from_strings(e.phi);
        PolyMatrix psi = e.psi.empty() ? phi : from_strings(e.psi);
        return {phi, psi};
      }
      break;
    }
  }
  throw std::invalid_argument("no matrix factorization for vertex " + std::to_string(k));
}

std::vector<Rational> signed_multiset(const std::vector<int>& q, int h) {
  std::vector<Rational> out;
  for (int v : q) {
    out.push_back(make_rational(v, h));
    out.push_back(make_rational(-v, h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

GradedMF make_base(const ADEType& t, int b, int k) {
  auto [f, w] = ade_polynomial(t, b);
  auto [phi, psi] = table_matrices(t, k);
  GradedMF g;
  g.mf = {f, w, phi, psi};
  if (Report rep = verify_mf(g.mf); !rep) throw std::logic_error(t.str() + " k=" + std::to_string(k) + ": " + rep.message);
  auto s = solve_grading(g.mf);
  if (!s) throw std::logic_error(t.str() + " k=" + std::to_string(k) + ": no grading");
  g.S = *s;
  // The solved grading must agree with the listed (q; qbar) block by block.
  GradingData data = grading_data(t, b, k);
  int r = g.size();
  std::vector<Rational> s0(g.S.begin(), g.S.begin() + r), s1(g.S.begin() + r, g.S.end());
  std::sort(s0.begin(), s0.end());
  std::sort(s1.begin(), s1.end());
  if (r != 2 * data.nu || s0 != signed_multiset(data.q, t.h()) || s1 != signed_multiset(data.qbar, t.h()))
    throw std::logic_error(t.str() + " k=" + std::to_string(k) + ": grading disagrees with listed data");
  return g;
}

}  // namespace

const GradedMF& base_object(const ADEType& t, int b, int k) {
  t.validate();
  check_b(t, b);
  check_vertex(t, k);
  if (t.family != Family::A) b = 1;
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, int>, GradedMF> cache;
  auto key = std::make_tuple(static_cast<int>(t.family), t.l, b, k);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_base(t, b, k)).first;
  return it->second;
}

Rational object_phase(const ADEType& t, int b, int k, long n) {
  int sigma = principal_decomposition(t, b).sigma(k);
  return make_rational(2 * n + sigma, t.h());
}

bool n_for_phase(const ADEType& t, int b, int k, const Rational& p, long& n) {
  int sigma = principal_decomposition(t, b).sigma(k);
  Rational v = p * t.h() - sigma;
  if (!is_integer(v)) return false;
  long iv = v.get_num().get_si();
  if (iv % 2 != 0) return false;
  n = iv / 2;
  return true;
}

CatalogObject build_object(const ADEType& t, int b, int k, long n) {
  const GradedMF& base = base_object(t, b, k);
  CatalogObject o;
  o.type = t;
  o.b = t.family == Family::A ? b : 1;
  o.k = k;
  o.n = n;
  o.sigma = principal_decomposition(t, o.b).sigma(k);
  o.nu = base.size() / 2;
  o.gmf = base;
  Rational phase = make_rational(2 * n + o.sigma, t.h());
  for (auto& s : o.gmf.S) s += phase;
  return o;
}

std::vector<CatalogObject> enumerate(const ADEType& t, int b, const PhaseWindow& w) {
  std::vector<CatalogObject> out;
  if (!(w.lo < w.hi)) return out;
  int h = t.h();
  for (int k = 1; k <= t.l; ++k) {
    // (2n + sigma)/h in (lo, hi]  <=>  n in ((lo*h - sigma)/2, (hi*h - sigma)/2]
    int sigma = principal_decomposition(t, b).sigma(k);
    long nmin = floor_int(Rational((w.lo * h - sigma) / 2)) + 1;
    long nmax = floor_int(Rational((w.hi * h - sigma) / 2));
    for (long n = nmin; n <= nmax; ++n) out.push_back(build_object(t, b, k, n));
  }
  std::sort(out.begin(), out.end(), [](const CatalogObject& a, const CatalogObject& c) {
    if (a.phase() != c.phase()) return a.phase() < c.phase();
    return a.k < c.k;
  });
  return out;
}

std::string TypeParam::str() const {
  return type.family == Family::A ? type.str() + "(b=" + std::to_string(b) + ")" : type.str();
}

std::vector<TypeParam> all_types(int max_a, int max_d) {
  std::vector<TypeParam> out;
  for (int l = 1; l <= max_a; ++l)
    for (int b = 1; b <= l; ++b) out.push_back({ADEType{Family::A, l}, b});
  for (int l = 4; l <= max_d; ++l) out.push_back({ADEType{Family::D, l}, 1});
  for (int l = 6; l <= 8; ++l) out.push_back({ADEType{Family::E, l}, 1});
  return out;
}

}  // namespace mfcat
