#include "mfcat/weights.hpp"

#include "mfcat/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mfcat {

WeightSystem::WeightSystem(int a_, int b_, int c_, int h_) : a(a_), b(b_), c(c_), h(h_) {
  if (a <= 0 || b <= 0 || c <= 0 || h <= 0) throw std::invalid_argument("weights must be positive");
  if (std::gcd(std::gcd(a, b), c) != 1) throw std::invalid_argument("gcd(a,b,c) must be 1");
}

std::optional<long> WeightSystem::weight_of_degree(const Rational& d) const {
  Rational t = d * h / 2;
  if (!is_integer(t)) return std::nullopt;
  return t.get_num().get_si();
}

std::string WeightSystem::str() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ";" +
         std::to_string(h) + ")";
}

std::optional<Rational> weighted_degree(const Poly& p, const WeightSystem& w) {
  if (p.is_zero()) throw std::invalid_argument("weighted degree of the zero polynomial");
  long t = w.weight(p.terms().begin()->first);
  for (const auto& [m, c] : p.terms())
    if (w.weight(m) != t) return std::nullopt;
  return make_rational(2 * t, w.h);
}

namespace {

// Dense integer polynomials, index = power of T.
using IntPoly = std::vector<mpz_class>;

IntPoly mul(const IntPoly& p, const IntPoly& q) {
  IntPoly r(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

// T^n - 1 for n > 0.
IntPoly cyclo_like(int n) {
  IntPoly r(n + 1);
  r[0] = -1;
  r[n] = 1;
  return r;
}

// Exact division by a monic polynomial; returns false if a remainder is left.
bool divide(IntPoly num, const IntPoly& den, IntPoly& quot) {
  int dn = static_cast<int>(den.size()) - 1;
  int nn = static_cast<int>(num.size()) - 1;
  if (nn < dn) {
    quot.assign(1, 0);
    return std::all_of(num.begin(), num.end(), [](const mpz_class& v) { return v == 0; });
  }
  quot.assign(nn - dn + 1, 0);
  for (int i = nn; i >= dn; --i) {
    mpz_class q = num[i];  // den is monic
    quot[i - dn] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dn; ++j) num[i - dn + j] -= q * den[j];
  }
  for (int i = 0; i < dn; ++i)
    if (num[i] != 0) return false;
  return true;
}

}  // namespace

RegularityReport regularity(const WeightSystem& w) {
  RegularityReport rep;
  rep.epsilon = w.a + w.b + w.c - w.h;
  // Numerator as a Laurent polynomial: prod (T^h - T^w). Shift by the smallest power.
  std::map<int, mpz_class> num{{0, 1}};
  for (int v = 0; v < 3; ++v) {
    std::map<int, mpz_class> next;
    for (const auto& [p, c] : num) {
      next[p + w.h] += c;
      next[p + w.weight(v)] -= c;
    }
    num.clear();
    for (const auto& [p, c] : next)
      if (c != 0) num.emplace(p, c);
  }
  if (num.empty()) return rep;  // identically zero: some weight equals h
  int low = num.begin()->first;
  IntPoly n(num.rbegin()->first - low + 1);
  for (const auto& [p, c] : num) n[p - low] = c;
  IntPoly den = mul(mul(cyclo_like(w.a), cyclo_like(w.b)), cyclo_like(w.c));
  IntPoly q;
  if (!divide(n, den, q)) return rep;
  // chi = T^{low - h} * q(T)
  bool nonneg = true;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] < 0) nonneg = false;
    for (long m = 0; q[i] > 0 && m < q[i].get_si(); ++m)
      rep.exponents.push_back(static_cast<int>(i) + low - w.h);
  }
  rep.is_regular = nonneg && !rep.exponents.empty();
  if (!rep.is_regular) rep.exponents.clear();
  rep.milnor_number = static_cast<int>(rep.exponents.size());
  return rep;
}

std::vector<Monomial> monomials_of_weight(const WeightSystem& w, long t) {
  std::vector<Monomial> out;
  if (t < 0) return out;
  for (long i = t / w.a; i >= 0; --i) {
    long r1 = t - i * w.a;
    for (long j = r1 / w.b; j >= 0; --j) {
      long r2 = r1 - j * w.b;
      if (r2 % w.c == 0) out.emplace_back(static_cast<int>(i), static_cast<int>(j), static_cast<int>(r2 / w.c));
    }
  }
  return out;
}

std::vector<Monomial> monomial_basis(const WeightSystem& w, const Rational& d) {
  auto t = w.weight_of_degree(d);
  if (!t) return {};
  return monomials_of_weight(w, *t);
}

JacobiDims milnor_poincare(const Poly& f, const WeightSystem& w) {
  auto deg = weighted_degree(f, w);
  if (!deg || *deg != 2) throw std::invalid_argument("milnor_poincare: f must have degree 2");
  RegularityReport reg = regularity(w);
  if (!reg.is_regular) throw std::invalid_argument("milnor_poincare: weight system is not regular");
  std::array<Poly, 3> partial{f.derivative(0), f.derivative(1), f.derivative(2)};
  // Socle degree in weight units; everything above top + max weight lies in the ideal.
  long top = *std::max_element(reg.exponents.begin(), reg.exponents.end()) - reg.epsilon;
  long stop = top + std::max({w.a, w.b, w.c});
  JacobiDims out;
  for (long t = 0; t <= stop; ++t) {
    std::vector<Monomial> basis = monomials_of_weight(w, t);
    std::map<Monomial, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
    Echelon e(static_cast<int>(basis.size()));
    for (int v = 0; v < 3; ++v) {
      if (partial[v].is_zero()) continue;
      long shift = w.h - w.weight(v);
      for (const Monomial& m : monomials_of_weight(w, t - shift)) {
        SparseVec vec;
        for (const auto& [pm, c] : partial[v].terms()) vec.emplace_back(index.at(pm * m), c);
        std::sort(vec.begin(), vec.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        e.insert(vec);
      }
    }
    int dim = static_cast<int>(basis.size()) - e.rank();
    out.graded_dims.push_back(dim);
    out.total_dim += dim;
    if (out.total_dim > reg.milnor_number || (t > top && dim != 0))
      throw std::runtime_error("Jacobi ring dimension exceeds the regularity prediction");
  }
  while (!out.graded_dims.empty() && out.graded_dims.back() == 0) out.graded_dims.pop_back();
  return out;
}

ADEType ADEType::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("unknown type: " + s);
  ADEType t;
  switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'A': t.family = Family::A; break;
    case 'D': t.family = Family::D; break;
    case 'E': t.family = Family::E; break;
    default: throw std::invalid_argument("unknown type: " + s);
  }
  std::string rest = s.substr(1);
  if (rest.empty() || rest.size() > 3 ||
      !std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("unknown type: " + s);
  t.l = std::stoi(rest);
  t.validate();
  return t;
}

void ADEType::validate() const {
  bool ok = (family == Family::A && l >= 1) || (family == Family::D && l >= 4) ||
            (family == Family::E && l >= 6 && l <= 8);
  if (!ok) throw std::invalid_argument("unknown type: " + str());
}

std::string ADEType::str() const {
  const char* f = family == Family::A ? "A" : (family == Family::D ? "D" : "E");
  return f + std::to_string(l);
}

int ADEType::h() const {
  switch (family) {
    case Family::A: return l + 1;
    case Family::D: return 2 * (l - 1);
    case Family::E: return l == 6 ? 12 : (l == 7 ? 18 : 30);
  }
  return 0;
}

ADEPolynomial ade_polynomial(const ADEType& t, int b) {
  t.validate();
  const Poly x = Poly::x(), y = Poly::y(), z = Poly::z();
  int l = t.l;
  switch (t.family) {
    case Family::A:
      if (b < 1 || b > l) throw std::invalid_argument("b out of range for " + t.str());
      return {x.pow(l + 1) + y * z, WeightSystem(1, b, l + 1 - b, l + 1)};
    case Family::D:
      return {x.pow(2) * y + y.pow(l - 1) + z.pow(2), WeightSystem(l - 2, 2, l - 1, 2 * (l - 1))};
    case Family::E:
      if (l == 6) return {x.pow(3) + y.pow(4) + z.pow(2), WeightSystem(4, 3, 6, 12)};
      if (l == 7) return {x.pow(3) + x * y.pow(3) + z.pow(2), WeightSystem(6, 4, 9, 18)};
      return {x.pow(3) + y.pow(5) + z.pow(2), WeightSystem(10, 6, 15, 30)};
  }
  throw std::invalid_argument("unknown type");
}

}  // namespace mfcat
