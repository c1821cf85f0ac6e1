#include "mfcat/catalog.hpp"
#include "mfcat/parser.hpp"

#include <doctest.h>

#include <algorithm>

using namespace mfcat;

namespace {

// Type A_l, vertex k, as printed: phi = [[y, x^{l+1-k}], [x^k, -z]], psi = [[z, x^{l+1-k}], [x^k, -y]].
MatrixFactorization a_data(int l, int b, int k) {
  auto ap = ade_polynomial({Family::A, l}, b);
  Poly x = Poly::x(), y = Poly::y(), z = Poly::z();
  return {ap.f, ap.w, PolyMatrix{{y, x.pow(l + 1 - k)}, {x.pow(k), -z}}, PolyMatrix{{z, x.pow(l + 1 - k)}, {x.pow(k), -y}}};
}

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("A_l factorizations and their gradings") {
  for (int l = 1; l <= 6; ++l)
    for (int b = 1; b <= l; ++b)
      for (int k = 1; k <= l; ++k) {
        CAPTURE(l);
        CAPTURE(b);
        CAPTURE(k);
        auto m = a_data(l, b, k);
        // f = x^{l+1} + y z in every b-chart.
        REQUIRE(m.f == Poly::x().pow(l + 1) + Poly::y() * Poly::z());
        CHECK(verify_mf(m).ok);
        Rational q = make_rational(b - k, l + 1), qb = make_rational(l + 1 - b - k, l + 1);
        GradedMF g{m, {q, -q, qb, -qb}};
        CHECK(verify_grading(g).ok);
        GradedMF bad = g;
        bad.S[0] += make_rational(2, l + 1);
        CHECK_FALSE(verify_grading(bad).ok);
        auto solved = solve_grading(m);
        REQUIRE(solved.has_value());
        CHECK(*solved == g.S);
      }
}

TEST_CASE("a sign error breaks the factorization") {
  auto m = a_data(2, 1, 1);
  m.psi(1, 1) = -m.psi(1, 1);
  Report r = verify_mf(m);
  CHECK_FALSE(r.ok);
  CHECK(r.message.find("expected") != std::string::npos);
}

TEST_CASE("the zero object") {
  auto ap = ade_polynomial(ADEType::parse("E6"));
  GradedMF z{{ap.f, ap.w, PolyMatrix{{Poly(1L)}}, PolyMatrix{{ap.f}}}, {Rational(0), Rational(1)}};
  CHECK(verify_mf(z.mf).ok);
  CHECK(verify_grading(z).ok);
  CHECK(reduce(z).size() == 0);
  GradedMF tz = shift_T(z);
  CHECK(tz.phi() == PolyMatrix{{-ap.f}});
  CHECK(tz.psi() == PolyMatrix{{Poly(-1L)}});
  CHECK(reduce(tz).size() == 0);
}

TEST_CASE("shifts") {
  ADEType e6 = ADEType::parse("E6");
  const GradedMF& g = build_object(e6, 1, 2, 0).gmf;
  CHECK(tau(g, 0) == g);
  GradedMF th = tau(g, e6.h());
  for (std::size_t i = 0; i < g.S.size(); ++i) CHECK(th.S[i] == g.S[i] + 2);
  CHECK(shift_T(shift_T(g)) == th);
  CHECK(shift_T_inv(shift_T(g)) == g);
  CHECK(serre_inv(serre(g)) == g);
  CHECK(g.phase() == make_rational(2, 12));
  CHECK(tau(g, 1).phase() == make_rational(4, 12));
  CHECK(shift_T(g).phase() == g.phase() + 1);
}

TEST_CASE("cones and sums") {
  ADEType e6 = ADEType::parse("E6");
  GradedMF m = build_object(e6, 1, 5, 0).gmf, mp = build_object(e6, 1, 6, 0).gmf;
  GradedMF c = cone(m, m, Morphism::identity(m.size()));
  CHECK(verify_mf(c.mf).ok);
  CHECK(verify_grading(c).ok);
  CHECK(reduce(c).size() == 0);
  CHECK(cone(m, mp, Morphism::zero(mp.size(), m.size())) == direct_sum(shift_T(m), mp));
  CHECK_THROWS_AS(cone(m, m, Morphism{PolyMatrix::identity(m.size()), PolyMatrix(m.size(), m.size())}),
                  std::invalid_argument);
  GradedMF zero = zero_object(m.f(), m.w());
  CHECK(direct_sum(m, zero) == m);
  CHECK(direct_sum(zero, m) == m);
  auto u = s_multiset(m), v = s_multiset(mp);
  u.insert(u.end(), v.begin(), v.end());
  CHECK(s_multiset(direct_sum(m, mp)) == sorted(u));
  GradedMF s = direct_sum(m, mp);
  CHECK(verify_mf(s.mf).ok);
  CHECK(verify_grading(s).ok);
}

TEST_CASE("reduction with maps") {
  ADEType d5 = ADEType::parse("D5");
  GradedMF m = build_object(d5, 1, 3, 1).gmf;
  CHECK(is_reduced(m.mf));
  CHECK(reduce(m) == m);
  GradedMF c = cone(m, m, Morphism::identity(m.size()));
  GradedMF big = direct_sum(c, m);
  Reduction red = reduce_with_maps(big);
  CHECK(red.result.size() == m.size());
  CHECK(verify_morphism(big, red.result, red.to_result).ok);
  CHECK(verify_morphism(red.result, big, red.from_result).ok);
  CHECK(compose_strict(red.from_result, red.to_result) == Morphism::identity(m.size()));
}

TEST_CASE("phase split") {
  std::vector<Rational> S{make_rational(1, 3), make_rational(5, 6), Rational(1), make_rational(-1, 2)};
  PhaseSplit p = phase_split(S);
  CHECK(p.phase == make_rational(5, 12));
  Rational sum = 0;
  for (std::size_t i = 0; i < S.size(); ++i) {
    CHECK(p.traceless[i] + p.phase == S[i]);
    sum += p.traceless[i];
  }
  CHECK(sum == 0);
}

TEST_CASE("gradings solved from the matrices match the listed data") {
  for (const auto& tp : all_types(8, 8))
    for (int k = 1; k <= tp.type.l; ++k) {
      CAPTURE(tp.str());
      CAPTURE(k);
      const GradedMF& g = base_object(tp.type, tp.b, k);
      auto solved = solve_grading(g.mf);
      REQUIRE(solved.has_value());
      CHECK(*solved == g.S);
      auto gd = grading_data(tp.type, tp.b, k);
      std::vector<Rational> listed;
      for (int q : gd.q) listed.insert(listed.end(), {make_rational(q, tp.type.h()), make_rational(-q, tp.type.h())});
      for (int q : gd.qbar)
        listed.insert(listed.end(), {make_rational(q, tp.type.h()), make_rational(-q, tp.type.h())});
      CHECK(sorted(listed) == s_multiset(g));
    }
  auto e8 = grading_data(ADEType::parse("E8"), 1, 5);
  auto q = e8.q;
  std::sort(q.begin(), q.end());
  CHECK(q == std::vector<int>{0, 2, 4, 6, 8, 10});
}

TEST_CASE("an inhomogeneous matrix has no grading") {
  auto ap = ade_polynomial(ADEType::parse("A2"));
  MatrixFactorization m{ap.f, ap.w, PolyMatrix{{Poly::x() + Poly::y()}}, PolyMatrix{{Poly(1L)}}};
  CHECK_FALSE(solve_grading(m).has_value());
}
