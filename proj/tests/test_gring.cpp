#include "mfcat/catalog.hpp"
#include "mfcat/parser.hpp"

#include <doctest.h>

#include <random>

using namespace mfcat;

namespace {

Poly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, 3), c(-3, 3), n(0, 4);
  Poly p;
  for (int t = n(rng); t > 0; --t) p.add_term(Monomial(e(rng), e(rng), e(rng)), GaussRat(Rational(c(rng)), Rational(c(rng))));
  return p;
}

// Milnor number of a quasi-homogeneous isolated singularity: prod (h/w_i - 1).
Rational milnor_product(const WeightSystem& w) {
  Rational m = 1;
  for (int v : {w.a, w.b, w.c}) m *= Rational(w.h, v) - 1;
  m.canonicalize();
  return m;
}

}  // namespace

TEST_CASE("Gaussian rationals form a field") {
  GaussRat a(make_rational(1, 2), Rational(3)), b(Rational(-2), make_rational(5, 7)), c(Rational(4), Rational(-1));
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a * a.inverse() == GaussRat(1));
  CHECK(GaussRat::i() * GaussRat::i() == GaussRat(-1));
  CHECK_THROWS_AS(GaussRat().inverse(), std::domain_error);
}

TEST_CASE("rationals are canonical") {
  CHECK(make_rational(6, -4) == Rational(-3, 2));
  CHECK(make_rational(6, -4).get_str() == "-3/2");
  CHECK(parse_rational("10/4") == make_rational(5, 2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK(floor_int(make_rational(-1, 2)) == -1);
}

TEST_CASE("polynomial ring axioms on random inputs") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(parse_poly(a.str()) == a);
  }
}

TEST_CASE("parser") {
  Poly x = Poly::x(), y = Poly::y(), z = Poly::z();
  CHECK(parse_poly("x^3+y^4+z^2") == x.pow(3) + y.pow(4) + z.pow(2));
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("0").terms().empty());
  CHECK(parse_poly("(x+I*y)*(x-I*y)") == x * x + y * y);
  CHECK(parse_poly("x/2 - 3") == GaussRat(make_rational(1, 2)) * x - Poly(3L));
  CHECK_THROWS_AS(parse_poly("x+"), ParseError);
  CHECK_THROWS_AS(parse_poly("x/y"), ParseError);
  CHECK_THROWS_AS(parse_poly("w"), ParseError);
}

TEST_CASE("weighted degrees") {
  WeightSystem w(4, 3, 6, 12);
  CHECK(*weighted_degree(Poly::x(), w) == make_rational(2, 3));
  CHECK(*weighted_degree(Poly(1L), w) == 0);
  CHECK_FALSE(weighted_degree(Poly::x() + Poly::y(), w).has_value());
  CHECK_THROWS_AS(WeightSystem(2, 4, 6, 12), std::invalid_argument);
}

TEST_CASE("regularity") {
  auto a2 = regularity(WeightSystem(1, 1, 2, 3));
  CHECK(a2.is_regular);
  CHECK(a2.exponents == std::vector<int>{1, 2});
  CHECK(a2.epsilon == 1);
  auto e6 = regularity(WeightSystem(4, 3, 6, 12));
  CHECK(e6.exponents == std::vector<int>{1, 4, 5, 7, 8, 11});
  CHECK(e6.milnor_number == 6);
  CHECK(regularity(WeightSystem(10, 6, 15, 30)).epsilon == 1);
}

TEST_CASE("monomial basis agrees with a direct scan") {
  WeightSystem w(4, 3, 6, 12);
  auto got = monomial_basis(w, Rational(2));
  std::vector<Monomial> want{{3, 0, 0}, {0, 4, 0}, {0, 2, 1}, {0, 0, 2}};
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  CHECK(monomial_basis(w, Rational(0)) == std::vector<Monomial>{Monomial{}});
  CHECK(monomial_basis(w, make_rational(-2, 12)).empty());
  for (const auto& tp : all_types(8, 8)) {
    auto ap = ade_polynomial(tp.type, tp.b);
    for (int t = 0; t <= 2 * ap.w.h; ++t) {
      int count = 0;
      for (int i = 0; i <= 2 * ap.w.h; ++i)
        for (int j = 0; j <= 2 * ap.w.h; ++j)
          for (int k = 0; k <= 2 * ap.w.h; ++k) count += ap.w.a * i + ap.w.b * j + ap.w.c * k == t;
      CHECK(static_cast<int>(monomials_of_weight(ap.w, t).size()) == count);
    }
  }
}

TEST_CASE("Milnor numbers of every ADE type") {
  for (const auto& tp : all_types(8, 8)) {
    auto ap = ade_polynomial(tp.type, tp.b);
    CAPTURE(tp.str());
    CHECK(*weighted_degree(ap.f, ap.w) == 2);
    auto jd = milnor_poincare(ap.f, ap.w);
    CHECK(Rational(jd.total_dim) == milnor_product(ap.w));
    CHECK(jd.total_dim == tp.type.l);
    CHECK(regularity(ap.w).milnor_number == tp.type.l);
  }
  CHECK(milnor_poincare(parse_poly("x^2+y*z"), WeightSystem(1, 1, 1, 2)).total_dim == 1);
}

TEST_CASE("ADE polynomials") {
  auto d5 = ade_polynomial(ADEType::parse("D5"));
  CHECK(d5.f == parse_poly("x^2*y+y^4+z^2"));
  CHECK(d5.w == WeightSystem(3, 2, 4, 8));
  auto e7 = ade_polynomial(ADEType::parse("E7"));
  CHECK(e7.f == parse_poly("x^3+x*y^3+z^2"));
  CHECK(e7.w == WeightSystem(6, 4, 9, 18));
  auto a1 = ade_polynomial(ADEType::parse("A1"), 1);
  CHECK(a1.f == parse_poly("x^2+y*z"));
  CHECK(a1.w == WeightSystem(1, 1, 1, 2));
  CHECK_THROWS_AS(ADEType::parse("E9").validate(), std::invalid_argument);
  CHECK_THROWS_AS(ADEType::parse("D3").validate(), std::invalid_argument);
  CHECK_THROWS_AS(ADEType::parse("Q2"), std::invalid_argument);
}
