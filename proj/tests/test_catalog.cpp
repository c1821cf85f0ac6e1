#include "mfcat/catalog.hpp"

#include <doctest.h>

using namespace mfcat;

TEST_CASE("Dynkin diagrams are trees with the right branch vertex") {
  for (const auto& tp : all_types(8, 8)) {
    auto d = dynkin_diagram(tp.type);
    int l = tp.type.l;
    CHECK(static_cast<int>(d.edges.size()) == l - 1);
    auto dist = d.distances();
    for (int k = 1; k <= l; ++k)
      for (int kp = 1; kp <= l; ++kp) CHECK(dist[k][kp] >= 0);
    int branch = 0;
    for (int k = 1; k <= l; ++k)
      if (d.neighbors(k).size() == 3) branch = k;
    switch (tp.type.family) {
      case Family::A: CHECK(branch == 0); break;
      case Family::D: CHECK(branch == l - 2); break;
      case Family::E: CHECK(branch == (l == 6 ? 2 : l == 7 ? 3 : 5)); break;
    }
  }
  ADEType e6 = ADEType::parse("E6"), d4 = ADEType::parse("D4");
  CHECK(dynkin_distance(e6, 3, 3) == 0);
  CHECK(dynkin_distance(e6, 5, 6) == 4);
  CHECK(dynkin_distance(d4, 3, 4) == 2);
  auto nb = dynkin_diagram(ADEType::parse("E8")).neighbors(5);
  std::sort(nb.begin(), nb.end());
  CHECK(nb == std::vector<int>{4, 6, 7});
}

TEST_CASE("principal decomposition") {
  CHECK(principal_decomposition(ADEType::parse("E7")).base == 3);
  auto e8 = principal_decomposition(ADEType::parse("E8"));
  CHECK(e8.base == 5);
  CHECK(e8.sigma(5) == 2);
  for (int k : {4, 6, 7}) CHECK(e8.sigma(k) == 1);
  auto a3 = principal_decomposition(ADEType::parse("A3"), 2);
  CHECK(a3.pi1 == std::vector<int>{1, 3});
  CHECK(a3.pi2 == std::vector<int>{2});
}

TEST_CASE("every catalog object is a graded factorization of size 2 nu") {
  for (const auto& tp : all_types(8, 8))
    for (int k = 1; k <= tp.type.l; ++k)
      for (long n : {-1L, 0L, 3L}) {
        CAPTURE(tp.str());
        CAPTURE(k);
        CatalogObject o = build_object(tp.type, tp.b, k, n);
        CHECK(verify_mf(o.gmf.mf).ok);
        CHECK(verify_grading(o.gmf).ok);
        CHECK(o.gmf.size() == 2 * o.nu);
        CHECK(o.phase() == make_rational(2 * n + o.sigma, tp.type.h()));
        CHECK(o.phase() == object_phase(tp.type, tp.b, k, n));
      }
}

TEST_CASE("catalog spot checks") {
  auto e62 = build_object(ADEType::parse("E6"), 1, 2, 0);
  CHECK(e62.gmf.size() == 6);
  std::vector<Rational> expect;
  for (int q : {0, 2, 4})
    for (int s : {1, -1})
      for (int rep = 0; rep < 2; ++rep) expect.push_back(make_rational(s * q, 12) + make_rational(2, 12));
  std::sort(expect.begin(), expect.end());
  CHECK(s_multiset(e62.gmf) == expect);
  auto a4 = build_object(ADEType::parse("A4"), 1, 3, 0);
  CHECK(a4.gmf.size() == 2);
  CHECK_THROWS_AS(build_object(ADEType::parse("A4"), 1, 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_object(ADEType::parse("A4"), 6, 1, 0), std::invalid_argument);
}

TEST_CASE("phase windows") {
  ADEType e8 = ADEType::parse("E8"), a2 = ADEType::parse("A2");
  CHECK(enumerate(e8, 1, {Rational(0), Rational(1)}).size() == 120);
  CHECK(enumerate(a2, 1, {Rational(0), Rational(2)}).size() == 6);
  CHECK(enumerate(a2, 1, {Rational(1), Rational(1)}).empty());
  // Brute-force count of (k, n) with (2n + sigma)/h in (0, 1].
  for (const auto& tp : all_types(8, 8)) {
    int h = tp.type.h(), count = 0;
    for (int k = 1; k <= tp.type.l; ++k) {
      int sigma = principal_decomposition(tp.type, tp.b).sigma(k);
      for (int n = -h; n <= h; ++n) count += 2 * n + sigma > 0 && 2 * n + sigma <= h;
    }
    CHECK(static_cast<int>(enumerate(tp.type, tp.b, {Rational(0), Rational(1)}).size()) == count);
  }
  long n = 0;
  CHECK(n_for_phase(e8, 1, 5, make_rational(4, 30), n));
  CHECK(n == 1);
  CHECK_FALSE(n_for_phase(e8, 1, 5, make_rational(3, 30), n));
}

TEST_CASE("shift partners") {
  for (const auto& tp : all_types(8, 8))
    for (int k = 1; k <= tp.type.l; ++k) CHECK(shift_partner(tp.type, shift_partner(tp.type, k)) == k);
  CHECK(shift_partner(ADEType::parse("E6"), 1) == 1);
  CHECK(shift_partner(ADEType::parse("E6"), 2) == 2);
}
