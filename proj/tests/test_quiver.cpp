#include "mfcat/quiver.hpp"

#include "mfcat/homcat.hpp"

#include <doctest.h>

#include <set>

using namespace mfcat;

namespace {

// Positive roots as positive integer vectors with q(a) = a^T C a / 2 = 1, by scanning boxes.
int roots_by_quadratic_form(const ADEType& t, int bound) {
  auto C = cartan_matrix(dynkin_diagram(t));
  int l = t.l, count = 0;
  std::vector<int> a(l, 0);
  while (true) {
    int i = 0;
    while (i < l && a[i] == bound) a[i++] = 0;
    if (i == l) break;
    ++a[i];
    int q = 0;
    for (int r = 0; r < l; ++r)
      for (int c = 0; c < l; ++c) q += a[r] * C[r][c] * a[c];
    count += q == 2;
  }
  return count;
}

}  // namespace

TEST_CASE("positive roots") {
  for (const auto& tp : all_types(8, 8)) {
    const ADEType& t = tp.type;
    if (tp.b != 1) continue;
    RootSystem rs = positive_roots(t);
    CAPTURE(t.str());
    CHECK(rs.count() == t.l * t.h() / 2);
    int bound = t.family == Family::A ? 1 : t.family == Family::D ? 2 : t.l == 6 ? 3 : t.l == 7 ? 4 : 6;
    CHECK(rs.count() == roots_by_quadratic_form(t, bound));
    for (int k = 1; k <= t.l; ++k) CHECK(grading_data(t, 1, k).nu == rs.highest[k - 1]);
  }
  CHECK(positive_roots(ADEType::parse("E8")).count() == 120);
  CHECK(positive_roots(ADEType::parse("E8")).highest == std::vector<int>{2, 3, 4, 5, 6, 3, 4, 2});
  CHECK(positive_roots(ADEType::parse("D4")).count() == 12);
}

TEST_CASE("principal orientation") {
  auto e7 = principal_orientation(ADEType::parse("E7"));
  for (auto [a, b] : e7.arrows)
    if (a == 3 || b == 3) CHECK(b == 3);
  auto a3 = principal_orientation(ADEType::parse("A3"), 2);
  std::set<std::pair<int, int>> arrows(a3.arrows.begin(), a3.arrows.end());
  CHECK(arrows == std::set<std::pair<int, int>>{{1, 2}, {3, 2}});
  auto d4 = principal_orientation(ADEType::parse("D4"));
  for (auto [a, b] : d4.arrows) CHECK(b == 2);
}

TEST_CASE("path counts") {
  ADEType a2 = ADEType::parse("A2");
  CHECK(path_hom_dims(parse_orientation(a2, 1, "1->2")).dim == 3);
  for (int l = 1; l <= 8; ++l) {
    ADEType t{Family::A, l};
    std::string spec;
    for (int k = 1; k < l; ++k) spec += (k > 1 ? "," : "") + std::to_string(k) + "->" + std::to_string(k + 1);
    DynkinQuiver q = l == 1 ? oriented(t, 0) : parse_orientation(t, 1, spec);
    auto s = path_hom_dims(q);
    CHECK(s.dim == l * (l + 1) / 2);
    int sum = 0;
    for (int k = 1; k <= l; ++k) {
      CHECK(s.hom_dims[k][k] == 1);
      for (int kp = 1; kp <= l; ++kp) sum += s.hom_dims[k][kp];
    }
    CHECK(sum == s.dim);
  }
}

TEST_CASE("principal path counts equal Hom dimensions between the M^k_0") {
  for (const char* type : {"A4", "D5", "E6"}) {
    ADEType t = ADEType::parse(type);
    auto s = path_hom_dims(principal_orientation(t));
    for (int k = 1; k <= t.l; ++k)
      for (int kp = 1; kp <= t.l; ++kp)
        CHECK(s.hom_dims[k][kp] == hom_dim(build_object(t, 1, k, 0).gmf, build_object(t, 1, kp, 0).gmf));
  }
}

TEST_CASE("orientation parsing") {
  ADEType a3 = ADEType::parse("A3");
  CHECK(parse_orientation(a3, 1, "1->2,3->2").str() == "1->2 3->2");
  CHECK_THROWS_AS(parse_orientation(a3, 1, "1->3,2->3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_orientation(a3, 1, "1->2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_orientation(a3, 1, "1-2,2->3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_orientation(a3, 1, "1->2,2->1"), std::invalid_argument);
}
