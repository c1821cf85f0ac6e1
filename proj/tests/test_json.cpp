#include "mfcat/json_io.hpp"

#include "mfcat/stability.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace mfcat;

namespace {

std::string golden_name(const TypeParam& tp) {
  std::string s = tp.type.str();
  if (tp.type.family == Family::A) s += "_b" + std::to_string(tp.b);
  return std::string(MFCAT_GOLDEN_DIR) + "/" + s + ".json";
}

}  // namespace

TEST_CASE("round trip through the mf schema") {
  for (const auto& tp : all_types(8, 8))
    for (int k = 1; k <= tp.type.l; ++k)
      for (long n : {0L, -3L}) {
        const GradedMF& g = build_object(tp.type, tp.b, k, n).gmf;
        std::string label;
        GradedMF back = graded_mf_from_json(nlohmann::json::parse(to_json(g, tp.str()).dump()), &label);
        CHECK(back == g);
        CHECK(label == tp.str());
      }
  std::mt19937_64 rng(2);
  GradedMF s = scramble(build_object(ADEType::parse("E6"), 1, 2, 0).gmf, rng);
  CHECK(graded_mf_from_json(to_json(s, "E6")) == s);
}

TEST_CASE("schema fields") {
  const GradedMF& g = build_object(ADEType::parse("A2"), 1, 1, 0).gmf;
  auto j = to_json(g, "A2(b=1)");
  CHECK(j["W"] == nlohmann::json({1, 1, 2, 3}));
  CHECK(j["size"] == 2);
  CHECK(j["phi"].size() == 2);
  CHECK(j["S"].size() == 4);
  CHECK(j["S"][0].get<std::string>().find('/') != std::string::npos);
}

TEST_CASE("malformed documents") {
  auto j = to_json(build_object(ADEType::parse("A2"), 1, 1, 0).gmf, "A2");
  auto bad = j;
  bad.erase("psi");
  CHECK_THROWS_AS(graded_mf_from_json(bad), std::invalid_argument);
  bad = j;
  bad["S"][0] = "1/0x";
  CHECK_THROWS_AS(graded_mf_from_json(bad), std::invalid_argument);
  bad = j;
  bad["phi"][0][0] = "x+*";
  CHECK_THROWS_AS(graded_mf_from_json(bad), std::invalid_argument);
  bad = j;
  bad["size"] = 3;
  CHECK_THROWS_AS(graded_mf_from_json(bad), std::invalid_argument);
  bad = j;
  bad["W"] = {1, 2};
  CHECK_THROWS_AS(graded_mf_from_json(bad), std::invalid_argument);
}

TEST_CASE("exports match the golden files") {
  for (const auto& tp : all_types(8, 8)) {
    auto a = nlohmann::json::array();
    for (int k = 1; k <= tp.type.l; ++k) a.push_back(to_json(build_object(tp.type, tp.b, k, 0).gmf, tp.str()));
    std::ifstream f(golden_name(tp), std::ios::binary);
    REQUIRE_MESSAGE(f.good(), golden_name(tp));
    std::stringstream ss;
    ss << f.rdbuf();
    CAPTURE(tp.str());
    CHECK(ss.str() == a.dump(1) + "\n");
  }
}
