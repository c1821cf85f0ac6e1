#include "mfcat/json_io.hpp"

#include "mfcat/parser.hpp"

#include <stdexcept>

namespace mfcat {

namespace {

nlohmann::json matrix_json(const PolyMatrix& m) {
  auto rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

PolyMatrix matrix_from(const nlohmann::json& j, int r, const char* name) {
  if (!j.is_array() || static_cast<int>(j.size()) != r)
    throw std::invalid_argument(std::string(name) + ": expected " + std::to_string(r) + " rows");
  PolyMatrix m(r, r);
  for (int i = 0; i < r; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != r)
      throw std::invalid_argument(std::string(name) + ": row " + std::to_string(i) + " has the wrong length");
    for (int c = 0; c < r; ++c) {
      if (!row[c].is_string()) throw std::invalid_argument(std::string(name) + ": entries must be strings");
      m(i, c) = parse_poly(row[c].get<std::string>());
    }
  }
  return m;
}

}  // namespace

nlohmann::json to_json(const GradedMF& g, const std::string& type_label) {
  nlohmann::json j;
  j["type"] = type_label;
  j["f"] = g.f().str();
  j["W"] = {g.w().a, g.w().b, g.w().c, g.w().h};
  j["size"] = g.size();
  j["phi"] = matrix_json(g.phi());
  j["psi"] = matrix_json(g.psi());
  auto s = nlohmann::json::array();
  for (const auto& q : g.S) s.push_back(q.get_str());
  j["S"] = std::move(s);
  return j;
}

GradedMF graded_mf_from_json(const nlohmann::json& j, std::string* type_label) {
  try {
    for (const char* key : {"f", "W", "size", "phi", "psi", "S"})
      if (!j.contains(key)) throw std::invalid_argument(std::string("missing key '") + key + "'");
    GradedMF g;
    auto W = j.at("W").get<std::vector<int>>();
    if (W.size() != 4) throw std::invalid_argument("W needs four entries");
    g.mf.w = WeightSystem(W[0], W[1], W[2], W[3]);
    g.mf.f = parse_poly(j.at("f").get<std::string>());
    int r = j.at("size").get<int>();
    if (r < 0) throw std::invalid_argument("negative size");
    g.mf.phi = matrix_from(j.at("phi"), r, "phi");
    g.mf.psi = matrix_from(j.at("psi"), r, "psi");
    auto S = j.at("S").get<std::vector<std::string>>();
    if (static_cast<int>(S.size()) != 2 * r) throw std::invalid_argument("S needs 2*size entries");
    for (const auto& s : S) {
      Rational q;
      if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
      q.canonicalize();
      g.S.push_back(q);
    }
    if (type_label) *type_label = j.value("type", std::string());
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("json: ") + e.what());
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("polynomial: ") + e.what());
  }
}

}  // namespace mfcat
