#include "mfcat/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mfcat {

std::string DynkinQuiver::str() const {
  std::string out;
  for (const auto& [a, b] : arrows) {
    if (!out.empty()) out += ' ';
    out += std::to_string(a) + "->" + std::to_string(b);
  }
  return out;
}

DynkinQuiver principal_orientation(const ADEType& t, int b) {
  DynkinQuiver q;
  q.diagram = dynkin_diagram(t);
  auto pd = principal_decomposition(t, b);
  for (const auto& [u, v] : q.diagram.edges)
    q.arrows.emplace_back(pd.sigma(u) == 1 ? std::make_pair(u, v) : std::make_pair(v, u));
  return q;
}

DynkinQuiver oriented(const ADEType& t, unsigned long mask) {
  DynkinQuiver q;
  q.diagram = dynkin_diagram(t);
  for (std::size_t e = 0; e < q.diagram.edges.size(); ++e) {
    auto [u, v] = q.diagram.edges[e];
    q.arrows.emplace_back((mask >> e) & 1UL ? std::make_pair(v, u) : std::make_pair(u, v));
  }
  return q;
}

DynkinQuiver random_orientation(const ADEType& t, std::mt19937_64& rng) {
  return oriented(t, static_cast<unsigned long>(rng()));
}

DynkinQuiver parse_orientation(const ADEType& t, int b, const std::string& spec) {
  if (spec == "principal") return principal_orientation(t, b);
  DynkinQuiver q;
  q.diagram = dynkin_diagram(t);
  std::set<std::pair<int, int>> edges;
  for (auto [u, v] : q.diagram.edges) edges.insert({std::min(u, v), std::max(u, v)});
  std::stringstream ss(spec);
  std::string item;
  std::set<std::pair<int, int>> seen;
  while (std::getline(ss, item, ',')) {
    auto pos = item.find("->");
    if (pos == std::string::npos) throw std::invalid_argument("orientation: expected 'a->b', got '" + item + "'");
    int a = 0, c = 0;
    try {
      a = std::stoi(item.substr(0, pos));
      c = std::stoi(item.substr(pos + 2));
    } catch (const std::exception&) {
      throw std::invalid_argument("orientation: bad vertex in '" + item + "'");
    }
    std::pair<int, int> key{std::min(a, c), std::max(a, c)};
    if (!edges.count(key)) throw std::invalid_argument("orientation: " + item + " is not an edge");
    if (!seen.insert(key).second) throw std::invalid_argument("orientation: edge given twice");
    q.arrows.emplace_back(a, c);
  }
  if (seen.size() != edges.size()) throw std::invalid_argument("orientation: every edge needs a direction");
  return q;
}

PathAlgebraSummary path_hom_dims(const DynkinQuiver& q) {
  int l = q.diagram.l();
  PathAlgebraSummary s;
  s.hom_dims.assign(l + 1, std::vector<int>(l + 1, 0));
  std::vector<std::vector<int>> out(l + 1);
  for (auto [a, b] : q.arrows) out[a].push_back(b);
  // Paths from each source by depth-first enumeration (the quiver is a tree).
  for (int k = 1; k <= l; ++k) {
    std::vector<int> stack{k};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++s.hom_dims[k][v];
      for (int w : out[v]) stack.push_back(w);
    }
  }
  for (int k = 1; k <= l; ++k)
    for (int kp = 1; kp <= l; ++kp) s.dim += s.hom_dims[k][kp];
  return s;
}

std::vector<std::vector<int>> cartan_matrix(const DynkinDiagram& d) {
  int l = d.l();
  std::vector<std::vector<int>> c(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) c[i][i] = 2;
  for (auto [u, v] : d.edges) c[u - 1][v - 1] = c[v - 1][u - 1] = -1;
  return c;
}

RootSystem positive_roots(const ADEType& t) {
  auto C = cartan_matrix(dynkin_diagram(t));
  int l = t.l;
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < l; ++i) {
    std::vector<int> a(l, 0);
    a[i] = 1;
    layer.push_back(a);
    found.insert(a);
  }
  RootSystem rs;
  while (!layer.empty()) {
    rs.positive.insert(rs.positive.end(), layer.begin(), layer.end());
    std::vector<std::vector<int>> next;
    for (const auto& a : layer)
      for (int i = 0; i < l; ++i) {
        // alpha + alpha_i is a root iff p - <alpha, alpha_i^vee> > 0, p the length of the downward string.
        int pairing = 0;
        for (int j = 0; j < l; ++j) pairing += a[j] * C[j][i];
        int p = 0;
        std::vector<int> down = a;
        while (true) {
          --down[i];
          if (!found.count(down)) break;
          ++p;
        }
        if (p - pairing <= 0) continue;
        std::vector<int> up = a;
        ++up[i];
        if (found.insert(up).second) next.push_back(up);
      }
    layer = std::move(next);
  }
  rs.highest = rs.positive.back();
  return rs;
}

}  // namespace mfcat
