#pragma once

// Dynkin quivers, path counting and positive roots.

#include "mfcat/catalog.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace mfcat {

struct DynkinQuiver {
  DynkinDiagram diagram;
  std::vector<std::pair<int, int>> arrows;  // (tail, head), one per edge

  std::string str() const;  // "1->2 3->2"
};

/// Arrows from the odd-distance class to the even-distance class.
DynkinQuiver principal_orientation(const ADEType& t, int b = 1);
/// Edge e is reversed when bit e of mask is set (edges in diagram order).
DynkinQuiver oriented(const ADEType& t, unsigned long mask);
DynkinQuiver random_orientation(const ADEType& t, std::mt19937_64& rng);
/// Parses "principal" or a list like "1->2,3->2"; throws std::invalid_argument.
DynkinQuiver parse_orientation(const ADEType& t, int b, const std::string& spec);

struct PathAlgebraSummary {
  int dim = 0;
  /// hom_dims[k][k'] = number of paths from k to k' (1-based, row and column 0 unused).
  std::vector<std::vector<int>> hom_dims;
};
PathAlgebraSummary path_hom_dims(const DynkinQuiver& q);

struct RootSystem {
  std::vector<std::vector<int>> positive;  // coefficient vectors over simple roots, by height
  std::vector<int> highest;
  int count() const { return static_cast<int>(positive.size()); }
};

/// Cartan matrix of the diagram (0-based).
std::vector<std::vector<int>> cartan_matrix(const DynkinDiagram& d);
/// Closure of the simple roots under adding simple roots (root strings).
RootSystem positive_roots(const ADEType& t);

}  // namespace mfcat
