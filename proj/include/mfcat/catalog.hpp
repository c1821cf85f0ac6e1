#pragma once

// ADE ground truth: Dynkin diagrams, indecomposable matrix factorizations and
// their gradings.

#include "mfcat/mf.hpp"
#include "mfcat/weights.hpp"

#include <utility>
#include <vector>

namespace mfcat {

struct DynkinDiagram {
  ADEType type;
  std::vector<std::pair<int, int>> edges;  // vertices are 1..l

  int l() const { return type.l; }
  std::vector<int> neighbors(int k) const;
  /// All-pairs distances; index [k][k'] with 1-based vertices.
  std::vector<std::vector<int>> distances() const;
};

DynkinDiagram dynkin_diagram(const ADEType& t);
int dynkin_distance(const ADEType& t, int k, int kp);

struct PrincipalDecomposition {
  int base = 1;
  std::vector<int> pi1;  // odd distance to base
  std::vector<int> pi2;  // even distance to base
  int sigma(int k) const;
};

/// b is used only for A_l, where the base vertex is b.
PrincipalDecomposition principal_decomposition(const ADEType& t, int b = 1);

/// Vertex k' with T(M^k) isomorphic to M^{k'} (ungraded); also the Serre partner k^S.
int shift_partner(const ADEType& t, int k);

/// The data (q; qbar) of the grading, times h, as listed for vertex k.
struct GradingData {
  int nu = 1;
  std::vector<int> q;     // h * q_j
  std::vector<int> qbar;  // h * qbar_j
};
GradingData grading_data(const ADEType& t, int b, int k);

struct CatalogObject {
  ADEType type;
  int b = 1;
  int k = 1;
  long n = 0;
  GradedMF gmf;
  int nu = 1;
  int sigma = 1;

  Rational phase() const { return gmf.phase(); }
};

/// Matrix factorization of vertex k with trace-zero grading, cached per (type, b).
const GradedMF& base_object(const ADEType& t, int b, int k);

/// Throws std::invalid_argument on an invalid vertex or parameter.
CatalogObject build_object(const ADEType& t, int b, int k, long n);

/// Half-open phase window (lo, hi].
struct PhaseWindow {
  Rational lo;
  Rational hi;
  bool contains(const Rational& p) const { return lo < p && p <= hi; }
};

/// All (k, n) with phase in the window, sorted by (phase, k).
std::vector<CatalogObject> enumerate(const ADEType& t, int b, const PhaseWindow& w);

/// Phase (2n + sigma)/h of (k, n).
Rational object_phase(const ADEType& t, int b, int k, long n);
/// n with object_phase(k, n) = p, if p is on the lattice of k.
bool n_for_phase(const ADEType& t, int b, int k, const Rational& p, long& n);

/// Every type used by the acceptance scope: A1..A8 (all b), D4..D8, E6..E8.
struct TypeParam {
  ADEType type;
  int b = 1;
  std::string str() const;
};
std::vector<TypeParam> all_types(int max_a = 8, int max_d = 8);

}  // namespace mfcat
