#pragma once

// Central charge Z = Tr(exp(i pi S)), the phase slicing, HN filtrations and
// exceptional collections.

#include "mfcat/homcat.hpp"
#include "mfcat/quiver.hpp"

#include <complex>
#include <optional>
#include <random>
#include <vector>

namespace mfcat {

/// Closed rational interval.
struct Interval {
  Rational lo, hi;
};

/// Enclosure of cos(pi q) from a rational enclosure of pi and a Taylor bound.
Interval cos_pi(const Rational& q);

struct CentralCharge {
  std::complex<double> value;
  Rational phase;                 // trace(S) / 2r
  std::vector<Rational> offsets;  // S_I - phase; mass = sum of cos(pi * offset)
  bool phase_pure = false;        // offsets symmetric under negation, so Z = mass * exp(i pi phase)
  double mass = 0;
  Interval mass_bounds;
  bool mass_positive() const { return mass_bounds.lo > 0; }
};

CentralCharge central_charge(const GradedMF& g);

/// Vertex and shift of the catalog object isomorphic to an indecomposable g, if any.
struct CatalogId {
  int k = 0;
  long n = 0;
  friend auto operator<=>(const CatalogId&, const CatalogId&) = default;
};
std::optional<CatalogId> identify(const ADEType& t, int b, const GradedMF& g);

struct HNPiece {
  Rational phase;
  std::vector<GradedMF> summands;  // indecomposable, all of this phase
  GradedMF factor;                 // their direct sum
};

struct HNTriangle {
  GradedMF prev;  // M_{j-1}
  GradedMF cur;   // M_j = M_{j-1} + N_j
  Morphism incl;  // M_{j-1} -> M_j
  Morphism proj;  // M_j -> N_j
};

struct HNFiltration {
  GradedMF object;
  std::vector<HNPiece> pieces;  // strictly decreasing phase
  std::vector<HNTriangle> triangles;
};

/// g conjugated by random graded elementary automorphisms of P0 and P1; isomorphic to g.
GradedMF scramble(const GradedMF& g, std::mt19937_64& rng, int steps = 12);

/// Full decomposition into indecomposables by repeated idempotent splitting.
std::vector<GradedMF> decompose(const GradedMF& g, std::mt19937_64& rng);
HNFiltration hn_filtration(const GradedMF& g, std::mt19937_64& rng);

struct StabilityOptions {
  int random_sums = 100;
  int max_summands = 4;
  unsigned long seed = 1;
};

/// Axioms (1)-(3) on all objects of the window and (4) on random direct sums.
CheckReport check_stability_axioms(const ADEType& t, int b, const PhaseWindow& w, const StabilityOptions& opt = {});

std::vector<CatalogObject> heart_objects(const ADEType& t, int b);

/// dim Hom(M^k_0, T N) = 0 for every k and heart object N, directly and through Serre duality.
CheckReport projectivity_check(const ADEType& t, int b);

struct ExceptionalCollection {
  std::vector<long> n;             // n[k], 1-based
  std::vector<int> order;          // vertices by nondecreasing phase
  std::vector<CatalogObject> objects;  // in that order
};

ExceptionalCollection exceptional_collection(const ADEType& t, int b, const DynkinQuiver& q);
CheckReport strong_exceptionality_check(const ADEType& t, int b, const DynkinQuiver& q);

}  // namespace mfcat
