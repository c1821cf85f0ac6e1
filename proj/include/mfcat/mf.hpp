#pragma once

// Matrix factorizations Q = [[0, phi], [psi, 0]] with grading matrices S.

#include "mfcat/polymatrix.hpp"
#include "mfcat/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mfcat {

struct MatrixFactorization {
  Poly f;
  WeightSystem w;
  PolyMatrix phi;  // P1 -> P0
  PolyMatrix psi;  // P0 -> P1

  int size() const { return phi.rows(); }
  /// The 2r x 2r odd matrix [[0, phi], [psi, 0]].
  PolyMatrix Q() const;
};

/// Grading: S[0..r) are the P0 slots, S[r..2r) the P1 slots.
struct GradedMF {
  MatrixFactorization mf;
  std::vector<Rational> S;

  int size() const { return mf.size(); }
  const Poly& f() const { return mf.f; }
  const WeightSystem& w() const { return mf.w; }
  const PolyMatrix& phi() const { return mf.phi; }
  const PolyMatrix& psi() const { return mf.psi; }
  /// trace(S) / 2r; zero for the size-0 object.
  Rational phase() const;
  friend bool operator==(const GradedMF& a, const GradedMF& b) {
    return a.mf.f == b.mf.f && a.mf.w == b.mf.w && a.mf.phi == b.mf.phi && a.mf.psi == b.mf.psi && a.S == b.S;
  }
};

/// Block-diagonal morphism (phi0 on P0, phi1 on P1), target rows by source columns.
struct Morphism {
  PolyMatrix phi0;
  PolyMatrix phi1;

  static Morphism zero(int dst_size, int src_size);
  static Morphism identity(int size);
  bool is_zero() const { return phi0.is_zero() && phi1.is_zero(); }
  friend Morphism operator+(const Morphism& a, const Morphism& b) { return {a.phi0 + b.phi0, a.phi1 + b.phi1}; }
  friend Morphism operator*(const GaussRat& c, const Morphism& a) { return {c * a.phi0, c * a.phi1}; }
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// g o f for f: X -> Y, g: Y -> Z (strict composition of witnesses).
Morphism compose_strict(const Morphism& f, const Morphism& g);

/// Odd map (h0: P0 -> P1', h1: P1 -> P0') used as a homotopy.
struct Homotopy {
  PolyMatrix h0;
  PolyMatrix h1;
};

/// Q'H + HQ as a block-diagonal morphism.
Morphism boundary(const GradedMF& src, const GradedMF& dst, const Homotopy& h);

struct Report {
  bool ok = true;
  std::string message;
  static Report pass() { return {}; }
  static Report fail(std::string m) { return {false, std::move(m)}; }
  explicit operator bool() const { return ok; }
};

Report verify_mf(const MatrixFactorization& m);
Report verify_grading(const GradedMF& g);
/// Q' Phi = Phi Q with entry degrees S'_I - S_J.
Report verify_morphism(const GradedMF& src, const GradedMF& dst, const Morphism& phi);

GradedMF tau(const GradedMF& g, long n);
GradedMF shift_T(const GradedMF& g);
/// Inverse of shift_T.
GradedMF shift_T_inv(const GradedMF& g);
/// Serre functor T tau^{-1} and its inverse tau T^{-1}.
GradedMF serre(const GradedMF& g);
GradedMF serre_inv(const GradedMF& g);

/// Mapping cone of a cocycle; throws std::invalid_argument if phi is not one.
GradedMF cone(const GradedMF& src, const GradedMF& dst, const Morphism& phi);
GradedMF direct_sum(const GradedMF& a, const GradedMF& b);

/// Reduction together with the strict inverse homotopy equivalences.
struct Reduction {
  GradedMF result;
  Morphism to_result;    // input -> result
  Morphism from_result;  // result -> input
};

/// Strips trivial summands by clearing unit entries (row-major first unit found).
GradedMF reduce(const GradedMF& g);
Reduction reduce_with_maps(const GradedMF& g);
bool is_reduced(const MatrixFactorization& m);

struct PhaseSplit {
  std::vector<Rational> traceless;
  Rational phase;
};
PhaseSplit phase_split(const std::vector<Rational>& S);

/// Trace-zero solution of deg Q_IJ = 1 + S_I - S_J; the full solution set is this
/// plus any constant. nullopt if an entry is inhomogeneous, the system is
/// inconsistent, or the constraint graph is disconnected.
std::optional<std::vector<Rational>> solve_grading(const MatrixFactorization& m);

/// Sorted multiset of S entries.
std::vector<Rational> s_multiset(const GradedMF& g);

/// Size-0 object for (f, w).
GradedMF zero_object(const Poly& f, const WeightSystem& w);

}  // namespace mfcat
