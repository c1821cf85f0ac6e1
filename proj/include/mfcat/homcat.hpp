#pragma once

// Degree-zero morphisms in the graded homotopy category: cocycles modulo
// null-homotopic maps, computed by exact linear algebra.

#include "mfcat/catalog.hpp"
#include "mfcat/linalg.hpp"
#include "mfcat/mf.hpp"

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace mfcat {

/// Coefficient layout of a block-diagonal (even) or off-diagonal (odd) map.
struct EntryLayout {
  struct Slot {
    int block = 0;  // 0: P0 block, 1: P1 block
    int i = 0, j = 0;
    int offset = 0;
    std::vector<Monomial> monos;
  };
  int rows = 0, cols = 0;
  int size = 0;
  std::vector<Slot> slots;
  std::vector<int> slot_of;  // (block, i, j) -> slot index or -1

  int find(int block, int i, int j) const { return slot_of[(block * rows + i) * cols + j]; }
};

class HomSpace {
public:
  /// Throws std::invalid_argument when (f, W) differ.
  HomSpace(const GradedMF& src, const GradedMF& dst);

  const GradedMF& src() const { return src_; }
  const GradedMF& dst() const { return dst_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  /// Cocycle witnesses whose classes form a basis.
  const std::vector<Morphism>& basis() const { return basis_; }

  /// Coordinates of the class of a cocycle; throws std::invalid_argument otherwise.
  std::vector<GaussRat> coordinates(const Morphism& m) const;
  Morphism from_coordinates(const std::vector<GaussRat>& c) const;
  /// H with Q'H + HQ = m when m is null-homotopic.
  std::optional<Homotopy> null_homotopy(const Morphism& m) const;

private:
  GradedMF src_, dst_;
  EntryLayout mor_, hot_;
  std::vector<Morphism> basis_;
  std::vector<int> basis_insert_;  // insertion index of each basis vector
  int n_boundary_ = 0;             // homotopy unit vectors inserted first
  std::shared_ptr<Echelon> ech_;   // tracked: boundary images, then basis

  SparseVec to_vector(const Morphism& m) const;
  bool is_cocycle(const Morphism& m) const;
  void decompose(const Morphism& m, std::vector<GaussRat>* coords, Homotopy* h) const;
};

/// dim Hom(src, dst) without lifting a basis; memoised up to a common shift of S.
int hom_dim(const GradedMF& src, const GradedMF& dst);
/// Number of memoised dimensions (diagnostics).
std::size_t hom_cache_size();

/// Homotopy degrees: h0 entries S'(P1') - S(P0) - 1, h1 entries S'(P0') - S(P1) - 1.
Report verify_homotopy(const GradedMF& src, const GradedMF& dst, const Homotopy& h);

/// A class in a Hom space, held as coordinates over its basis.
struct HomClass {
  std::shared_ptr<const HomSpace> space;
  std::vector<GaussRat> coords;

  Morphism witness() const { return space->from_coordinates(coords); }
  bool is_zero() const;
};

/// g o f as a class of target; throws std::invalid_argument on endpoint mismatch.
HomClass compose(const HomClass& f, const HomClass& g, const std::shared_ptr<const HomSpace>& target);

/// Multiset of integers c with multiplicity.
using Multiset = std::map<int, int>;
std::string multiset_str(const Multiset& m);  // "1 3 5^2 7 9"
int multiset_size(const Multiset& m);

/// The multiset C(k, k'): c = h * (phase(tau^n M^{k'}) - phase(M^k)) counted by dim Hom.
/// Scans two extra steps beyond [0, h-2] and throws std::logic_error if anything lives there.
Multiset hom_multiset(const ADEType& t, int b, int k, int kp);
/// dim Hom(M^k_0, M^{k'}_{n}) with c = 2n + sigma' - sigma; zero off the lattice.
int hom_dim_at(const ADEType& t, int b, int k, int kp, int c);

// Finite-dimensional algebras given by structure constants.

struct FiniteAlgebra {
  int dim = 0;
  /// mult[a][b] = coordinates of e_a * e_b.
  std::vector<std::vector<std::vector<GaussRat>>> mult;
  std::vector<GaussRat> one;

  std::vector<GaussRat> product(const std::vector<GaussRat>& x, const std::vector<GaussRat>& y) const;
  /// Matrix of left multiplication, column j = x * e_j.
  std::vector<std::vector<GaussRat>> left_matrix(const std::vector<GaussRat>& x) const;
  bool is_associative() const;
  /// Kernel of the trace form Tr(L_{xy}).
  std::vector<std::vector<GaussRat>> radical() const;
  bool is_local() const;
  bool is_idempotent(const std::vector<GaussRat>& e) const;
};

/// A primitive idempotent of a nonzero algebra, found by Fitting splittings of
/// elements with eigenvalues in Q(i). Throws std::runtime_error if none splits.
std::vector<GaussRat> primitive_idempotent(const FiniteAlgebra& a, std::mt19937_64& rng);

struct EndAlgebra {
  std::shared_ptr<const HomSpace> space;
  FiniteAlgebra algebra;
  int dim() const { return algebra.dim; }
};

/// Product e_a * e_b is the class of e_a o e_b (apply e_b first).
EndAlgebra end_algebra(const GradedMF& g);

struct Splitting {
  GradedMF summand;
  Morphism inclusion;   // summand -> g
  Morphism projection;  // g -> summand; projection o inclusion = id strictly
};

/// Image of an idempotent class of End(g). g must be reduced.
Splitting split_idempotent(const GradedMF& g, const EndAlgebra& end, const std::vector<GaussRat>& e);

bool is_indecomposable(const GradedMF& g);

/// Jacobi annihilation: for Phi in Hom(src, dst) and variable v, the homotopy
/// (d_v psi' phi0, d_v phi' phi1) null-homotopes (d_v f) Phi into tau^{h - w_v} dst.
Homotopy jacobi_homotopy(const GradedMF& dst, const Morphism& phi, int v);
Report jacobi_annihilation_check(const GradedMF& src, const GradedMF& dst, const Morphism& phi, int v);

struct CheckReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void fail(std::string s) { failures.push_back(std::move(s)); }
  void merge(const CheckReport& o);
};

/// AR-triangle of M^k_n: Hom(S^{-1}X, X) = 1, cone gradings, End(cone) and Hom(cone, neighbours).
CheckReport ar_triangle_check(const ADEType& t, int b, int k, long n);
/// dim Hom(X, Y) = dim Hom(Y, S X) over the window, plus the multiset symmetry of C.
CheckReport serre_duality_check(const ADEType& t, int b, const PhaseWindow& w);
CheckReport irreducible_check(const ADEType& t, int b, const PhaseWindow& w);
/// The coproduct recursion for C over all (k', k).
CheckReport coproduct_recursion_check(const ADEType& t, int b);
/// C(k, k') = C(k', k) and the range/endpoint property of every multiset.
CheckReport multiset_shape_check(const ADEType& t, int b);

/// Serre partner k^S of vertex k (the vertex of S(M^k)).
int serre_partner(const ADEType& t, int k);

}  // namespace mfcat
