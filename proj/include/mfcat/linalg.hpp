#pragma once

// Sparse exact linear algebra over Q(i).

#include "mfcat/gauss.hpp"

#include <utility>
#include <vector>

namespace mfcat {

/// Sparse vector: (index, value) pairs, strictly increasing indices, no zero values.
using SparseVec = std::vector<std::pair<int, GaussRat>>;

SparseVec sparse_axpy(const SparseVec& x, const GaussRat& a, const SparseVec& y);  // x + a*y
SparseVec sparse_scale(const SparseVec& x, const GaussRat& a);
SparseVec sparse_from_dense(const std::vector<GaussRat>& d);
std::vector<GaussRat> sparse_to_dense(const SparseVec& v, int n);

/// Incremental row echelon form. Pivot rows are normalised (leading entry 1) and
/// each pivot column is the smallest index of its row, so reduction is one
/// left-to-right pass. With tracking enabled every stored row remembers which
/// combination of inserted vectors produced it.
class Echelon {
public:
  explicit Echelon(int dim, bool track = false);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  int inserted() const { return inserted_; }

  /// Returns true if v was independent of the rows so far.
  bool insert(const SparseVec& v);

  /// Residual of v after elimination; zero iff v is in the span.
  SparseVec reduce(const SparseVec& v) const;

  /// Coefficients c (indexed by insertion order) with v = sum c_j v_j, if v is
  /// in the span. Requires tracking.
  bool solve(const SparseVec& v, SparseVec& coeffs) const;

  /// Pivot columns in the order their rows were created.
  std::vector<int> pivot_columns() const;

private:
  int dim_;
  bool track_;
  int inserted_ = 0;
  std::vector<int> pivot_row_;  // column -> row index or -1
  std::vector<SparseVec> rows_;
  std::vector<SparseVec> combo_;

  SparseVec eliminate(const SparseVec& v, SparseVec* combo) const;
};

/// Matrix stored as sparse rows.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<SparseVec> data;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), data(r) {}
};

int rank(const SparseMatrix& m);
/// Basis of {x : m x = 0}, one vector per free column in increasing order.
std::vector<SparseVec> kernel(const SparseMatrix& m);

}  // namespace mfcat
