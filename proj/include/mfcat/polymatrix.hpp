#pragma once

#include "mfcat/poly.hpp"

#include <initializer_list>
#include <vector>

namespace mfcat {

class PolyMatrix {
public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  PolyMatrix(std::initializer_list<std::initializer_list<Poly>> rows);

  static PolyMatrix identity(int n, const Poly& diag = Poly(1L));

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Poly& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Poly& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const;
  PolyMatrix operator-() const;
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const GaussRat& c, const PolyMatrix& a);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  /// Block placement helpers.
  PolyMatrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const PolyMatrix& m);
  static PolyMatrix diag(const PolyMatrix& a, const PolyMatrix& b);

  /// Deletes one row and one column.
  PolyMatrix minor(int row, int col) const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Poly> a_;
};

}  // namespace mfcat
