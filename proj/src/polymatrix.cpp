#include "mfcat/polymatrix.hpp"

#include <stdexcept>

namespace mfcat {

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<Poly>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

PolyMatrix PolyMatrix::identity(int n, const Poly& d) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d;
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : a_)
    if (!p.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix r = *this;
  for (auto& p : r.a_) p = -p;
  return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Poly& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Poly& y = b(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  return r;
}

PolyMatrix operator*(const GaussRat& c, const PolyMatrix& a) {
  PolyMatrix r = a;
  for (auto& p : r.a_) p *= c;
  return r;
}

PolyMatrix PolyMatrix::block(int r0, int c0, int nr, int nc) const {
  PolyMatrix r(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
  return r;
}

void PolyMatrix::set_block(int r0, int c0, const PolyMatrix& m) {
  for (int i = 0; i < m.rows_; ++i)
    for (int j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

PolyMatrix PolyMatrix::diag(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
  r.set_block(0, 0, a);
  r.set_block(a.rows_, a.cols_, b);
  return r;
}

PolyMatrix PolyMatrix::minor(int row, int col) const {
  PolyMatrix r(rows_ - 1, cols_ - 1);
  for (int i = 0, ri = 0; i < rows_; ++i) {
    if (i == row) continue;
    for (int j = 0, rj = 0; j < cols_; ++j) {
      if (j == col) continue;
      r(ri, rj++) = (*this)(i, j);
    }
    ++ri;
  }
  return r;
}

}  // namespace mfcat
