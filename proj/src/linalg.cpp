#include "mfcat/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mfcat {

SparseVec sparse_axpy(const SparseVec& x, const GaussRat& a, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      GaussRat v = a * y[j].second;
      if (!v.is_zero()) out.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      GaussRat v = x[i].second + a * y[j].second;
      if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sparse_scale(const SparseVec& x, const GaussRat& a) {
  if (a.is_zero()) return {};
  SparseVec out = x;
  for (auto& e : out) e.second *= a;
  return out;
}

SparseVec sparse_from_dense(const std::vector<GaussRat>& d) {
  SparseVec out;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!d[i].is_zero()) out.emplace_back(static_cast<int>(i), d[i]);
  return out;
}

std::vector<GaussRat> sparse_to_dense(const SparseVec& v, int n) {
  std::vector<GaussRat> d(n);
  for (const auto& [i, x] : v) d.at(i) = x;
  return d;
}

Echelon::Echelon(int dim, bool track) : dim_(dim), track_(track), pivot_row_(dim, -1) {}

SparseVec Echelon::eliminate(const SparseVec& v, SparseVec* combo) const {
  std::map<int, GaussRat> work;
  for (const auto& [i, x] : v) {
    if (i < 0 || i >= dim_) throw std::out_of_range("echelon: index out of range");
    work.emplace(i, x);
  }
  std::map<int, GaussRat> acc;
  auto it = work.begin();
  while (it != work.end()) {
    int col = it->first;
    int r = pivot_row_[col];
    if (r < 0) {
      ++it;
      continue;
    }
    GaussRat a = it->second;
    for (const auto& [c, x] : rows_[r]) {
      auto [w, inserted] = work.try_emplace(c);
      w->second -= a * x;
      if (w->second.is_zero()) work.erase(w);
    }
    if (combo) {
      for (const auto& [c, x] : combo_[r]) {
        auto [w, inserted] = acc.try_emplace(c);
        w->second += a * x;
        if (w->second.is_zero()) acc.erase(w);
      }
    }
    it = work.upper_bound(col);
  }
  if (combo) combo->assign(acc.begin(), acc.end());
  return {work.begin(), work.end()};
}

bool Echelon::insert(const SparseVec& v) {
  int idx = inserted_++;
  SparseVec combo;
  SparseVec w = eliminate(v, track_ ? &combo : nullptr);
  if (w.empty()) return false;
  GaussRat inv = w.front().second.inverse();
  if (!inv.is_one()) w = sparse_scale(w, inv);
  pivot_row_[w.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(w));
  if (track_) {
    // new row = (v_idx - combo) / lead
    SparseVec c = sparse_axpy(SparseVec{{idx, GaussRat(1)}}, GaussRat(-1), combo);
    combo_.push_back(sparse_scale(c, inv));
  }
  return true;
}

SparseVec Echelon::reduce(const SparseVec& v) const { return eliminate(v, nullptr); }

bool Echelon::solve(const SparseVec& v, SparseVec& coeffs) const {
  if (!track_) throw std::logic_error("echelon: solve requires tracking");
  SparseVec w = eliminate(v, &coeffs);
  return w.empty();
}

std::vector<int> Echelon::pivot_columns() const {
  std::vector<int> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.front().first);
  return out;
}

int rank(const SparseMatrix& m) {
  Echelon e(m.cols);
  for (const auto& r : m.data) e.insert(r);
  return e.rank();
}

std::vector<SparseVec> kernel(const SparseMatrix& m) {
  std::map<int, SparseVec> reduced;  // pivot column -> row
  {
    Echelon e(m.cols);
    for (const auto& r : m.data) {
      SparseVec w = e.reduce(r);
      if (w.empty()) continue;
      e.insert(w);
      w = sparse_scale(w, w.front().second.inverse());
      reduced.emplace(w.front().first, std::move(w));
    }
  }
  // Back substitution, highest pivot first, gives the reduced echelon form.
  for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
    SparseVec row = it->second;
    for (const auto& [c, x] : it->second) {
      if (c == it->first) continue;
      auto jt = reduced.find(c);
      if (jt == reduced.end()) continue;
      row = sparse_axpy(row, -x, jt->second);
    }
    it->second = std::move(row);
  }
  std::vector<SparseVec> out;
  std::vector<bool> is_pivot(m.cols, false);
  for (const auto& [p, r] : reduced) is_pivot[p] = true;
  std::vector<std::vector<std::pair<int, GaussRat>>> by_free(m.cols);
  for (const auto& [p, r] : reduced)
    for (const auto& [c, x] : r)
      if (c != p) by_free[c].emplace_back(p, -x);
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    SparseVec v = by_free[f];
    v.emplace_back(f, GaussRat(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace mfcat
