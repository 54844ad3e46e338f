#include "operad/sparse.hpp"

namespace opd {

SparseVec sparse_axpy(const SparseVec& x, const Scalar& c, const SparseVec& y) {
  if (c.is_zero()) return x;
  SparseVec out;
  out.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j >= y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i >= x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, c * y[j].second);
      ++j;
    } else {
      Scalar s = x[i].second + c * y[j].second;
      if (!s.is_zero()) out.emplace_back(x[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sparse_scale(const Scalar& c, const SparseVec& x) {
  SparseVec out;
  if (c.is_zero()) return out;
  out.reserve(x.size());
  for (const auto& [idx, s] : x) out.emplace_back(idx, c * s);
  return out;
}

bool sparse_is_zero(const SparseVec& x) { return x.empty(); }

std::vector<Scalar> sparse_to_dense(const Field& f, int dim, const SparseVec& x) {
  std::vector<Scalar> out(dim, Scalar::zero(f));
  for (const auto& [idx, s] : x) out[idx] = s;
  return out;
}

SparseVec sparse_from_dense(const std::vector<Scalar>& x) {
  SparseVec out;
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    if (!x[i].is_zero()) out.emplace_back(i, x[i]);
  }
  return out;
}

SparseVec EchelonBasis::reduce(SparseVec v) const {
  // Entries can only appear at indices >= the current scan position, because
  // every basis row lives entirely on its pivot column and non-pivot columns
  // to the right of it.
  size_t pos = 0;
  while (pos < v.size()) {
    const auto it = rows_.find(v[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    v = sparse_axpy(v, -v[pos].second, it->second);
  }
  return v;
}

bool EchelonBasis::add(SparseVec v) {
  SparseVec r = reduce(std::move(v));
  if (r.empty()) return false;
  const int pivot = r[0].first;
  r = sparse_scale(r[0].second.inverse(), r);
  // Keep the reduced form: clear the new pivot column from existing rows.
  for (auto& [p, row] : rows_) {
    for (size_t k = 0; k < row.size(); ++k) {
      if (row[k].first == pivot) {
        row = sparse_axpy(row, -row[k].second, r);
        break;
      }
      if (row[k].first > pivot) break;
    }
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::vector<int> EchelonBasis::pivot_columns() const {
  std::vector<int> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

}  // namespace opd
