#pragma once

#include <map>
#include <utility>
#include <vector>

#include "operad/scalar.hpp"

namespace opd {

// Sparse vector: (index, coefficient) pairs with strictly increasing indices
// and nonzero coefficients.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec sparse_axpy(const SparseVec& x, const Scalar& c, const SparseVec& y);  // x + c*y
SparseVec sparse_scale(const Scalar& c, const SparseVec& x);
bool sparse_is_zero(const SparseVec& x);
std::vector<Scalar> sparse_to_dense(const Field& f, int dim, const SparseVec& x);
SparseVec sparse_from_dense(const std::vector<Scalar>& x);

// Incrementally maintained reduced row-echelon basis of a growing span.
// Rows are keyed by pivot column; every row has leading coefficient 1 and
// zero entries in all other rows' pivot columns, so reduction against the
// basis is a single left-to-right pass.
class EchelonBasis {
public:
  explicit EchelonBasis(const Field& f) : f_(f) {}

  // Residue of v modulo the current span.
  SparseVec reduce(SparseVec v) const;
  // Adds v's residue to the basis; returns false when v was already in the
  // span (rank unchanged).
  bool add(SparseVec v);
  bool contains(const SparseVec& v) const { return sparse_is_zero(reduce(v)); }

  int rank() const { return static_cast<int>(rows_.size()); }
  std::vector<int> pivot_columns() const;
  const std::map<int, SparseVec>& rows() const { return rows_; }
  const Field& field() const { return f_; }

private:
  Field f_;
  std::map<int, SparseVec> rows_;
};

}  // namespace opd
