#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "operad/scalar.hpp"

namespace opd {

// Dense matrix over one field, row-major.  Immutable use after construction
// is thread-safe; the mutating accessors are for building values.
class Matrix {
public:
  Matrix(const Field& f, int rows, int cols);
  static Matrix identity(const Field& f, int n);
  // Convenience for integer literals in tests and small fixtures.
  static Matrix from_rows(const Field& f,
                          std::initializer_list<std::initializer_list<long>> rows);
  // Assemble from column vectors living in a space of dimension `rows`.
  static Matrix from_columns(const Field& f, int rows,
                             const std::vector<std::vector<Scalar>>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return f_; }

  const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  void set(int i, int j, Scalar v) { a_[static_cast<size_t>(i) * cols_ + j] = std::move(v); }

  std::vector<Scalar> column(int j) const;
  std::vector<Scalar> row(int i) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;
  // [this | right], matching row counts.
  Matrix augment(const Matrix& right) const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;

private:
  int rows_;
  int cols_;
  Field f_;
  std::vector<Scalar> a_;
};

struct Rref {
  Matrix matrix;
  int rank;
  std::vector<int> pivot_columns;
};

// Reduced row-echelon form with deterministic pivoting (leftmost column,
// topmost unused row).  Over Q the elimination runs fraction-free on a
// denominator-cleared integer copy to control entry growth.
Rref rref(const Matrix& m);
int rank(const Matrix& m);

// Columns span ker m; column count = cols - rank.  Deterministic: one column
// per free column of the reduced form, in increasing column order.
Matrix kernel_basis(const Matrix& m);

// Exact solution of m x = b, or nullopt when b is outside the column span.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

// Solve m x = r for every column r of rhs with a single elimination; every
// column must lie in the span (throws otherwise).  Column j of the result
// solves against column j of rhs.
Matrix solve_columns(const Matrix& m, const Matrix& rhs);

// Span algebra on column spans inside one ambient space.
struct SubspaceOps {
  Matrix intersection;              // basis of span(a) ∩ span(b)
  Matrix sum;                       // basis of span(a) + span(b)
  Matrix quotient_representatives;  // columns of b spanning span(a+b)/span(a)
};
SubspaceOps subspace_ops(const Matrix& a, const Matrix& b);

}  // namespace opd
