#include "operad/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace opd {

Matrix::Matrix(const Field& f, int rows, int cols)
    : rows_(rows), cols_(cols), f_(f),
      a_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

Matrix Matrix::from_rows(const Field& f,
                         std::initializer_list<std::initializer_list<long>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  Matrix m(f, r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) {
      throw std::invalid_argument("ragged matrix literal");
    }
    int j = 0;
    for (long v : row) m.set(i, j++, Scalar(f, v));
    ++i;
  }
  return m;
}

Matrix Matrix::from_columns(const Field& f, int rows,
                            const std::vector<std::vector<Scalar>>& cols) {
  Matrix m(f, rows, static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    if (static_cast<int>(cols[j].size()) != rows) {
      throw std::invalid_argument("column length mismatch");
    }
    for (int i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

std::vector<Scalar> Matrix::column(int j) const {
  std::vector<Scalar> v;
  v.reserve(rows_);
  for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

std::vector<Scalar> Matrix::row(int i) const {
  std::vector<Scalar> v;
  v.reserve(cols_);
  for (int j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  }
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (!(f_ == o.f_)) throw std::logic_error("mixed-field matrix product");
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix p(f_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        p.set(i, j, p.at(i, j) + at(i, k) * o.at(k, j));
      }
    }
  }
  return p;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
  if (static_cast<int>(x.size()) != cols_) {
    throw std::invalid_argument("matrix-vector shape mismatch");
  }
  std::vector<Scalar> y(rows_, Scalar::zero(f_));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || x[j].is_zero()) continue;
      y[i] += at(i, j) * x[j];
    }
  }
  return y;
}

Matrix Matrix::augment(const Matrix& right) const {
  if (rows_ != right.rows_) throw std::invalid_argument("augment row mismatch");
  Matrix m(f_, rows_, cols_ + right.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
    for (int j = 0; j < right.cols_; ++j) m.set(i, cols_ + j, right.at(i, j));
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& s : a_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && f_ == o.f_ && a_ == o.a_;
}

namespace {

// Forward phase over Q: fraction-free single-step elimination (Bareiss) on a
// denominator-cleared integer copy.  Entries stay minors of the input, so
// growth is polynomial instead of the exponential blowup naive fraction
// arithmetic can hit.
struct IntegerEchelon {
  std::vector<std::vector<mpz_class>> m;
  std::vector<int> pivot_columns;
};

IntegerEchelon bareiss_echelon(const Matrix& in) {
  const int rows = in.rows(), cols = in.cols();
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (int j = 0; j < cols; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), in.at(i, j).denominator().get_mpz_t());
    for (int j = 0; j < cols; ++j) {
      m[i][j] = in.at(i, j).numerator() * (lcm / in.at(i, j).denominator());
    }
  }

  IntegerEchelon out;
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

Rref rref_rational(const Matrix& in) {
  IntegerEchelon ech = bareiss_echelon(in);
  const Field f = in.field();
  const int cols = in.cols();
  Matrix red(f, in.rows(), cols);
  const int rank = static_cast<int>(ech.pivot_columns.size());

  // Normalize pivots to 1 and eliminate upward, now in exact rationals.
  std::vector<std::vector<mpq_class>> rows(rank, std::vector<mpq_class>(cols));
  for (int r = 0; r < rank; ++r) {
    const mpz_class& lead = ech.m[r][ech.pivot_columns[r]];
    for (int j = 0; j < cols; ++j) {
      rows[r][j] = mpq_class(ech.m[r][j], lead);
      rows[r][j].canonicalize();
    }
  }
  for (int r = rank - 1; r >= 0; --r) {
    for (int above = 0; above < r; ++above) {
      const mpq_class coef = rows[above][ech.pivot_columns[r]];
      if (coef == 0) continue;
      for (int j = ech.pivot_columns[r]; j < cols; ++j) {
        rows[above][j] -= coef * rows[r][j];
      }
    }
  }
  for (int r = 0; r < rank; ++r) {
    for (int j = 0; j < cols; ++j) {
      if (rows[r][j] == 0) continue;
      red.set(r, j, Scalar::from_mpq(f, rows[r][j]));
    }
  }
  return Rref{std::move(red), rank, std::move(ech.pivot_columns)};
}

Rref rref_mod_p(const Matrix& in) {
  Matrix m = in;
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (!m.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < cols; ++j) {
        Scalar t = m.at(r, j);
        m.set(r, j, m.at(pivot, j));
        m.set(pivot, j, t);
      }
    }
    const Scalar inv = m.at(r, c).inverse();
    for (int j = c; j < cols; ++j) m.set(r, j, m.at(r, j) * inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      const Scalar coef = m.at(i, c);
      for (int j = c; j < cols; ++j) {
        m.set(i, j, m.at(i, j) - coef * m.at(r, j));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  const int rank = static_cast<int>(pivots.size());
  return Rref{std::move(m), rank, std::move(pivots)};
}

}  // namespace

Rref rref(const Matrix& m) {
  return m.field().is_rationals() ? rref_rational(m) : rref_mod_p(m);
}

int rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  const Rref red = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : red.pivot_columns) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> cols;
  for (int j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<Scalar> x(m.cols(), Scalar::zero(f));
    x[j] = Scalar::one(f);
    for (int r = 0; r < red.rank; ++r) {
      x[red.pivot_columns[r]] = -red.matrix.at(r, j);
    }
    cols.push_back(std::move(x));
  }
  return Matrix::from_columns(f, m.cols(), cols);
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
  if (static_cast<int>(b.size()) != m.rows()) {
    throw std::invalid_argument("right-hand side length mismatch");
  }
  const Matrix aug = m.augment(Matrix::from_columns(m.field(), m.rows(), {b}));
  const Rref red = rref(aug);
  for (int c : red.pivot_columns) {
    if (c == m.cols()) return std::nullopt;  // pivot in the b column
  }
  std::vector<Scalar> x(m.cols(), Scalar::zero(m.field()));
  for (int r = 0; r < red.rank; ++r) {
    x[red.pivot_columns[r]] = red.matrix.at(r, m.cols());
  }
  return x;
}

Matrix solve_columns(const Matrix& m, const Matrix& rhs) {
  if (rhs.rows() != m.rows() || !(m.field() == rhs.field())) {
    throw std::invalid_argument("right-hand side shape mismatch");
  }
  const Rref red = rref(m.augment(rhs));
  for (int c : red.pivot_columns) {
    if (c >= m.cols()) throw std::invalid_argument("column outside the span");
  }
  std::vector<std::vector<Scalar>> out;
  for (int j = 0; j < rhs.cols(); ++j) {
    std::vector<Scalar> x(m.cols(), Scalar::zero(m.field()));
    for (int r = 0; r < red.rank; ++r) {
      x[red.pivot_columns[r]] = red.matrix.at(r, m.cols() + j);
    }
    out.push_back(std::move(x));
  }
  return Matrix::from_columns(m.field(), m.cols(), out);
}

namespace {

// Columns of m at the pivot positions of its reduced form: a deterministic
// independent spanning subset.
Matrix independent_columns(const Matrix& m) {
  const Rref red = rref(m);
  std::vector<std::vector<Scalar>> cols;
  for (int c : red.pivot_columns) cols.push_back(m.column(c));
  return Matrix::from_columns(m.field(), m.rows(), cols);
}

}  // namespace

SubspaceOps subspace_ops(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || !(a.field() == b.field())) {
    throw std::invalid_argument("subspace operands must share one ambient space");
  }
  const Field& f = a.field();
  const Matrix ab = a.augment(b);
  const Rref red = rref(ab);

  std::vector<std::vector<Scalar>> sum_cols, quot_cols;
  for (int c : red.pivot_columns) {
    sum_cols.push_back(ab.column(c));
    if (c >= a.cols()) quot_cols.push_back(b.column(c - a.cols()));
  }

  // Kernel vectors (x; y) of [a | -b] satisfy a x = b y, so a x runs over the
  // intersection.
  Matrix minus_b(f, b.rows(), b.cols());
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) minus_b.set(i, j, -b.at(i, j));
  }
  const Matrix ker = kernel_basis(a.augment(minus_b));
  std::vector<std::vector<Scalar>> inter_cols;
  for (int j = 0; j < ker.cols(); ++j) {
    const std::vector<Scalar> col = ker.column(j);
    std::vector<Scalar> x(col.begin(), col.begin() + a.cols());
    std::vector<Scalar> v = a.apply(x);
    bool zero = true;
    for (const auto& s : v) {
      if (!s.is_zero()) {
        zero = false;
        break;
      }
    }
    if (!zero) inter_cols.push_back(std::move(v));
  }

  return SubspaceOps{
      independent_columns(Matrix::from_columns(f, a.rows(), inter_cols)),
      Matrix::from_columns(f, a.rows(), sum_cols),
      Matrix::from_columns(f, a.rows(), quot_cols)};
}

}  // namespace opd
