#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "operad/matrix.hpp"
#include "operad/sparse.hpp"

using namespace opd;

namespace {

const Field Q = Field::rationals();

Matrix random_matrix(const Field& f, int rows, int cols, std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(-4, 4);
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m.set(i, j, Scalar(f, entry(rng)));
  }
  return m;
}

std::vector<Scalar> random_vector(const Field& f, int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(-4, 4);
  std::vector<Scalar> v;
  v.reserve(n);
  for (int i = 0; i < n; ++i) v.emplace_back(f, entry(rng));
  return v;
}

}  // namespace

TEST_CASE("field tags") {
  CHECK(Q.is_rationals());
  CHECK(Field::prime_field(2).characteristic() == 2);
  CHECK(Field::prime_field(101).to_string() == "Fp:101");
  CHECK_THROWS(Field::prime_field(6));
  CHECK_THROWS(Field::prime_field(1));
}

TEST_CASE("scalar arithmetic stays reduced") {
  const Scalar third = Scalar::fraction(Q, 1, 3);
  const Scalar sixth = Scalar::fraction(Q, 1, 6);
  CHECK((third + sixth).to_string() == "1/2");
  CHECK((third - third).is_zero());
  CHECK((third * Scalar(Q, 3)).is_one());
  CHECK(Scalar::fraction(Q, 2, -4).to_string() == "-1/2");
  CHECK(Scalar::parse(Q, "-7/14").to_string() == "-1/2");
  CHECK_THROWS(Scalar(Q, 1) / Scalar(Q, 0));

  const Field f5 = Field::prime_field(5);
  CHECK(Scalar(f5, 7).to_string() == "2");
  CHECK((Scalar(f5, 2) / Scalar(f5, 3)).to_string() == "4");  // 2 * 3^-1 = 2*2
  CHECK(Scalar::parse(f5, "1/2").to_string() == "3");
  CHECK_THROWS(Scalar(Q, 1) + Scalar(f5, 1));
}

TEST_CASE("rref handles the degenerate shapes") {
  const Rref id2 = rref(Matrix::identity(Q, 2));
  CHECK(id2.rank == 2);
  CHECK(id2.pivot_columns == std::vector<int>{0, 1});
  CHECK(id2.matrix == Matrix::identity(Q, 2));

  const Rref zero3 = rref(Matrix(Q, 3, 3));
  CHECK(zero3.rank == 0);
  CHECK(zero3.pivot_columns.empty());

  const Rref prop = rref(Matrix::from_rows(Q, {{1, 2}, {2, 4}}));
  CHECK(prop.rank == 1);
  CHECK(prop.matrix == Matrix::from_rows(Q, {{1, 2}, {0, 0}}));
}

TEST_CASE("rref normalizes fractions exactly") {
  Matrix m(Q, 2, 3);
  m.set(0, 0, Scalar::fraction(Q, 1, 2));
  m.set(0, 1, Scalar::fraction(Q, 1, 3));
  m.set(0, 2, Scalar(Q, 1));
  m.set(1, 0, Scalar::fraction(Q, 1, 4));
  m.set(1, 1, Scalar::fraction(Q, 1, 5));
  m.set(1, 2, Scalar(Q, 1));
  const Rref red = rref(m);
  CHECK(red.rank == 2);
  CHECK(red.matrix.at(0, 0).is_one());
  CHECK(red.matrix.at(1, 1).is_one());
  CHECK(red.matrix.at(0, 1).is_zero());
  CHECK(red.matrix.at(1, 0).is_zero());
  // Solve the same system directly and compare.
  const auto x = solve(
      Matrix::from_columns(Q, 2, {m.column(0), m.column(1)}),
      m.column(2));
  REQUIRE(x.has_value());
  CHECK((*x)[0] == red.matrix.at(0, 2));
  CHECK((*x)[1] == red.matrix.at(1, 2));
}

TEST_CASE("kernel bases") {
  CHECK(kernel_basis(Matrix::identity(Q, 4)).cols() == 0);
  const Matrix k0 = kernel_basis(Matrix(Q, 3, 3));
  CHECK(k0.cols() == 3);
  CHECK(rank(k0) == 3);

  const Field f2 = Field::prime_field(2);
  const Matrix k = kernel_basis(Matrix::from_rows(f2, {{1, 1}}));
  REQUIRE(k.cols() == 1);
  CHECK(k.at(0, 0).is_one());
  CHECK(k.at(1, 0).is_one());
}

TEST_CASE("solve") {
  const Matrix id = Matrix::identity(Q, 3);
  const std::vector<Scalar> b{Scalar(Q, 3), Scalar(Q, -1), Scalar::fraction(Q, 2, 7)};
  CHECK(solve(id, b) == b);

  CHECK_FALSE(solve(Matrix(Q, 2, 2), {Scalar(Q, 1), Scalar(Q, 0)}).has_value());

  const auto half = solve(Matrix::from_rows(Q, {{2}}), {Scalar(Q, 1)});
  REQUIRE(half.has_value());
  CHECK((*half)[0] == Scalar::fraction(Q, 1, 2));
}

TEST_CASE("subspace algebra") {
  const Matrix a = Matrix::from_rows(Q, {{1, 0}, {0, 1}, {0, 0}, {0, 0}});
  SUBCASE("equal spans") {
    const SubspaceOps ops = subspace_ops(a, a);
    CHECK(rank(ops.intersection) == 2);
    CHECK(rank(ops.sum) == 2);
    CHECK(ops.quotient_representatives.cols() == 0);
  }
  SUBCASE("orthogonal coordinate spans") {
    const Matrix b = Matrix::from_rows(Q, {{0, 0}, {0, 0}, {1, 0}, {0, 1}});
    const SubspaceOps ops = subspace_ops(a, b);
    CHECK(ops.intersection.cols() == 0);
    CHECK(rank(ops.sum) == 4);
    CHECK(ops.quotient_representatives.cols() == 2);
  }
  SUBCASE("diagonal line against the plane") {
    const Matrix line = Matrix::from_rows(Q, {{1}, {1}});
    const Matrix plane = Matrix::identity(Q, 2);
    const SubspaceOps ops = subspace_ops(line, plane);
    CHECK(rank(ops.intersection) == 1);
    CHECK(ops.quotient_representatives.cols() == 1);
  }
}

TEST_CASE("rref is idempotent and rank-nullity holds on random input") {
  std::mt19937 rng(20260822);
  for (const Field& f : {Q, Field::prime_field(2), Field::prime_field(97)}) {
    for (int trial = 0; trial < 12; ++trial) {
      const int rows = 1 + static_cast<int>(rng() % 12);
      const int cols = 1 + static_cast<int>(rng() % 12);
      const Matrix m = random_matrix(f, rows, cols, rng);
      const Rref red = rref(m);
      const Rref again = rref(red.matrix);
      CHECK(again.matrix == red.matrix);
      CHECK(again.rank == red.rank);

      const Matrix k = kernel_basis(m);
      CHECK(red.rank + k.cols() == cols);
      CHECK((m * k).is_zero());
      if (k.cols() > 0) CHECK(rank(k) == k.cols());
    }
  }
}

TEST_CASE("rank is stable on bigger random matrices") {
  std::mt19937 rng(7);
  const Matrix m = random_matrix(Q, 50, 50, rng);
  const int r = rank(m);
  CHECK(r == rank(m.transpose()));
  CHECK(r + kernel_basis(m).cols() == 50);
}

TEST_CASE("solve reproduces matrix-vector products") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 8);
    const int cols = 1 + static_cast<int>(rng() % 8);
    const Matrix m = random_matrix(Q, rows, cols, rng);
    const auto x = random_vector(Q, cols, rng);
    const auto b = m.apply(x);
    const auto got = solve(m, b);
    REQUIRE(got.has_value());
    CHECK(m.apply(*got) == b);
  }
}

TEST_CASE("subspace dimension formula on random spans") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 10; ++trial) {
    const int dim = 3 + static_cast<int>(rng() % 5);
    const Matrix a = random_matrix(Q, dim, 1 + static_cast<int>(rng() % 4), rng);
    const Matrix b = random_matrix(Q, dim, 1 + static_cast<int>(rng() % 4), rng);
    const SubspaceOps ops = subspace_ops(a, b);
    CHECK(rank(ops.sum) + rank(ops.intersection) == rank(a) + rank(b));
    CHECK(rank(a) + ops.quotient_representatives.cols() == rank(ops.sum));
    CHECK(ops.sum.cols() == rank(ops.sum));
    CHECK(ops.intersection.cols() == rank(ops.intersection));
  }
}

TEST_CASE("echelon basis matches dense ranks") {
  std::mt19937 rng(1234);
  for (const Field& f : {Q, Field::prime_field(5)}) {
    for (int trial = 0; trial < 8; ++trial) {
      const int dim = 6 + static_cast<int>(rng() % 6);
      const int count = 1 + static_cast<int>(rng() % 10);
      const Matrix m = random_matrix(f, dim, count, rng);
      EchelonBasis basis(f);
      for (int j = 0; j < count; ++j) {
        basis.add(sparse_from_dense(m.column(j)));
      }
      CHECK(basis.rank() == rank(m));
      // Every original column reduces to zero against the accumulated span.
      for (int j = 0; j < count; ++j) {
        CHECK(basis.contains(sparse_from_dense(m.column(j))));
      }
    }
  }
}

TEST_CASE("echelon basis keeps rows fully reduced") {
  EchelonBasis basis(Q);
  basis.add({{0, Scalar(Q, 2)}, {2, Scalar(Q, 4)}});
  basis.add({{0, Scalar(Q, 1)}, {1, Scalar(Q, 1)}, {2, Scalar(Q, 2)}});
  basis.add({{2, Scalar(Q, 5)}});
  CHECK(basis.rank() == 3);
  for (const auto& [pivot, row] : basis.rows()) {
    CHECK(row[0].first == pivot);
    CHECK(row[0].second.is_one());
    // No row touches another row's pivot column.
    for (const auto& [other_pivot, other_row] : basis.rows()) {
      if (other_pivot == pivot) continue;
      for (const auto& [idx, coef] : other_row) {
        CHECK(idx != pivot);
      }
    }
  }
  CHECK(basis.contains({{0, Scalar(Q, 7)}, {1, Scalar(Q, -2)}, {2, Scalar(Q, 1)}}));
  CHECK_FALSE(basis.add({{1, Scalar(Q, 3)}, {2, Scalar(Q, 1)}}));
}

TEST_CASE("sparse vector arithmetic") {
  const SparseVec x{{0, Scalar(Q, 1)}, {3, Scalar(Q, 2)}};
  const SparseVec y{{0, Scalar(Q, -1)}, {1, Scalar(Q, 5)}, {3, Scalar(Q, 1)}};
  const SparseVec sum = sparse_axpy(x, Scalar(Q, 1), y);
  CHECK(sum == SparseVec{{1, Scalar(Q, 5)}, {3, Scalar(Q, 3)}});
  CHECK(sparse_is_zero(sparse_axpy(x, Scalar(Q, -1), x)));
  CHECK(sparse_scale(Scalar(Q, 0), x).empty());
  const auto dense = sparse_to_dense(Q, 5, x);
  CHECK(sparse_from_dense(dense) == x);
}
