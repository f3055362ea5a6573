#include "frobtft/matrix.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace frobtft;

namespace {

Scalar rat(long p, long q = 1, long n = 1) { return Scalar::from_rational(Rational(p, q), n); }

Matrix random_matrix(std::mt19937_64& rng, size_t r, size_t c, long n) {
  std::uniform_int_distribution<int> num(-3, 3);
  Matrix m(r, c, n);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::from_rational(num(rng), n);
  return m;
}

}  // namespace

TEST(Matrix, KernelOfIdentityIsEmpty) {
  Matrix id = Matrix::identity(2, 1);
  EXPECT_EQ(id.kernel().cols(), 0u);
}

TEST(Matrix, KernelOfZeroRowIsFull) {
  Matrix z(1, 2, 1);
  EXPECT_EQ(z.kernel().cols(), 2u);
}

TEST(Matrix, KernelOfRankOne) {
  Matrix m(2, 2, 1);
  m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = rat(1);
  Matrix k = m.kernel();
  ASSERT_EQ(k.cols(), 1u);
  // spans (1, -1)
  EXPECT_EQ(k.at(0, 0) + k.at(1, 0), Scalar::zero(1));
  EXPECT_FALSE(k.at(0, 0).is_zero());
}

TEST(Matrix, KernelConsistencyProperty) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    size_t r = 1 + trial % 4, c = 1 + (trial * 7) % 5;
    Matrix m = random_matrix(rng, r, c, 1);
    Matrix k = m.kernel();
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(k.cols(), c - m.rank());
    if (k.cols() > 0) EXPECT_EQ(k.rank(), k.cols());
  }
}

TEST(Matrix, InverseRoundTrip) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_matrix(rng, 3, 3, 8);
    if (m.rank() < 3) continue;
    EXPECT_EQ(m * m.inverse(), Matrix::identity(3, 8));
  }
}

TEST(Matrix, SolveConsistent) {
  Matrix m(2, 2, 1);
  m.at(0, 0) = rat(2);
  m.at(1, 1) = rat(3);
  Matrix b(2, 1, 1);
  b.at(0, 0) = rat(4);
  b.at(1, 0) = rat(9);
  Matrix x = m.solve(b);
  EXPECT_EQ(m * x, b);
}

TEST(Matrix, SolveInconsistentThrows) {
  Matrix m(2, 1, 1);
  m.at(0, 0) = rat(1);
  m.at(1, 0) = rat(1);
  Matrix b(2, 1, 1);
  b.at(0, 0) = rat(1);
  b.at(1, 0) = rat(2);
  EXPECT_THROW(m.solve(b), Error);
}

TEST(Matrix, ColumnSpaceBasis) {
  Matrix m(2, 3, 1);
  m.at(0, 0) = rat(1);
  m.at(1, 0) = rat(1);
  m.at(0, 1) = rat(2);
  m.at(1, 1) = rat(2);
  m.at(0, 2) = rat(0);
  m.at(1, 2) = rat(1);
  Matrix b = m.column_space_basis();
  EXPECT_EQ(b.cols(), 2u);
  EXPECT_EQ(b.rank(), 2u);
}
