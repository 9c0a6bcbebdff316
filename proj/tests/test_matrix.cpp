#include "nilfill/matrix.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nilfill;

TEST(Matrix, RankBasics) {
  EXPECT_EQ(rank(QMatrix::identity(2)), 2u);
  EXPECT_EQ(rank(QMatrix(3, 4)), 0u);
}

TEST(Matrix, KernelBasics) {
  EXPECT_TRUE(kernel_basis(QMatrix::identity(3)).empty());
  auto k = kernel_basis(QMatrix(2, 3));
  EXPECT_EQ(k.size(), 3u);
  EXPECT_EQ(rank(QMatrix::from_rows(k)), 3u);
}

TEST(Matrix, RankNullity) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    QMatrix m(4, 6);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 6; ++j) m(i, j) = rat(d(rng), 1 + (trial % 3));
    auto k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.size(), m.cols());
    for (const auto& v : k) EXPECT_TRUE(is_zero(m.apply(v)));
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(Matrix, SolveRoundTrip) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int trial = 0; trial < 25; ++trial) {
    QMatrix m(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = d(rng);
    QVector x0(5);
    for (auto& c : x0) c = rat(d(rng), 3);
    QVector b = m.apply(x0);
    auto x = solve(m, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(m.apply(*x), b);  // exact reproduction
  }
}

TEST(Matrix, SolveInconsistent) {
  QMatrix m(2, 1);
  m(0, 0) = 1;
  m(1, 0) = 1;
  EXPECT_FALSE(solve(m, QVector{rat(1), rat(2)}).has_value());
}

TEST(Matrix, SpanMembership) {
  std::vector<QVector> rows = {{rat(1), rat(0), rat(1)}, {rat(0), rat(1), rat(1)}};
  EXPECT_TRUE(in_span(rows, QVector{rat(1), rat(1), rat(2)}));
  EXPECT_FALSE(in_span(rows, QVector{rat(0), rat(0), rat(1)}));
}

TEST(Matrix, RrefIdempotent) {
  QMatrix m(3, 4);
  m(0, 1) = 2;
  m(1, 1) = 4;
  m(2, 3) = rat(1, 2);
  auto e1 = rref(m);
  auto e2 = rref(e1.mat);
  EXPECT_TRUE(e1.mat == e2.mat);
  EXPECT_EQ(e1.pivots, e2.pivots);
}
