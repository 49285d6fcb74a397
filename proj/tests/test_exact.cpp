#include <functional>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "ttr/exact.hpp"
#include "ttr/matrix.hpp"
#include "ttr/position_matrix.hpp"

namespace {

using ttr::BigInt;
using ttr::ExactMatrix;
using ttr::make_rational;
using ttr::Rational;

ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
  ExactMatrix m(rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t k = 0; k < rows.size(); ++k) m(j + 1, k + 1) = rows[j][k];
  return m;
}

ExactMatrix random_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  ExactMatrix m(n);
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t k = 1; k <= n; ++k) m(j, k) = make_rational(num(rng), den(rng));
  return m;
}

// Counts set partitions of {1..m} into exactly k blocks by enumerating
// restricted growth strings.
long count_partitions(int m, int k) {
  std::vector<int> a(static_cast<std::size_t>(m), 0);
  long count = 0;
  std::function<void(int, int)> rec = [&](int pos, int blocks) {
    if (pos == m) {
      if (blocks == k) ++count;
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      a[pos] = b;
      rec(pos + 1, std::max(blocks, b + 1));
    }
  };
  if (m == 0) return k == 0 ? 1 : 0;
  rec(0, 0);
  return count;
}

TEST(Rational, NormalizesOnConstruction) {
  const Rational half = make_rational(2, 4);
  EXPECT_EQ(half.get_num(), 1);
  EXPECT_EQ(half.get_den(), 2);
  const Rational neg = make_rational(3, -6);
  EXPECT_EQ(neg.get_num(), -1);
  EXPECT_EQ(neg.get_den(), 2);
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Rational, SerializesAsNumOverDen) {
  EXPECT_EQ(ttr::to_string(Rational(0)), "0/1");
  EXPECT_EQ(ttr::to_string(make_rational(6, 8)), "3/4");
  EXPECT_EQ(ttr::to_string(Rational(5)), "5/1");
  EXPECT_EQ(ttr::to_string(make_rational(-1, 3)), "-1/3");
}

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(ttr::parse_rational("3/6"), make_rational(1, 2));
  EXPECT_EQ(ttr::parse_rational("-2"), Rational(-2));
  EXPECT_EQ(ttr::parse_rational("0.25"), make_rational(1, 4));
  EXPECT_EQ(ttr::parse_rational("010"), Rational(10));
  EXPECT_EQ(ttr::parse_rational(".5"), make_rational(1, 2));
  EXPECT_THROW(ttr::parse_rational(""), std::invalid_argument);
  EXPECT_THROW(ttr::parse_rational("1/0"), std::domain_error);
  EXPECT_THROW(ttr::parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(ttr::parse_rational("-"), std::invalid_argument);
}

TEST(Combinatorics, Binomial) {
  EXPECT_EQ(ttr::binomial(5, 2), 10);
  EXPECT_EQ(ttr::binomial(3, 5), 0);
  EXPECT_EQ(ttr::binomial(10, 0), 1);
  EXPECT_EQ(ttr::binomial(-1, 0), 0);
  EXPECT_EQ(ttr::binomial(4, -1), 0);
}

TEST(Combinatorics, PascalRule) {
  for (long a = 1; a <= 30; ++a)
    for (long b = 0; b <= a; ++b)
      ASSERT_EQ(ttr::binomial(a, b), ttr::binomial(a - 1, b - 1) + ttr::binomial(a - 1, b)) << a << "," << b;
}

TEST(Combinatorics, FallingFactorial) {
  EXPECT_EQ(ttr::falling_factorial(5, 0), 1);
  EXPECT_EQ(ttr::falling_factorial(5, 3), 60);
  EXPECT_EQ(ttr::falling_factorial(3, 5), 0);
  EXPECT_THROW(ttr::falling_factorial(3, -1), std::domain_error);
}

TEST(Combinatorics, Stirling2BaseCasesAndEnumeration) {
  EXPECT_EQ(ttr::stirling2(0, 0), 1);
  EXPECT_EQ(ttr::stirling2(3, 2), 3);
  EXPECT_EQ(ttr::stirling2(4, 0), 0);
  EXPECT_EQ(ttr::stirling2(2, 5), 0);
  for (int m = 0; m <= 8; ++m)
    for (int k = 0; k <= m; ++k) ASSERT_EQ(ttr::stirling2(m, k), count_partitions(m, k)) << m << "," << k;
}

TEST(Combinatorics, StirlingFallingFactorialIdentity) {
  auto lhs = [](long m, long n) {
    BigInt s = 0;
    for (long k = 0; k <= m; ++k) s += ttr::stirling2(m, k) * ttr::falling_factorial(n, k);
    return s;
  };
  EXPECT_EQ(lhs(5, 4), 1024);
  for (long m = 0; m <= 12; ++m)
    for (long n = 1; n <= 12; ++n) ASSERT_EQ(lhs(m, n), ttr::ipow(BigInt(n), m)) << m << "," << n;
}

TEST(Combinatorics, ZeroPowerConvention) {
  EXPECT_EQ(ttr::ipow(BigInt(0), 0), 1);
  EXPECT_EQ(ttr::ipow(BigInt(0), 3), 0);
  EXPECT_EQ(ttr::ipow(make_rational(2, 3), 3), make_rational(8, 27));
}

TEST(Matrix, IdentityProduct) {
  const auto id = ExactMatrix::identity(4);
  EXPECT_EQ(ttr::mat_mul(id, id), id);
}

TEST(Matrix, TwoCardPositionMatrixSquared) {
  const Rational h = make_rational(1, 2);
  const auto p = from_rows({{h, h}, {h, h}});
  EXPECT_EQ(ttr::mat_mul(p, p), p);
  EXPECT_EQ(ttr::mat_pow(p, 5), p);
}

TEST(Matrix, DimensionMismatchThrows) {
  EXPECT_THROW(ttr::mat_mul(ExactMatrix(2), ExactMatrix(3)), std::invalid_argument);
  EXPECT_THROW(ExactMatrix(0), std::invalid_argument);
  EXPECT_THROW(ExactMatrix(2).at(3, 1), std::out_of_range);
}

TEST(Matrix, StochasticClosure) {
  const auto p = ttr::build_position_matrix(ttr::DeckSpec(6));
  const auto pp = ttr::mat_mul(p, p);
  for (std::size_t j = 1; j <= 6; ++j) EXPECT_EQ(pp.row_sum(j), 1);
  EXPECT_TRUE(ttr::is_doubly_stochastic(pp));
}

TEST(Matrix, ZerothPowerIsIdentity) {
  EXPECT_EQ(ttr::mat_pow(ttr::build_position_matrix(ttr::DeckSpec(4)), 0), ExactMatrix::identity(4));
}

TEST(Matrix, FirstRowStaysUniform) {
  const auto p3 = ttr::mat_pow(ttr::build_position_matrix(ttr::DeckSpec(6)), 3);
  for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(p3(1, k), make_rational(1, 6));
}

TEST(Matrix, PowersCompose) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto a = random_matrix(rng, n);
    const unsigned long i = trial % 4, j = (trial * 7) % 5;
    ASSERT_EQ(ttr::mat_pow(a, i + j), ttr::mat_mul(ttr::mat_pow(a, i), ttr::mat_pow(a, j))) << "trial " << trial;
  }
}

TEST(Matrix, SquareAndMultiplyMatchesRepeatedProduct) {
  std::mt19937 rng(7);
  const auto a = random_matrix(rng, 3);
  ExactMatrix slow = ExactMatrix::identity(3);
  for (unsigned long m = 0; m <= 9; ++m) {
    ASSERT_EQ(ttr::mat_pow(a, m), slow) << m;
    slow = ttr::mat_mul(slow, a);
  }
}

}  // namespace
