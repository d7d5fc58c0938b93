#include <gtest/gtest.h>

#include <random>

#include "naive.hpp"
#include "plumbtight/lattice.hpp"
#include "plumbtight/rational.hpp"

namespace pt = plumbtight;
using pt::IntMatrix;
using pt::Rational;

namespace {

IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-3, 3);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = d(rng);
  return m;
}

IntMatrix chain(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = -2;
    if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = 1;
  }
  return m;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("3/6").str(), "1/2");
  EXPECT_EQ(Rational::parse("-4/2").str(), "-2");
  EXPECT_EQ(Rational::parse("7").str(), "7");
  EXPECT_THROW(Rational::parse("x/2"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, FloorCeilReciprocal) {
  EXPECT_EQ(Rational::parse("-7/2").floor(), -4);
  EXPECT_EQ(Rational::parse("-7/2").ceil(), -3);
  EXPECT_EQ(Rational::parse("7/2").floor(), 3);
  EXPECT_EQ(Rational::parse("-2/3").reciprocal(), Rational::parse("-3/2"));
  EXPECT_THROW(Rational(0).reciprocal(), std::domain_error);
  EXPECT_LT(Rational::parse("1/3"), Rational::parse("1/2"));
}

TEST(Lattice, DeterminantMatchesLaplace) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const IntMatrix m = random_symmetric(rng, 1 + t % 6);
    EXPECT_EQ(pt::determinant(m), pt::testing::naive_determinant(m));
  }
}

TEST(Lattice, SolveAndInverseSquare) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix m = random_symmetric(rng, 1 + t % 5);
    std::vector<std::int64_t> rhs(m.rows());
    std::vector<Rational> rhs_q(m.rows());
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs_q[i] = Rational(static_cast<long>(rhs[i] = d(rng)));
    const auto naive = pt::testing::naive_solve(m, rhs_q);
    if (!naive) {
      EXPECT_THROW(pt::solve(m, rhs), std::domain_error);
      continue;
    }
    EXPECT_EQ(pt::solve(m, rhs), *naive);
    Rational sq;
    for (std::size_t i = 0; i < rhs.size(); ++i) sq += rhs_q[i] * (*naive)[i];
    EXPECT_EQ(pt::inverse_square(m, rhs), sq);
  }
}

TEST(Lattice, SignatureMatchesDescartes) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix m = random_symmetric(rng, 1 + t % 5);
    if (pt::determinant(m) == 0) continue;
    const auto sr = pt::signature_b2(m);
    EXPECT_EQ(sr.signature, pt::testing::naive_signature(m));
    EXPECT_EQ(sr.b2, static_cast<int>(m.rows()));
  }
}

TEST(Lattice, InverseFormSquare) {
  const IntMatrix q = chain(4);
  const pt::InverseForm inv(q);
  EXPECT_EQ(inv.det(), 5);
  const std::vector<std::int32_t> k{0, 2, 0, -2};
  const std::vector<std::int64_t> k64(k.begin(), k.end());
  EXPECT_EQ(inv.square(k), pt::inverse_square(q, k64));
}

TEST(Lattice, CosetReducerCanonical) {
  IntMatrix two_q = chain(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) two_q(i, j) *= 2;
  const pt::CosetReducer red(two_q);
  EXPECT_EQ(red.index(), 32);  // 2^3 * |det|
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::int32_t> v{d(rng), d(rng), d(rng)}, w = v;
    const std::size_t col = t % 3;
    const int mult = d(rng);
    for (std::size_t i = 0; i < 3; ++i) w[i] += mult * static_cast<std::int32_t>(two_q(i, col));
    EXPECT_EQ(red.reduce(v), red.reduce(w));
    EXPECT_TRUE(red.same_coset(v, w));
    const auto r = red.reduce(v);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_GE(r[i], 0);
      EXPECT_LT(r[i], red.hermite()(i, i) < 0 ? -red.hermite()(i, i) : red.hermite()(i, i));
    }
  }
}
