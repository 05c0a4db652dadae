#include <random>

#include <gtest/gtest.h>

#include "atlas/lattice.hpp"

namespace atlas {
namespace {

IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng) {
  IntMatrix m = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int step = 0; step < 12; ++step) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j)
      continue;
    IntMatrix e = IntMatrix::identity(n);
    e(i, j) = coeff(rng);
    m = e * m;
  }
  return m;
}

TEST(Lattice, MatrixArithmetic) {
  IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}});
  IntMatrix b = IntMatrix::from_columns({{1, 3}, {2, 4}}, 2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a * IntMatrix::identity(2), a);
  EXPECT_EQ(a.apply(IntVector{1, 1}), (IntVector{3, 7}));
  EXPECT_EQ(a.apply_left(IntVector{1, 1}), (IntVector{4, 6}));
  EXPECT_EQ(a.transpose(), IntMatrix::from_rows({{1, 3}, {2, 4}}));
  EXPECT_EQ(a - a, IntMatrix(2, 2));
}

TEST(Lattice, UnimodularInverseRoundTrips) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_unimodular(4, rng);
    EXPECT_TRUE((m * unimodular_inverse(m)).is_identity());
    EXPECT_TRUE((unimodular_inverse(m) * m).is_identity());
  }
  EXPECT_THROW(unimodular_inverse(IntMatrix::from_rows({{2, 0}, {0, 1}})), std::domain_error);
}

TEST(Lattice, SolveRational) {
  IntMatrix a = IntMatrix::from_columns({{1, -1, 0}, {0, 1, -1}}, 3);
  auto c = solve_rational(a, {Rational(1, 2), Rational(0), Rational(-1, 2)});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ((*c)[0], Rational(1, 2));
  EXPECT_EQ((*c)[1], Rational(1, 2));
  EXPECT_FALSE(solve_rational(a, {Rational(1), Rational(0), Rational(0)}).has_value());
  IntMatrix dependent = IntMatrix::from_columns({{1, 1}, {2, 2}}, 2);
  EXPECT_THROW(solve_rational(dependent, {Rational(1), Rational(1)}), std::invalid_argument);
}

TEST(Lattice, SmithInvariantsDivideAndMultiplyToDeterminant) {
  SmithForm s = smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}}));
  EXPECT_EQ(s.invariants, (std::vector<Int>{2, 4}));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        m(i, j) = entry(rng);
    SmithForm f = smith_normal_form(m);
    for (std::size_t i = 1; i < f.invariants.size(); ++i)
      EXPECT_EQ(f.invariants[i] % f.invariants[i - 1], 0);
    Int det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
              m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
              m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    if (det != 0) {
      ASSERT_EQ(f.invariants.size(), 3u);
      EXPECT_EQ(f.invariants[0] * f.invariants[1] * f.invariants[2], det < 0 ? -det : det);
    }
  }
}

TEST(Lattice, QuotientClassesAreAHomomorphism) {
  LatticeQuotient q(3, {{2, 0, 0}, {0, 1, 1}});
  EXPECT_EQ(q.free_rank(), 1u);
  EXPECT_EQ(q.torsion_moduli(), (std::vector<Int>{2}));
  EXPECT_FALSE(q.is_finite());
  EXPECT_EQ(q.classify({2, 0, 0}), q.zero());
  EXPECT_EQ(q.classify({0, 3, 3}), q.zero());
  EXPECT_NE(q.classify({1, 0, 0}), q.zero());
  EXPECT_NE(q.classify({0, 1, 0}), q.zero());
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Int> entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    IntVector a{entry(rng), entry(rng), entry(rng)}, b{entry(rng), entry(rng), entry(rng)};
    EXPECT_EQ(q.classify(add(a, b)), q.add(q.classify(a), q.classify(b)));
  }
}

TEST(Lattice, RationalFormatting) {
  EXPECT_EQ(to_string(Rational(1, 2)), "1/2");
  EXPECT_EQ(to_string(Rational(-3)), "-3");
  EXPECT_EQ(to_string(Rational(4, 6)), "2/3");
}

}  // namespace
}  // namespace atlas
