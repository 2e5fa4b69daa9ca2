#include "minrep/half_integer.hpp"
#include "minrep/linalg.hpp"
#include "minrep/rational.hpp"
#include "minrep/rng.hpp"

#include <gtest/gtest.h>

using namespace minrep;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-2")), "-2");
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(HalfInteger, Arithmetic) {
  const auto h = HalfInteger::from_twice(-1);
  EXPECT_EQ(h.str(), "-1/2");
  EXPECT_EQ((h + 1).str(), "1/2");
  EXPECT_EQ(h.abs().twice(), 1);
  EXPECT_FALSE(h.is_integer());
  EXPECT_EQ(HalfInteger::from_rational(Rational(3, 2)).twice(), 3);
  EXPECT_THROW(HalfInteger::from_rational(Rational(1, 3)), std::invalid_argument);
  EXPECT_LT(HalfInteger::from_twice(-3), HalfInteger::from_int(0));
}

TEST(Linalg, KernelAndRank) {
  RationalMatrix m(2, 3);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(0, 2) = 3;
  m(1, 0) = 2;
  m(1, 1) = 4;
  m(1, 2) = 6;
  EXPECT_EQ(rank(m), 1u);
  const auto k = kernel(m);
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k) EXPECT_EQ(v[0] + 2 * v[1] + 3 * v[2], 0);
}

TEST(Linalg, SolveAndPositiveDefinite) {
  RationalMatrix a = RationalMatrix::identity(2);
  a(0, 1) = 1;
  const auto x = solve(a, {Rational(3), Rational(1)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], 2);
  EXPECT_EQ((*x)[1], 1);
  RationalMatrix s(2, 2);
  s(0, 0) = 2;
  s(0, 1) = s(1, 0) = 1;
  s(1, 1) = 1;
  EXPECT_TRUE(is_positive_definite(s));
  s(1, 1) = Rational(1, 2);
  EXPECT_FALSE(is_positive_definite(s));
}

TEST(Linalg, Subspace) {
  Subspace s(3);
  EXPECT_TRUE(s.insert({1, 1, 0}));
  EXPECT_FALSE(s.insert({2, 2, 0}));
  EXPECT_TRUE(s.contains({3, 3, 0}));
  EXPECT_FALSE(s.contains({0, 0, 1}));
}

TEST(Rng, DerivedSeedsAreReproducible) {
  EXPECT_EQ(derive_seed(0, 5), derive_seed(0, 5));
  EXPECT_NE(derive_seed(0, 5), derive_seed(0, 6));
  Rng a(derive_seed(1, 2));
  Rng b(derive_seed(1, 2));
  for (int i = 0; i < 100; ++i) EXPECT_EQ(uniform_int(a, -3, 3), uniform_int(b, -3, 3));
}
